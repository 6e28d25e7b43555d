#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace upcolor {

enum class ErrorCode {
    LoopEdge,
    DuplicateEdge,
    VertexOutOfRange,
    LengthMismatch,
    ImproperColoring,
    TooLarge,
    Infeasible,
    NotATree,
    NotDominating,
    ImproperBase,
    InternalVerificationFailed,
    EmptyCollection,
    EmptyFormula,
    NotBalanced,
    TooManyOccurrences,
    BadAssignmentLength,
    BadParameters,
    UnsupportedFamily,
    SyntaxError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status and a machine-readable error field.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace upcolor
