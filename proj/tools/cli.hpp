#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "upcolor/error.hpp"

namespace upcolor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitTooLarge = 4;
inline constexpr int kExitVerification = 5;

int exit_code_for(ErrorCode code);

/// Runs one command line (args excludes the program name) writing the report
/// to out and diagnostics to err; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace upcolor::cli
