#pragma once

// Branch-and-bound over 64-bit vertex masks. Every "choose a set of vertices
// so that each vertex is covered" question in the library (classic and
// up-color domination, weighted or not) reduces to this search.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "upcolor/exact.hpp"
#include "upcolor/graph.hpp"

namespace upcolor::detail {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }
inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

struct MaskGraph {
    std::size_t n = 0;
    std::vector<Mask> adj;
};

MaskGraph to_masks(const Graph& g);

/// Throws TooLarge when n exceeds the limit (or the 64-vertex mask width).
void require_order(std::size_t n, std::size_t limit, const char* what);

struct CoverProblem {
    std::size_t n = 0;
    std::vector<Mask> coverers;  // element -> vertices able to cover it
    std::vector<Mask> covers;    // vertex -> elements it covers
    std::vector<Weight> cost;    // vertex -> objective contribution
    Mask allowed = 0;            // vertices that may be chosen
};

/// Objective key: primary cost, then cardinality.
struct CoverKey {
    Weight primary = 0;
    std::size_t card = 0;
    friend auto operator<=>(const CoverKey&, const CoverKey&) = default;
};

struct CoverSolution {
    CoverKey key;
    Mask chosen = 0;
};

/// Minimum-key cover strictly below `below` (if given) that contains
/// `forced_in` and avoids `forced_out`. With `first_only` the search stops at
/// the first such cover instead of optimising.
std::optional<CoverSolution> solve_cover(const CoverProblem& p, std::optional<CoverKey> below, Mask forced_in = 0,
                                         Mask forced_out = 0, bool first_only = false);

/// Lexicographically smallest cover achieving exactly `optimum`.
Mask lexmin_cover(const CoverProblem& p, CoverKey optimum, Mask forced_in = 0);

/// Classic domination: coverers are closed neighbourhoods, unit cost.
CoverProblem domination_problem(const MaskGraph& g);

/// Up-color domination for a colouring: v is covered by itself when its
/// colour is positive, or by any neighbour of strictly higher colour.
/// `weighted` selects colour costs instead of unit costs.
CoverProblem up_color_problem(const MaskGraph& g, std::span<const Color> colors, bool weighted);

/// Vertices with no strictly higher-coloured neighbour.
Mask local_maxima_mask(const MaskGraph& g, std::span<const Color> colors);

}  // namespace upcolor::detail
