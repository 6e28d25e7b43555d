#pragma once

// Exhaustive and branch-and-bound computation of every parameter. These are
// the ground truth the tree algorithms and reductions are checked against.

#include <cstddef>
#include <optional>
#include <vector>

#include "upcolor/graph.hpp"

namespace upcolor {

/// Size guards for the exponential searches. All searches use 64-bit vertex
/// masks internally, so no limit may exceed 64.
struct SearchLimits {
    std::size_t search_limit = 24;    // fixed-colouring searches and classic invariants
    std::size_t coloring_limit = 10;  // searches over all colourings
};

inline constexpr std::size_t kMaskLimit = 64;

struct ClassicInvariants {
    std::size_t gamma = 0;    // domination number
    std::size_t i = 0;        // independent domination number
    std::size_t alpha = 0;    // independence number
    std::size_t chi = 0;      // chromatic number
    std::size_t theta = 0;    // clique cover number (chi of the complement)
    std::size_t gamma_r = 0;  // Roman domination number
};

enum class Role { Dominant, Submissive };

struct DominationResult {
    bool feasible = false;
    std::size_t size = 0;
    Weight weight = 0;
    VertexSet witness;
    std::vector<Role> roles;
};

struct ColoringSearchResult {
    Weight value = 0;
    Coloring best_coloring;
    DominationResult witness;
};

struct ChiUcResult {
    std::size_t colors = 0;
    Coloring witness;
};

/// Exact gamma, i, alpha, chi, theta and gamma_r.
ClassicInvariants classic_invariants(const Graph& g, const SearchLimits& limits = {});

std::size_t domination_number(const Graph& g, const SearchLimits& limits = {});
/// A minimum dominating set, lexicographically smallest among the minimum ones.
VertexSet minimum_dominating_set(const Graph& g, const SearchLimits& limits = {});
std::size_t independent_domination_number(const Graph& g, const SearchLimits& limits = {});
VertexSet minimum_independent_dominating_set(const Graph& g, const SearchLimits& limits = {});
std::size_t independence_number(const Graph& g, const SearchLimits& limits = {});
std::size_t roman_domination_number(const Graph& g, const SearchLimits& limits = {});

/// Chromatic number with an optimal colouring using colours 0..chi-1.
struct ChromaticResult {
    std::size_t chi = 0;
    Coloring coloring;
};
ChromaticResult chromatic_number(const Graph& g, const SearchLimits& limits = {});
/// Backtracking decision: does g admit a proper colouring with k colours?
std::optional<Coloring> find_k_coloring(const Graph& g, std::size_t k, const SearchLimits& limits = {});

/// Minimum-cardinality up-color dominating set; ties resolved towards the
/// lexicographically smallest vertex set.
DominationResult gamma_uc_exact(const ColoredGraph& cg, const SearchLimits& limits = {});
/// Minimum-weight up-color dominating set; ties by cardinality, then
/// lexicographically smallest vertex set.
DominationResult omega_uc_exact(const ColoredGraph& cg, const SearchLimits& limits = {});

/// Value-only searches; `below` is an exclusive upper bound. They return
/// nullopt when nothing strictly below the bound exists.
std::optional<std::size_t> gamma_uc_value(const ColoredGraph& cg, std::optional<std::size_t> below = std::nullopt,
                                          const SearchLimits& limits = {});
std::optional<Weight> omega_uc_value(const ColoredGraph& cg, std::optional<Weight> below = std::nullopt,
                                     const SearchLimits& limits = {});

/// Minimum of omega_uc over all proper colourings (searched over colourings
/// whose used colours are exactly 0..m-1).
ColoringSearchResult Omega_uc_exact(const Graph& g, const SearchLimits& limits = {});
/// Same minimum, but over every proper colouring with colours 0..n; used to
/// cross-check the normalisation argument on small graphs.
Weight Omega_uc_unrestricted(const Graph& g);

enum class GammaMode { Constructive, Exhaustive };

/// Minimum of gamma_uc over all colourings. The constructive mode returns
/// gamma(G) with a colouring from build_equal_coloring; the exhaustive mode
/// (n <= 8) searches every normalised colouring.
ColoringSearchResult Gamma_uc_exact(const Graph& g, GammaMode mode = GammaMode::Constructive,
                                    const SearchLimits& limits = {});

/// Least k such that a proper colouring with colours exactly 0..k-1 has
/// gamma_uc = gamma.
ChiUcResult chi_uc_exact(const Graph& g, const SearchLimits& limits = {});

/// Does some proper colouring using exactly colours 0..k-1 reach
/// gamma_uc(G,c) = gamma? Returns the first one found in enumeration order.
std::optional<Coloring> coloring_preserving_gamma(const Graph& g, std::size_t k, std::size_t gamma,
                                                  const SearchLimits& limits = {});

/// Colouring under which the dominating set d is up-color dominating: the
/// members of d are lifted by the top colour k of c0 (or k+1 when the first
/// lift is not proper or not dominating).
Coloring build_equal_coloring(const Graph& g, const VertexSet& d, const Coloring& c0);

struct WeightBoundedColoring {
    Coloring coloring;
    VertexSet dominating;
    Weight weight = 0;
    std::size_t gamma = 0;
    std::size_t chi = 0;
};

/// Lift a minimum dominating set over an optimal colouring class by class so
/// that its weight stays within (3/2)(chi-1)gamma.
WeightBoundedColoring build_weight_bounded_coloring(const Graph& g, const SearchLimits& limits = {});

/// Order-preserving compression onto 0..m-1.
Coloring normalize_coloring(const Coloring& c);

/// Roles induced by a witness set (members dominant, others submissive).
std::vector<Role> roles_from_witness(const VertexSet& witness);

/// Visit every proper colouring of g whose used colours are exactly 0..m-1
/// for some m, in lexicographic order of the colour vector. `prune(max)` is
/// consulted whenever the running maximum colour grows and must be monotone
/// in its argument; returning true cuts the branch. `visit` returns false to
/// stop the enumeration.
template <class Prune, class Visit>
void for_each_normalized_coloring(const Graph& g, Prune&& prune, Visit&& visit);

}  // namespace upcolor

#include "upcolor/detail/coloring_enum.hpp"
