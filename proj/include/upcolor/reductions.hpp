#pragma once

// Generators for the three hardness constructions (minimum cover, 3-SAT via
// 3-colourability, balanced exact-2-SAT) together with brute-force solvers
// of the source problems so both sides of each equivalence can be checked.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "upcolor/graph.hpp"

namespace upcolor {

struct MinCoverInstance {
    std::vector<int> universe;              // element labels
    std::vector<std::vector<int>> subsets;  // each of size <= 3
    std::size_t t = 0;                      // decision bound
};

/// Literals are non-zero integers: +i is u_i, -i its negation (1-based).
struct ThreeSatInstance {
    std::size_t variables = 0;
    std::vector<std::vector<int>> clauses;  // 1..3 literals each
};

struct BalancedE2SatInstance {
    std::size_t variables = 0;
    std::vector<std::array<int, 2>> clauses;
    std::size_t target = 0;  // l, the number of clauses to satisfy
};

enum class VertexRole {
    ElementCopy,
    Subset,
    Root,          // v0 of the cover construction
    Dummy,         // optional triangle fixing the colour count
    BaseTrue,
    BaseFalse,
    BaseBase,
    Literal,       // u_i or its negation in the 3-SAT graph
    ClauseGadget,
    HBAffirmed,    // K_{3s,3s} vertex on the affirmed side
    HBNegated,
    Hair,          // pendant on an HB vertex
    Alpha,
    Connector,     // the p vertex of an occurrence gadget
    LiteralHair,   // the h vertex of an occurrence gadget
};

std::string_view to_string(VertexRole role);

/// Bookkeeping for the exact-2-SAT construction.
struct E2SatLayout {
    std::size_t r = 0;
    std::size_t s = 0;
    std::vector<int> variable;                     // per vertex, 0-based owner
    std::vector<int> side;                         // per vertex, 0 = affirmed side, 1 = negated side
    std::vector<std::vector<Vertex>> clause_block; // A(c_i): 14 vertices per clause
    std::vector<std::array<Vertex, 2>> alphas;     // per clause
    std::vector<std::vector<Vertex>> hb;           // per variable, its 6s K-vertices
};

struct ReductionOutput {
    Graph graph;
    std::optional<Coloring> coloring;
    std::size_t k = 0;
    std::vector<VertexRole> roles;
    std::optional<E2SatLayout> layout;
};

/// l = |C| copies of each element (colour 1), one vertex per subset
/// (colour 2), v0 (colour 3); with `dummy_triangle` a disjoint triangle
/// coloured 1,2,3 is added and k grows by one.
ReductionOutput reduce_min_cover(const MinCoverInstance& inst, bool dummy_triangle = false);

struct MinCoverSolution {
    std::size_t size = 0;
    std::vector<std::size_t> chosen;  // subset indices
};

/// Exact minimum cover by subset enumeration (|C| <= 20); nullopt when the
/// subsets do not cover the universe.
std::optional<MinCoverSolution> solve_min_cover(const MinCoverInstance& inst);

/// Base triangle T,F,B (ids 0,1,2), a triangle u_i, not-u_i, B per variable,
/// and per clause two OR triangles in series whose output is joined to F and
/// B. Short clauses repeat their last literal.
ReductionOutput reduce_3sat_chromatic(const ThreeSatInstance& inst);

/// Satisfying assignment by enumeration (variables <= 24).
std::optional<std::vector<bool>> solve_3sat(const ThreeSatInstance& inst);

/// Per variable a hairy K_{3s,3s}; per literal occurrence an alpha, p, h
/// gadget attached to two fresh K-vertices; an edge between the two alphas
/// of each clause. k = 6rs + 3s + 2(s - l).
ReductionOutput reduce_balanced_e2sat(const BalancedE2SatInstance& inst);

struct WitnessLabeling {
    std::vector<int> phi;  // 0/1 per vertex
    std::size_t n0 = 0;    // clauses whose alphas are both labelled 0
};

/// phi = 1 on the side of each variable's bipartition selected by the
/// assignment (affirmed side when true).
WitnessLabeling phi_labeling(const ReductionOutput& out, const std::vector<bool>& assignment);

struct WeightWitness {
    Coloring coloring;
    VertexSet dominating;
    Weight weight = 0;
    WitnessLabeling labeling;
    std::size_t satisfied = 0;
};

WeightWitness build_weight_witness(const ReductionOutput& out, const std::vector<bool>& assignment);

struct MaxE2SatSolution {
    std::size_t satisfied = 0;
    std::vector<bool> assignment;
};

MaxE2SatSolution solve_max_e2sat(const BalancedE2SatInstance& inst);

std::size_t count_satisfied(const std::vector<std::array<int, 2>>& clauses, const std::vector<bool>& assignment);

struct StructureAudit {
    bool ok = true;
    std::vector<std::string> violations;
    std::size_t vertices = 0;
    std::size_t expected_vertices = 0;
    std::vector<std::size_t> block_sizes;  // |A(c_i)|
    std::vector<std::size_t> block_hairs;
    std::size_t phi_total = 0;
};

StructureAudit audit_reduction_structure(const ReductionOutput& out);

}  // namespace upcolor
