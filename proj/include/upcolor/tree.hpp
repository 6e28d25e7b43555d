#pragma once

// Specialised algorithms for properly coloured trees: a linear-time
// worklist for gamma_uc and a DS[v] record dynamic program for omega_uc.

#include <cstddef>
#include <vector>

#include "upcolor/exact.hpp"
#include "upcolor/graph.hpp"

namespace upcolor {

struct DirectedTreeAnalysis {
    VertexSet sources;      // in-degree 0, i.e. the local maxima
    VertexSet sinks;        // out-degree 0
    VertexSet confluences;  // in-degree > 1
    std::vector<std::vector<Vertex>> in;   // higher-coloured neighbours
    std::vector<std::vector<Vertex>> out;  // lower-coloured neighbours
};

/// Throws NotATree unless the underlying graph is connected with n-1 edges.
DirectedTreeAnalysis analyze_directed_tree(const ColoredGraph& cg);

struct TreeGammaStats {
    std::size_t rule_a = 0;
    std::size_t rule_b = 0;
    std::size_t rule_c = 0;
    std::size_t pruned_edges = 0;
    std::size_t queue_pops = 0;

    std::size_t steps() const { return rule_a + rule_b + rule_c + pruned_edges + queue_pops; }
};

/// Worklist labelling: (a) vertices without residual in-edges become
/// dominant, (b) residual leaves become submissive and promote their
/// in-neighbour, (c) dominated vertices with residual out-degree <= 1 become
/// submissive. Throws NotATree or Infeasible.
DominationResult tree_gamma_uc(const ColoredGraph& cg, TreeGammaStats* stats = nullptr);

/// Record for the subtree reachable from v along out-edges.
struct DSRecord {
    VertexSet d0;  // best set with v dominant
    Weight w0 = 0;
    VertexSet d1;  // best set with v submissive
    Weight w1 = 0;
    int op = 0;    // 0 when w0 <= w1
};

/// Weight used for "no such set" (a colour-0 vertex cannot be dominant).
inline constexpr Weight kNoSet = Weight{1} << 60;

struct PrecedenceOrder {
    std::vector<Vertex> order;   // confluence vertices, ancestors first
    std::vector<std::size_t> stamp;  // per vertex, last discovery stamp (0 = never)
};

/// DFS along out-edges from every source in ascending id with one global
/// counter that is never reset; confluences are listed by ascending last
/// discovery stamp, which places u before v whenever v is reachable from u.
PrecedenceOrder precedence_order(const DirectedTreeAnalysis& analysis);

/// How child records enter w0(v) and w1(v).
enum class OpReading {
    Child,    // each child contributes w_{op(u)}(u)
    Literal,  // children reuse v's own role: w0 sums w0(u), w1 sums w1(u) over confluence children
};

struct TreeOmegaOptions {
    OpReading reading = OpReading::Child;
    /// When the record pipeline ends with a non-dominating or non-optimal
    /// set, return the exact tree DP witness instead of throwing.
    bool exact_fallback = true;
};

struct DSPipelineTrace {
    std::vector<DSRecord> records;
    PrecedenceOrder precedence;
    VertexSet assembled;         // union of d0 over sources
    VertexSet result;            // after the confluence fix-ups
    std::vector<Vertex> flipped; // vertices switched to dominant, in order
    Weight weight = 0;
    bool dominating = false;
};

/// Runs the record computation, assembly and confluence fix-up without
/// judging the outcome.
DSPipelineTrace ds_record_pipeline(const ColoredGraph& cg, OpReading reading = OpReading::Child);

/// Exact minimum-weight up-color dominating set of a tree by a rooted
/// three-state dynamic program (v in D / dominated from below / waiting for
/// its parent).
DominationResult tree_omega_dp(const ColoredGraph& cg);

struct TreeOmegaReport {
    DominationResult result;
    DSPipelineTrace pipeline;
    Weight optimum = 0;    // from the exact DP
    bool corrected = false; // result came from the DP, not the pipeline
};

TreeOmegaReport tree_omega_uc_report(const ColoredGraph& cg, const TreeOmegaOptions& options = {});

/// Minimum-weight witness; throws NotATree, Infeasible, or
/// InternalVerificationFailed (only without the exact fallback).
DominationResult tree_omega_uc(const ColoredGraph& cg, const TreeOmegaOptions& options = {});

}  // namespace upcolor
