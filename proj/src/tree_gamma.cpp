#include <cstdint>
#include <string>
#include <vector>

#include "upcolor/tree.hpp"

namespace upcolor {

DirectedTreeAnalysis analyze_directed_tree(const ColoredGraph& cg) {
    if (!is_tree(cg.graph())) throw Error(ErrorCode::NotATree, "graph is not a tree");
    const std::size_t n = cg.order();
    DirectedTreeAnalysis a;
    a.sources = VertexSet(n);
    a.sinks = VertexSet(n);
    a.confluences = VertexSet(n);
    a.in.resize(n);
    a.out.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        a.in[v] = cg.in_neighbors(v);
        a.out[v] = cg.out_neighbors(v);
        if (a.in[v].empty()) a.sources.insert(v);
        if (a.out[v].empty()) a.sinks.insert(v);
        if (a.in[v].size() > 1) a.confluences.insert(v);
    }
    return a;
}

namespace {

enum class State : std::uint8_t { Unassigned, Dominant, Submissive };

class GammaWorklist {
public:
    GammaWorklist(const ColoredGraph& cg, TreeGammaStats& stats)
        : cg_(cg), stats_(stats), n_(cg.order()), state_(n_, State::Unassigned), rin_(n_), rout_(n_),
          xor_(n_, 0), dominated_(n_, 0) {
        for (Vertex v = 0; v < n_; ++v) {
            rin_[v] = cg.in_degree(v);
            rout_[v] = cg.out_degree(v);
            for (Vertex u : cg.graph().neighbors(v)) xor_[v] ^= u;
        }
    }

    VertexSet run() {
        for (Vertex v = 0; v < n_; ++v) enqueue(v);
        std::size_t assigned = 0;
        while (assigned < n_) {
            Vertex v = 0;
            int rule = next(v);
            if (rule < 0) throw Error(ErrorCode::InternalVerificationFailed, "tree worklist stalled");
            if (rule == 0) {
                if (cg_.color(v) == 0) {
                    throw Error(ErrorCode::Infeasible, "colour-0 vertex " + std::to_string(v) + " cannot be dominated");
                }
                ++stats_.rule_a;
                make_dominant(v);
                ++assigned;
            } else if (rule == 1) {
                ++stats_.rule_b;
                const Vertex parent = xor_[v];
                if (state_[parent] == State::Unassigned) {
                    make_dominant(parent);
                    ++assigned;
                }
                make_submissive(v);
                ++assigned;
            } else {
                ++stats_.rule_c;
                make_submissive(v);
                ++assigned;
            }
        }
        VertexSet d(n_);
        for (Vertex v = 0; v < n_; ++v) {
            if (state_[v] == State::Dominant) d.insert(v);
        }
        return d;
    }

private:
    bool rule_a(Vertex v) const { return state_[v] == State::Unassigned && rin_[v] == 0; }
    bool rule_b(Vertex v) const { return state_[v] == State::Unassigned && rin_[v] == 1 && rout_[v] == 0; }
    bool rule_c(Vertex v) const { return state_[v] == State::Unassigned && dominated_[v] && rout_[v] <= 1; }

    void enqueue(Vertex v) {
        if (rule_a(v)) queue_[0].push_back(v);
        if (rule_b(v)) queue_[1].push_back(v);
        if (rule_c(v)) queue_[2].push_back(v);
    }

    // Highest-priority applicable item; stale entries are dropped on pop.
    int next(Vertex& v) {
        for (int rule = 0; rule < 3; ++rule) {
            auto& q = queue_[rule];
            while (!q.empty()) {
                v = q.back();
                q.pop_back();
                ++stats_.queue_pops;
                const bool ok = rule == 0 ? rule_a(v) : rule == 1 ? rule_b(v) : rule_c(v);
                if (ok) return rule;
            }
        }
        return -1;
    }

    // An arc hi -> lo is residual while lo is unassigned and hi is not submissive.
    bool residual(Vertex hi, Vertex lo) const {
        return state_[lo] == State::Unassigned && state_[hi] != State::Submissive;
    }

    void prune(Vertex hi, Vertex lo) {
        --rout_[hi];
        --rin_[lo];
        xor_[hi] ^= lo;
        xor_[lo] ^= hi;
        ++stats_.pruned_edges;
    }

    void make_dominant(Vertex v) {
        for (Vertex u : cg_.in_neighbors(v)) {
            if (residual(u, v)) prune(u, v);
        }
        state_[v] = State::Dominant;
        for (Vertex u : cg_.in_neighbors(v)) enqueue(u);
        for (Vertex w : cg_.out_neighbors(v)) {
            dominated_[w] = 1;
            enqueue(w);
        }
    }

    void make_submissive(Vertex v) {
        for (Vertex u : cg_.in_neighbors(v)) {
            if (residual(u, v)) prune(u, v);
        }
        for (Vertex w : cg_.out_neighbors(v)) {
            if (residual(v, w)) prune(v, w);
        }
        state_[v] = State::Submissive;
        for (Vertex u : cg_.graph().neighbors(v)) enqueue(u);
    }

    const ColoredGraph& cg_;
    TreeGammaStats& stats_;
    std::size_t n_;
    std::vector<State> state_;
    std::vector<std::size_t> rin_;
    std::vector<std::size_t> rout_;
    std::vector<Vertex> xor_;
    std::vector<std::uint8_t> dominated_;
    std::vector<Vertex> queue_[3];
};

}  // namespace

DominationResult tree_gamma_uc(const ColoredGraph& cg, TreeGammaStats* stats) {
    if (!is_tree(cg.graph())) throw Error(ErrorCode::NotATree, "graph is not a tree");
    if (!up_color_feasible(cg)) throw Error(ErrorCode::Infeasible, "an isolated vertex has colour 0");
    TreeGammaStats local;
    GammaWorklist worklist(cg, stats ? *stats : local);
    DominationResult r;
    r.witness = worklist.run();
    const auto check = is_up_color_dominating(cg, r.witness);
    if (!check.dominating) {
        throw Error(ErrorCode::InternalVerificationFailed, "tree worklist produced a non-dominating set");
    }
    r.feasible = true;
    r.size = r.witness.size();
    r.weight = cg.coloring().weight_of(r.witness);
    r.roles = roles_from_witness(r.witness);
    return r;
}

}  // namespace upcolor
