#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "upcolor/tree.hpp"

namespace upcolor {

namespace {

Weight sat_add(Weight a, Weight b) { return std::min(kNoSet, a + b); }

DominationResult finish(const ColoredGraph& cg, VertexSet witness) {
    DominationResult r;
    r.feasible = true;
    r.witness = std::move(witness);
    r.size = r.witness.size();
    r.weight = cg.coloring().weight_of(r.witness);
    r.roles = roles_from_witness(r.witness);
    return r;
}

void require_tree_instance(const ColoredGraph& cg) {
    if (!is_tree(cg.graph())) throw Error(ErrorCode::NotATree, "graph is not a tree");
    if (!up_color_feasible(cg)) throw Error(ErrorCode::Infeasible, "an isolated vertex has colour 0");
}

}  // namespace

PrecedenceOrder precedence_order(const DirectedTreeAnalysis& analysis) {
    const std::size_t n = analysis.in.size();
    PrecedenceOrder p;
    p.stamp.assign(n, 0);
    std::size_t counter = 0;
    std::vector<Vertex> stack;
    for (Vertex s : analysis.sources.members()) {
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            p.stamp[v] = ++counter;
            const auto& out = analysis.out[v];
            for (auto it = out.rbegin(); it != out.rend(); ++it) stack.push_back(*it);
        }
    }
    p.order = analysis.confluences.members();
    std::stable_sort(p.order.begin(), p.order.end(),
                     [&](Vertex a, Vertex b) { return p.stamp[a] < p.stamp[b]; });
    return p;
}

DSPipelineTrace ds_record_pipeline(const ColoredGraph& cg, OpReading reading) {
    require_tree_instance(cg);
    const auto analysis = analyze_directed_tree(cg);
    const std::size_t n = cg.order();
    DSPipelineTrace t;
    t.records.resize(n);

    // Out-neighbours carry smaller colours, so ascending colour order
    // evaluates every child before its parents.
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return cg.color(a) < cg.color(b); });

    for (Vertex v : order) {
        DSRecord& r = t.records[v];
        r.d0 = VertexSet(n, {v});
        r.d1 = VertexSet(n);
        r.w0 = cg.color(v) == 0 ? kNoSet : cg.color(v);
        r.w1 = 0;
        for (Vertex u : analysis.out[v]) {
            const DSRecord& c = t.records[u];
            const bool confluence = analysis.confluences.contains(u);
            if (reading == OpReading::Child) {
                const bool sub = c.op == 1;
                r.w0 = sat_add(r.w0, sub ? c.w1 : c.w0);
                r.d0 |= sub ? c.d1 : c.d0;
                const bool sub_when_v_sub = confluence && sub;
                r.w1 = sat_add(r.w1, sub_when_v_sub ? c.w1 : c.w0);
                r.d1 |= sub_when_v_sub ? c.d1 : c.d0;
            } else {
                r.w0 = sat_add(r.w0, c.w0);
                r.d0 |= c.d0;
                r.w1 = sat_add(r.w1, confluence ? c.w1 : c.w0);
                r.d1 |= confluence ? c.d1 : c.d0;
            }
        }
        r.op = r.w0 <= r.w1 ? 0 : 1;
        if (analysis.sources.contains(v)) r.op = 0;
    }

    t.assembled = VertexSet(n);
    for (Vertex s : analysis.sources.members()) t.assembled |= t.records[s].d0;

    t.precedence = precedence_order(analysis);
    VertexSet d = t.assembled;
    for (Vertex v : t.precedence.order) {
        if (d.contains(v)) continue;
        const auto& in = analysis.in[v];
        if (std::any_of(in.begin(), in.end(), [&](Vertex u) { return d.contains(u); })) continue;
        Vertex pick = v;
        Weight best = t.records[v].w0 - t.records[v].w1;
        for (Vertex u : in) {
            const Weight delta = t.records[u].w0 - t.records[u].w1;
            if (delta < best || (delta == best && pick != v && u < pick)) {
                best = delta;
                pick = u;
            }
        }
        d -= t.records[pick].d1;
        d |= t.records[pick].d0;
        t.flipped.push_back(pick);
    }
    t.result = d;
    t.weight = cg.coloring().weight_of(d);
    t.dominating = is_up_color_dominating(cg, d).dominating;
    return t;
}

DominationResult tree_omega_dp(const ColoredGraph& cg) {
    require_tree_instance(cg);
    const std::size_t n = cg.order();
    std::vector<Vertex> bfs{0};
    std::vector<Vertex> parent(n, 0);
    std::vector<std::uint8_t> seen(n, 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        for (Vertex u : cg.graph().neighbors(bfs[i])) {
            if (seen[u]) continue;
            seen[u] = 1;
            parent[u] = bfs[i];
            bfs.push_back(u);
        }
    }
    auto children = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex u : cg.graph().neighbors(v)) {
            if (u != parent[v] || v == 0) out.push_back(u);
        }
        return out;
    };

    // in_d: v in D; below: v outside D, dominated by a child; waiting: v
    // outside D and left for its parent to dominate.
    std::vector<Weight> in_d(n), below(n), waiting(n);
    std::vector<Vertex> forced(n, 0);
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
        const Vertex v = *it;
        const Color cv = cg.color(v);
        Weight a = cv == 0 ? kNoSet : cv;
        Weight base = 0;
        Weight extra = kNoSet;
        for (Vertex u : children(v)) {
            const Weight free_child = std::min(in_d[u], below[u]);
            const Weight under_v = cv > cg.color(u) ? std::min(free_child, waiting[u]) : free_child;
            a = sat_add(a, under_v);
            base = sat_add(base, free_child);
            if (cg.color(u) > cv && in_d[u] - free_child < extra) {
                extra = in_d[u] - free_child;
                forced[v] = u;
            }
        }
        in_d[v] = a;
        waiting[v] = base;
        below[v] = extra == kNoSet ? kNoSet : sat_add(base, extra);
    }

    enum Pick : std::uint8_t { InD, Below, Waiting };
    std::vector<Pick> pick(n);
    pick[0] = in_d[0] <= below[0] ? InD : Below;
    if (std::min(in_d[0], below[0]) >= kNoSet) {
        throw Error(ErrorCode::Infeasible, "no up-color dominating set exists");
    }
    VertexSet d(n);
    for (Vertex v : bfs) {
        const Color cv = cg.color(v);
        if (pick[v] == InD) d.insert(v);
        for (Vertex u : children(v)) {
            Pick choice = in_d[u] < below[u] ? InD : Below;
            if (pick[v] == InD && cv > cg.color(u) && waiting[u] <= std::min(in_d[u], below[u])) choice = Waiting;
            if (pick[v] == Below && u == forced[v]) choice = InD;
            pick[u] = choice;
        }
    }
    auto result = finish(cg, std::move(d));
    if (!is_up_color_dominating(cg, result.witness).dominating ||
        result.weight != std::min(in_d[0], below[0])) {
        throw Error(ErrorCode::InternalVerificationFailed, "tree DP reconstruction disagrees with its value");
    }
    return result;
}

TreeOmegaReport tree_omega_uc_report(const ColoredGraph& cg, const TreeOmegaOptions& options) {
    TreeOmegaReport rep;
    rep.pipeline = ds_record_pipeline(cg, options.reading);
    const auto exact = tree_omega_dp(cg);
    rep.optimum = exact.weight;
    if (rep.pipeline.dominating && rep.pipeline.weight == rep.optimum) {
        rep.result = finish(cg, rep.pipeline.result);
    } else if (options.exact_fallback) {
        rep.result = exact;
        rep.corrected = true;
    } else if (!rep.pipeline.dominating) {
        throw Error(ErrorCode::InternalVerificationFailed, "record pipeline produced a non-dominating set");
    } else {
        rep.result = finish(cg, rep.pipeline.result);
    }
    return rep;
}

DominationResult tree_omega_uc(const ColoredGraph& cg, const TreeOmegaOptions& options) {
    return tree_omega_uc_report(cg, options).result;
}

}  // namespace upcolor
