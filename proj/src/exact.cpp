#include "upcolor/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cover_search.hpp"

namespace upcolor {

using detail::bit;
using detail::full_mask;
using detail::Mask;
using detail::MaskGraph;

namespace {

Vertex low(Mask m) { return static_cast<Vertex>(std::countr_zero(m)); }

std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

// Minimum independent dominating set: branch on the lowest undominated
// vertex, choosing which member of its closed neighbourhood joins the set.
class IndependentDomination {
public:
    explicit IndependentDomination(const MaskGraph& g) : g_(g), full_(full_mask(g.n)) {}

    Mask solve() {
        best_ = g_.n + 1;
        dfs(0, 0, 0);
        return best_set_;
    }

private:
    void dfs(Mask chosen, Mask dominated, Mask excluded) {
        const std::size_t size = popcount(chosen);
        if (dominated == full_) {
            if (size < best_ || (size == best_ && chosen < best_set_)) {
                best_ = size;
                best_set_ = chosen;
            }
            return;
        }
        if (size + 1 > best_) return;
        const Vertex u = low(full_ & ~dominated);
        // Candidates must not touch the current set.
        Mask cand = (g_.adj[u] | bit(u)) & ~dominated & ~excluded;
        Mask tried = excluded;
        for (; cand != 0; cand &= cand - 1) {
            const Vertex w = low(cand);
            dfs(chosen | bit(w), dominated | g_.adj[w] | bit(w), tried);
            tried |= bit(w);
        }
    }

    const MaskGraph& g_;
    Mask full_;
    std::size_t best_ = 0;
    Mask best_set_ = ~Mask{0};
};

std::size_t max_independent(const MaskGraph& g, Mask candidates, std::size_t size, std::size_t best) {
    if (candidates == 0) return std::max(size, best);
    if (size + popcount(candidates) <= best) return best;
    const Vertex v = low(candidates);
    best = max_independent(g, candidates & ~(g.adj[v] | bit(v)), size + 1, best);
    // Excluding v only helps when v has a neighbour left among the candidates.
    if ((g.adj[v] & candidates) != 0) best = max_independent(g, candidates & ~bit(v), size, best);
    return best;
}

// Roman domination as min over V2 of 2|V2| + |V \ N[V2]|: the lowest vertex
// not yet handled either takes label 1 or has some closed neighbour at 2.
class RomanSearch {
public:
    explicit RomanSearch(const MaskGraph& g) : g_(g), full_(full_mask(g.n)) {}

    std::size_t solve() {
        best_ = 2 * g_.n + 1;
        dfs(0, 0, 0);
        return best_;
    }

private:
    void dfs(Mask handled, std::size_t cost, Mask excluded_twos) {
        if (handled == full_) {
            best_ = std::min(best_, cost);
            return;
        }
        if (cost + 1 >= best_) return;
        const Vertex u = low(full_ & ~handled);
        dfs(handled | bit(u), cost + 1, excluded_twos);
        Mask tried = excluded_twos;
        for (Mask cand = (g_.adj[u] | bit(u)) & ~excluded_twos; cand != 0; cand &= cand - 1) {
            const Vertex w = low(cand);
            if (cost + 2 < best_) dfs(handled | g_.adj[w] | bit(w), cost + 2, tried);
            tried |= bit(w);
        }
    }

    const MaskGraph& g_;
    Mask full_;
    std::size_t best_ = 0;
};

class KColoring {
public:
    KColoring(const MaskGraph& g, std::size_t k) : g_(g), k_(k), colors_(g.n, -1) {
        order_.resize(g.n);
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return popcount(g.adj[a]) > popcount(g.adj[b]); });
    }

    bool solve() { return step(0, -1); }
    std::vector<Color> colors() const { return colors_; }

private:
    bool step(std::size_t idx, Color max_used) {
        if (idx == order_.size()) return true;
        const Vertex v = order_[idx];
        // New colours are introduced in increasing order only.
        const Color limit = std::min<Color>(static_cast<Color>(k_) - 1, max_used + 1);
        for (Color c = 0; c <= limit; ++c) {
            bool clash = false;
            for (Mask m = g_.adj[v]; m != 0; m &= m - 1) {
                if (colors_[low(m)] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            colors_[v] = c;
            if (step(idx + 1, std::max(max_used, c))) return true;
            colors_[v] = -1;
        }
        return false;
    }

    const MaskGraph& g_;
    std::size_t k_;
    std::vector<Color> colors_;
    std::vector<Vertex> order_;
};

DominationResult make_result(const ColoredGraph& cg, Mask chosen) {
    DominationResult r;
    r.feasible = true;
    r.witness = VertexSet::from_mask(cg.order(), chosen);
    r.size = r.witness.size();
    r.weight = cg.coloring().weight_of(r.witness);
    r.roles = roles_from_witness(r.witness);
    return r;
}

DominationResult infeasible_result(const ColoredGraph& cg) {
    DominationResult r;
    r.feasible = false;
    r.witness = VertexSet(cg.order());
    return r;
}

DominationResult up_color_exact(const ColoredGraph& cg, bool weighted, const SearchLimits& limits) {
    detail::require_order(cg.order(), limits.search_limit, weighted ? "omega_uc_exact" : "gamma_uc_exact");
    if (!up_color_feasible(cg)) return infeasible_result(cg);
    const auto g = detail::to_masks(cg.graph());
    const auto& colors = cg.coloring().values();
    const auto problem = detail::up_color_problem(g, colors, weighted);
    const Mask forced = detail::local_maxima_mask(g, colors);
    const auto best = detail::solve_cover(problem, std::nullopt, forced);
    if (!best) return infeasible_result(cg);
    const Mask chosen = detail::lexmin_cover(problem, best->key, forced);
    return make_result(cg, chosen);
}

}  // namespace

std::vector<Role> roles_from_witness(const VertexSet& witness) {
    std::vector<Role> roles(witness.universe(), Role::Submissive);
    for (Vertex v : witness.members()) roles[v] = Role::Dominant;
    return roles;
}

std::size_t domination_number(const Graph& g, const SearchLimits& limits) {
    return minimum_dominating_set(g, limits).size();
}

VertexSet minimum_dominating_set(const Graph& g, const SearchLimits& limits) {
    detail::require_order(g.order(), limits.search_limit, "domination");
    if (g.order() == 0) return VertexSet(0);
    const auto masks = detail::to_masks(g);
    const auto problem = detail::domination_problem(masks);
    const auto best = detail::solve_cover(problem, std::nullopt);
    return VertexSet::from_mask(g.order(), detail::lexmin_cover(problem, best->key));
}

VertexSet minimum_independent_dominating_set(const Graph& g, const SearchLimits& limits) {
    detail::require_order(g.order(), limits.search_limit, "independent domination");
    if (g.order() == 0) return VertexSet(0);
    const auto masks = detail::to_masks(g);
    IndependentDomination search(masks);
    return VertexSet::from_mask(g.order(), search.solve());
}

std::size_t independent_domination_number(const Graph& g, const SearchLimits& limits) {
    return minimum_independent_dominating_set(g, limits).size();
}

std::size_t independence_number(const Graph& g, const SearchLimits& limits) {
    detail::require_order(g.order(), limits.search_limit, "independence number");
    const auto masks = detail::to_masks(g);
    return max_independent(masks, full_mask(g.order()), 0, 0);
}

std::size_t roman_domination_number(const Graph& g, const SearchLimits& limits) {
    detail::require_order(g.order(), limits.search_limit, "Roman domination");
    if (g.order() == 0) return 0;
    const auto masks = detail::to_masks(g);
    RomanSearch search(masks);
    return search.solve();
}

std::optional<Coloring> find_k_coloring(const Graph& g, std::size_t k, const SearchLimits& limits) {
    detail::require_order(g.order(), limits.search_limit, "k-colouring");
    if (g.order() == 0) return Coloring{};
    if (k == 0) return std::nullopt;
    const auto masks = detail::to_masks(g);
    KColoring search(masks, k);
    if (!search.solve()) return std::nullopt;
    return Coloring(search.colors());
}

ChromaticResult chromatic_number(const Graph& g, const SearchLimits& limits) {
    detail::require_order(g.order(), limits.search_limit, "chromatic number");
    if (g.order() == 0) return {0, Coloring{}};
    for (std::size_t k = 1;; ++k) {
        if (auto c = find_k_coloring(g, k, limits)) return {k, *c};
    }
}

ClassicInvariants classic_invariants(const Graph& g, const SearchLimits& limits) {
    detail::require_order(g.order(), limits.search_limit, "classic invariants");
    ClassicInvariants inv;
    inv.gamma = domination_number(g, limits);
    inv.i = independent_domination_number(g, limits);
    inv.alpha = independence_number(g, limits);
    inv.chi = chromatic_number(g, limits).chi;
    inv.theta = chromatic_number(complement(g), limits).chi;
    inv.gamma_r = roman_domination_number(g, limits);
    return inv;
}

DominationResult gamma_uc_exact(const ColoredGraph& cg, const SearchLimits& limits) {
    return up_color_exact(cg, false, limits);
}

DominationResult omega_uc_exact(const ColoredGraph& cg, const SearchLimits& limits) {
    return up_color_exact(cg, true, limits);
}

std::optional<std::size_t> gamma_uc_value(const ColoredGraph& cg, std::optional<std::size_t> below,
                                          const SearchLimits& limits) {
    detail::require_order(cg.order(), limits.search_limit, "gamma_uc");
    if (!up_color_feasible(cg)) return std::nullopt;
    const auto g = detail::to_masks(cg.graph());
    const auto problem = detail::up_color_problem(g, cg.coloring().values(), false);
    std::optional<detail::CoverKey> bound;
    if (below) bound = detail::CoverKey{static_cast<Weight>(*below), 0};
    const auto best = detail::solve_cover(problem, bound, detail::local_maxima_mask(g, cg.coloring().values()));
    if (!best) return std::nullopt;
    return best->key.card;
}

std::optional<Weight> omega_uc_value(const ColoredGraph& cg, std::optional<Weight> below, const SearchLimits& limits) {
    detail::require_order(cg.order(), limits.search_limit, "omega_uc");
    if (!up_color_feasible(cg)) return std::nullopt;
    const auto g = detail::to_masks(cg.graph());
    const auto problem = detail::up_color_problem(g, cg.coloring().values(), true);
    std::optional<detail::CoverKey> bound;
    if (below) bound = detail::CoverKey{*below, 0};
    const auto best = detail::solve_cover(problem, bound, detail::local_maxima_mask(g, cg.coloring().values()));
    if (!best) return std::nullopt;
    return best->key.primary;
}

Coloring normalize_coloring(const Coloring& c) {
    std::vector<Color> used = c.values();
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<Color> out(c.size());
    for (std::size_t v = 0; v < c.size(); ++v) {
        out[v] = static_cast<Color>(std::lower_bound(used.begin(), used.end(), c[v]) - used.begin());
    }
    return Coloring(std::move(out));
}

}  // namespace upcolor
