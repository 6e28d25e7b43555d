#include "cover_search.hpp"

#include <bit>
#include <limits>
#include <string>

namespace upcolor::detail {

MaskGraph to_masks(const Graph& g) {
    require_order(g.order(), kMaskLimit, "mask graph");
    MaskGraph m;
    m.n = g.order();
    m.adj.assign(m.n, 0);
    for (const auto& e : g.edges()) {
        m.adj[e.u] |= bit(e.v);
        m.adj[e.v] |= bit(e.u);
    }
    return m;
}

void require_order(std::size_t n, std::size_t limit, const char* what) {
    const auto cap = std::min(limit, kMaskLimit);
    if (n > cap) {
        throw Error(ErrorCode::TooLarge, std::string(what) + ": " + std::to_string(n) + " vertices exceeds limit " +
                                             std::to_string(cap));
    }
}

namespace {

class CoverSearch {
public:
    CoverSearch(const CoverProblem& p, std::optional<CoverKey> below, bool first_only)
        : p_(p), full_(full_mask(p.n)), first_only_(first_only) {
        if (below) {
            best_ = *below;
        } else {
            best_ = CoverKey{std::numeric_limits<Weight>::max(), std::numeric_limits<std::size_t>::max()};
        }
    }

    void run(Mask forced_in, Mask forced_out) {
        Mask covered = 0;
        Weight primary = 0;
        std::size_t card = 0;
        for (Mask m = forced_in; m != 0; m &= m - 1) {
            const auto v = static_cast<Vertex>(std::countr_zero(m));
            covered |= p_.covers[v];
            primary += p_.cost[v];
            ++card;
        }
        dfs(forced_in, covered, primary, card, forced_out | ~p_.allowed);
    }

    std::optional<CoverSolution> result() const {
        if (!found_) return std::nullopt;
        return CoverSolution{best_, best_set_};
    }

private:
    void dfs(Mask chosen, Mask covered, Weight primary, std::size_t card, Mask excluded) {
        if (stop_) return;
        if ((covered & full_) == full_) {
            const CoverKey key{primary, card};
            if (key < best_) {
                best_ = key;
                best_set_ = chosen;
                found_ = true;
                if (first_only_) stop_ = true;
            }
            return;
        }
        const Mask avail = p_.allowed & ~excluded & ~chosen;
        // Packing bound: uncovered elements with pairwise disjoint candidate
        // sets each need their own vertex.
        Mask used = 0;
        Weight extra_primary = 0;
        std::size_t extra_card = 0;
        Vertex pivot = 0;
        bool have_pivot = false;
        for (Mask open = full_ & ~covered; open != 0; open &= open - 1) {
            const auto e = static_cast<Vertex>(std::countr_zero(open));
            const Mask cand = p_.coverers[e] & avail;
            if (cand == 0) return;
            if (!have_pivot) {
                pivot = e;
                have_pivot = true;
            }
            if ((cand & used) == 0) {
                used |= cand;
                Weight cheapest = std::numeric_limits<Weight>::max();
                for (Mask c = cand; c != 0; c &= c - 1) {
                    cheapest = std::min(cheapest, p_.cost[static_cast<Vertex>(std::countr_zero(c))]);
                }
                extra_primary += cheapest;
                ++extra_card;
            }
        }
        if (!(CoverKey{primary + extra_primary, card + extra_card} < best_)) return;

        Mask branch_excluded = excluded;
        for (Mask cand = p_.coverers[pivot] & avail; cand != 0; cand &= cand - 1) {
            const auto w = static_cast<Vertex>(std::countr_zero(cand));
            dfs(chosen | bit(w), covered | p_.covers[w], primary + p_.cost[w], card + 1, branch_excluded);
            if (stop_) return;
            // Covers containing w were all explored in that branch.
            branch_excluded |= bit(w);
        }
    }

    const CoverProblem& p_;
    Mask full_;
    bool first_only_;
    bool stop_ = false;
    bool found_ = false;
    CoverKey best_;
    Mask best_set_ = 0;
};

}  // namespace

std::optional<CoverSolution> solve_cover(const CoverProblem& p, std::optional<CoverKey> below, Mask forced_in,
                                         Mask forced_out, bool first_only) {
    if ((forced_in & forced_out) != 0 || (forced_in & ~p.allowed) != 0) return std::nullopt;
    CoverSearch search(p, below, first_only);
    search.run(forced_in, forced_out);
    return search.result();
}

Mask lexmin_cover(const CoverProblem& p, CoverKey optimum, Mask forced_in) {
    // Anything with key <= optimum has key == optimum.
    const CoverKey bound{optimum.primary, optimum.card + 1};
    Mask in = forced_in;
    Mask out = 0;
    Mask covered = 0;
    for (Mask m = in; m != 0; m &= m - 1) covered |= p.covers[static_cast<Vertex>(std::countr_zero(m))];
    const Mask full = full_mask(p.n);
    for (Vertex v = 0; v < p.n; ++v) {
        if ((covered & full) == full) break;
        if ((in & bit(v)) != 0) continue;
        if ((p.allowed & bit(v)) == 0) {
            out |= bit(v);
            continue;
        }
        if (solve_cover(p, bound, in | bit(v), out, true)) {
            in |= bit(v);
            covered |= p.covers[v];
        } else {
            out |= bit(v);
        }
    }
    return in;
}

CoverProblem domination_problem(const MaskGraph& g) {
    CoverProblem p;
    p.n = g.n;
    p.allowed = full_mask(g.n);
    p.coverers.resize(g.n);
    p.covers.resize(g.n);
    p.cost.assign(g.n, 1);
    for (Vertex v = 0; v < g.n; ++v) {
        p.coverers[v] = g.adj[v] | bit(v);
        p.covers[v] = g.adj[v] | bit(v);
    }
    return p;
}

CoverProblem up_color_problem(const MaskGraph& g, std::span<const Color> colors, bool weighted) {
    CoverProblem p;
    p.n = g.n;
    p.coverers.assign(g.n, 0);
    p.covers.assign(g.n, 0);
    p.cost.resize(g.n);
    for (Vertex v = 0; v < g.n; ++v) {
        p.cost[v] = weighted ? colors[v] : 1;
        if (colors[v] > 0) {
            p.allowed |= bit(v);
            p.coverers[v] |= bit(v);
            p.covers[v] |= bit(v);
        }
        for (Mask m = g.adj[v]; m != 0; m &= m - 1) {
            const auto u = static_cast<Vertex>(std::countr_zero(m));
            if (colors[u] > colors[v]) {
                p.coverers[v] |= bit(u);
                p.covers[u] |= bit(v);
            }
        }
    }
    return p;
}

Mask local_maxima_mask(const MaskGraph& g, std::span<const Color> colors) {
    Mask out = 0;
    for (Vertex v = 0; v < g.n; ++v) {
        bool top = true;
        for (Mask m = g.adj[v]; m != 0; m &= m - 1) {
            if (colors[static_cast<Vertex>(std::countr_zero(m))] > colors[v]) {
                top = false;
                break;
            }
        }
        if (top) out |= bit(v);
    }
    return out;
}

}  // namespace upcolor::detail
