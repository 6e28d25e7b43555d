#include <algorithm>
#include <limits>
#include <numeric>

#include "cover_search.hpp"
#include "upcolor/exact.hpp"

namespace upcolor {

using detail::CoverKey;
using detail::Mask;

namespace {

constexpr Weight kUnbounded = std::numeric_limits<Weight>::max();

// Every proper colouring with colours exactly 0..k-1, in lexicographic order.
template <class Visit>
bool surjective_colorings(const detail::MaskGraph& g, std::size_t k, std::vector<Color>& colors,
                          std::vector<std::size_t>& used, Vertex v, std::size_t missing, Visit& visit) {
    if (v == g.n) return missing != 0 || visit(colors);
    const std::size_t remaining_after = g.n - v - 1;
    for (Color c = 0; c < static_cast<Color>(k); ++c) {
        bool clash = false;
        for (Mask m = g.adj[v] & (detail::bit(v) - 1); m != 0; m &= m - 1) {
            if (colors[static_cast<Vertex>(std::countr_zero(m))] == c) {
                clash = true;
                break;
            }
        }
        if (clash) continue;
        const std::size_t next_missing = used[c] == 0 ? missing - 1 : missing;
        if (next_missing > remaining_after) continue;
        colors[v] = c;
        ++used[c];
        const bool keep_going = surjective_colorings(g, k, colors, used, v + 1, next_missing, visit);
        --used[c];
        if (!keep_going) return false;
    }
    return true;
}

template <class Visit>
void all_colorings_up_to(const detail::MaskGraph& g, Color max_color, std::vector<Color>& colors, Vertex v,
                         Visit& visit) {
    if (v == g.n) {
        visit(colors);
        return;
    }
    for (Color c = 0; c <= max_color; ++c) {
        bool clash = false;
        for (Mask m = g.adj[v] & (detail::bit(v) - 1); m != 0; m &= m - 1) {
            if (colors[static_cast<Vertex>(std::countr_zero(m))] == c) {
                clash = true;
                break;
            }
        }
        if (clash) continue;
        colors[v] = c;
        all_colorings_up_to(g, max_color, colors, v + 1, visit);
    }
}

std::optional<Weight> omega_for(const detail::MaskGraph& g, const std::vector<Color>& colors, Weight below) {
    const auto problem = detail::up_color_problem(g, colors, true);
    std::optional<CoverKey> bound;
    if (below != kUnbounded) bound = CoverKey{below, 0};
    const auto sol = detail::solve_cover(problem, bound, detail::local_maxima_mask(g, colors));
    if (!sol) return std::nullopt;
    return sol->key.primary;
}

std::optional<std::size_t> gamma_for(const detail::MaskGraph& g, const std::vector<Color>& colors,
                                     std::size_t below, bool first_only) {
    const auto problem = detail::up_color_problem(g, colors, false);
    const auto sol = detail::solve_cover(problem, CoverKey{static_cast<Weight>(below), 0},
                                         detail::local_maxima_mask(g, colors), 0, first_only);
    if (!sol) return std::nullopt;
    return sol->key.card;
}

// Edgeless graphs have no feasible colouring with a colour-0 class, so the
// normalised searches fall back to colouring every vertex 1.
Coloring all_ones(std::size_t n) { return Coloring(std::vector<Color>(n, 1)); }

}  // namespace

ColoringSearchResult Omega_uc_exact(const Graph& g, const SearchLimits& limits) {
    detail::require_order(g.order(), limits.coloring_limit, "Omega_uc_exact");
    ColoringSearchResult out;
    if (g.order() == 0) return out;
    if (g.edge_count() == 0) {
        out.best_coloring = all_ones(g.order());
        out.witness = omega_uc_exact(orient(g, out.best_coloring), SearchLimits{kMaskLimit, kMaskLimit});
        out.value = out.witness.weight;
        return out;
    }
    const auto masks = detail::to_masks(g);
    Weight best = kUnbounded;
    std::vector<Color> best_colors;
    // The top colour class always belongs to the witness, so the running
    // maximum colour is a lower bound on the weight.
    for_each_normalized_coloring(
        g, [&](Color max) { return static_cast<Weight>(max) >= best; },
        [&](const std::vector<Color>& colors, Color) {
            if (auto w = omega_for(masks, colors, best)) {
                best = *w;
                best_colors = colors;
            }
            return true;
        });
    if (best == kUnbounded) throw Error(ErrorCode::InternalVerificationFailed, "no feasible colouring found");
    out.value = best;
    out.best_coloring = Coloring(best_colors);
    out.witness = omega_uc_exact(orient(g, out.best_coloring), SearchLimits{kMaskLimit, kMaskLimit});
    if (out.witness.weight != best) {
        throw Error(ErrorCode::InternalVerificationFailed, "Omega_uc witness weight disagrees with search value");
    }
    return out;
}

Weight Omega_uc_unrestricted(const Graph& g) {
    detail::require_order(g.order(), 7, "Omega_uc_unrestricted");
    if (g.order() == 0) return 0;
    const auto masks = detail::to_masks(g);
    Weight best = kUnbounded;
    std::vector<Color> colors(g.order(), 0);
    auto visit = [&](const std::vector<Color>& c) {
        if (auto w = omega_for(masks, c, best)) best = *w;
    };
    all_colorings_up_to(masks, static_cast<Color>(g.order()), colors, 0, visit);
    return best;
}

ColoringSearchResult Gamma_uc_exact(const Graph& g, GammaMode mode, const SearchLimits& limits) {
    detail::require_order(g.order(), limits.search_limit, "Gamma_uc_exact");
    ColoringSearchResult out;
    if (g.order() == 0) return out;
    const auto dom = minimum_dominating_set(g, limits);
    const std::size_t gamma = dom.size();
    if (mode == GammaMode::Constructive) {
        const auto base = chromatic_number(g, limits).coloring;
        out.best_coloring = build_equal_coloring(g, dom, base);
    } else if (g.edge_count() == 0) {
        out.best_coloring = all_ones(g.order());
    } else {
        detail::require_order(g.order(), 8, "Gamma_uc_exact (exhaustive)");
        const auto masks = detail::to_masks(g);
        std::size_t best = g.order() + 1;
        std::vector<Color> best_colors;
        for_each_normalized_coloring(
            g, [](Color) { return false; },
            [&](const std::vector<Color>& colors, Color) {
                if (auto v = gamma_for(masks, colors, best, false)) {
                    best = *v;
                    best_colors = colors;
                }
                // Nothing can go below the domination number.
                return best > gamma;
            });
        out.best_coloring = Coloring(best_colors);
    }
    out.witness = gamma_uc_exact(orient(g, out.best_coloring), SearchLimits{kMaskLimit, kMaskLimit});
    out.value = static_cast<Weight>(out.witness.size);
    return out;
}

std::optional<Coloring> coloring_preserving_gamma(const Graph& g, std::size_t k, std::size_t gamma,
                                                  const SearchLimits& limits) {
    detail::require_order(g.order(), limits.coloring_limit, "coloring_preserving_gamma");
    if (k == 0 || k > g.order()) return std::nullopt;
    if (g.edge_count() == 0) {
        if (k == 1 && gamma >= g.order()) return all_ones(g.order());
        return std::nullopt;
    }
    const auto masks = detail::to_masks(g);
    std::vector<Color> colors(g.order(), -1);
    std::vector<std::size_t> used(k, 0);
    std::optional<Coloring> found;
    auto visit = [&](const std::vector<Color>& c) {
        if (gamma_for(masks, c, gamma + 1, true)) {
            found = Coloring(c);
            return false;
        }
        return true;
    };
    surjective_colorings(masks, k, colors, used, 0, k, visit);
    return found;
}

ChiUcResult chi_uc_exact(const Graph& g, const SearchLimits& limits) {
    detail::require_order(g.order(), limits.coloring_limit, "chi_uc_exact");
    if (g.order() == 0) return {};
    const std::size_t gamma = domination_number(g, limits);
    const std::size_t chi = chromatic_number(g, limits).chi;
    for (std::size_t k = chi; k <= g.order(); ++k) {
        if (auto c = coloring_preserving_gamma(g, k, gamma, limits)) return {k, *c};
    }
    throw Error(ErrorCode::InternalVerificationFailed, "no colouring preserves the domination number");
}

Coloring build_equal_coloring(const Graph& g, const VertexSet& d, const Coloring& c0) {
    if (c0.size() != g.order()) throw Error(ErrorCode::LengthMismatch, "base colouring length differs from graph order");
    if (!validate_coloring(g, c0).proper) throw Error(ErrorCode::ImproperBase, "base colouring is not proper");
    for (Vertex v = 0; v < g.order(); ++v) {
        if (d.contains(v)) continue;
        const auto& nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return d.contains(u); })) {
            throw Error(ErrorCode::NotDominating, "vertex " + std::to_string(v) + " is not dominated");
        }
    }
    const Color top = std::max<Color>(c0.max_color(), 0);
    for (Color offset : {top, top + 1}) {
        std::vector<Color> lifted = c0.values();
        for (Vertex v : d.members()) lifted[v] += offset;
        Coloring c(std::move(lifted));
        if (!validate_coloring(g, c).proper) continue;
        if (is_up_color_dominating(orient(g, c), d).dominating) return c;
    }
    throw Error(ErrorCode::InternalVerificationFailed, "lifted colouring failed to make the set dominating");
}

WeightBoundedColoring build_weight_bounded_coloring(const Graph& g, const SearchLimits& limits) {
    detail::require_order(g.order(), limits.search_limit, "build_weight_bounded_coloring");
    WeightBoundedColoring out;
    if (g.order() == 0) return out;
    out.dominating = minimum_dominating_set(g, limits);
    const auto chromatic = chromatic_number(g, limits);
    out.gamma = out.dominating.size();
    out.chi = chromatic.chi;
    const auto s = static_cast<Color>(chromatic.chi);
    const auto& base = chromatic.coloring;

    std::vector<Color> colors(g.order());
    if (s == 1) {
        // Edgeless graph: every vertex is its own dominator.
        std::fill(colors.begin(), colors.end(), 1);
    } else {
        std::vector<std::size_t> hits(static_cast<std::size_t>(s), 0);
        for (Vertex v : out.dominating.members()) ++hits[static_cast<std::size_t>(base[v])];
        std::vector<Color> order(static_cast<std::size_t>(s));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](Color a, Color b) {
            return hits[static_cast<std::size_t>(a)] > hits[static_cast<std::size_t>(b)];
        });
        // rank[class] = position of the class in the ordering.
        std::vector<Color> rank(static_cast<std::size_t>(s));
        for (Color k = 0; k < s; ++k) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
        for (Vertex v = 0; v < g.order(); ++v) {
            const Color k = rank[static_cast<std::size_t>(base[v])];
            if (k == 0) {
                colors[v] = s - 1;
            } else if (out.dominating.contains(v)) {
                colors[v] = s + k - 1;
            } else {
                colors[v] = k - 1;
            }
        }
    }
    out.coloring = Coloring(std::move(colors));
    const auto cg = orient(g, out.coloring);
    if (!is_up_color_dominating(cg, out.dominating).dominating) {
        throw Error(ErrorCode::InternalVerificationFailed, "class-lifted colouring does not dominate");
    }
    out.weight = out.coloring.weight_of(out.dominating);
    return out;
}

}  // namespace upcolor
