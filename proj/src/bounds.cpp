#include <algorithm>
#include <numeric>
#include <string>

#include "upcolor/families.hpp"

namespace upcolor {

Rational Rational::of(std::int64_t n, std::int64_t d) {
    const std::int64_t g = std::gcd(n, d);
    return g == 0 ? Rational{0, 1} : Rational{n / g, d / g};
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::size_t BoundReport::violations() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const BoundCheck& c) { return !c.holds; }));
}

std::string_view to_string(Comparison c) {
    switch (c) {
        case Comparison::Less: return "<";
        case Comparison::Equal: return "=";
        case Comparison::Greater: return ">";
    }
    return "?";
}

namespace {

Rational whole(std::size_t v) { return Rational::of(static_cast<std::int64_t>(v)); }

void le(BoundReport& r, std::string name, Rational left, Rational right) {
    BoundCheck c;
    c.name = std::move(name);
    c.left = left;
    c.right = right;
    c.holds = left <= right;
    r.checks.push_back(std::move(c));
}

}  // namespace

BoundReport audit_bounds(const ColoredGraph& cg, const AuditOptions& options) {
    const Graph& g = cg.graph();
    const std::size_t n = g.order();
    if (n > options.limits.search_limit) {
        throw Error(ErrorCode::TooLarge, "bound audit: " + std::to_string(n) + " vertices exceeds limit " +
                                             std::to_string(options.limits.search_limit));
    }
    BoundReport r;
    if (n == 0) return r;
    const auto inv = classic_invariants(g, options.limits);
    le(r, "gamma <= i", whole(inv.gamma), whole(inv.i));
    le(r, "i <= alpha", whole(inv.i), whole(inv.alpha));

    if (up_color_feasible(cg)) {
        const std::size_t gamma_uc = *gamma_uc_value(cg, std::nullopt, options.limits);
        const Color top = cg.coloring().max_color();
        std::size_t top_class = 0;
        for (Vertex v = 0; v < n; ++v) top_class += cg.color(v) == top ? 1 : 0;
        le(r, "|top colour class| <= gamma_uc", whole(top_class), whole(gamma_uc));
        le(r, "|local maxima| <= gamma_uc", whole(local_maxima(cg).size()), whole(gamma_uc));
        le(r, "gamma <= gamma_uc", whole(inv.gamma), whole(gamma_uc));
        le(r, "gamma_uc <= theta", whole(gamma_uc), whole(inv.theta));
    }

    if (n >= 5 && n <= options.omega_limit && is_connected(g)) {
        r.omega_audited = true;
        SearchLimits wide = options.limits;
        wide.coloring_limit = std::max(wide.coloring_limit, n);
        const auto omega = Omega_uc_exact(g, wide).value;
        const auto chi = static_cast<std::int64_t>(inv.chi);
        const auto gamma = static_cast<std::int64_t>(inv.gamma);
        const auto i = static_cast<std::int64_t>(inv.i);
        const Rational om = Rational::of(omega);
        const Rational weight_bound = Rational::of(3 * (chi - 1) * gamma, 2);
        const Rational indep_bound = Rational::of(i * chi);
        const Rational quarter = Rational::of(static_cast<std::int64_t>(n * n), 4);
        le(r, "chi - 1 <= Omega_uc", Rational::of(chi - 1), om);
        le(r, "gamma <= Omega_uc", Rational::of(gamma), om);
        le(r, "Omega_uc <= (3/2)(chi - 1) gamma", om, weight_bound);
        le(r, "Omega_uc <= i chi", om, indep_bound);
        le(r, "min{(3/2)(chi - 1) gamma, i chi} <= n^2/4", weight_bound <= indep_bound ? weight_bound : indep_bound,
           quarter);
        le(r, "i chi <= n^2/4", indep_bound, quarter);

        BoundCheck cone;
        cone.name = "Omega_uc = chi - 1 iff cone";
        cone.relation = Relation::Iff;
        cone.left = om;
        cone.right = Rational::of(chi - 1);
        const bool is_cone = !universal_vertices(g).empty();
        cone.holds = (om == cone.right) == is_cone;
        cone.detail = is_cone ? "cone" : "not a cone";
        r.checks.push_back(std::move(cone));
    }
    return r;
}

RomanComparison roman_comparison(const Graph& g, const SearchLimits& limits) {
    RomanComparison out;
    out.omega = Omega_uc_exact(g, limits).value;
    out.gamma_r = roman_domination_number(g, limits);
    const auto gr = static_cast<Weight>(out.gamma_r);
    out.relation = out.omega < gr ? Comparison::Less : out.omega == gr ? Comparison::Equal : Comparison::Greater;
    return out;
}

ColorFloor hairy_color_floor(const Graph& g, std::size_t l, const SearchLimits& limits) {
    const Graph h = hairy_graph(g, l);
    ColorFloor out;
    out.omega = Omega_uc_exact(h, limits).value;
    std::size_t best = h.order() + 1;
    std::vector<Color> best_colors;
    // Every colour up to the maximum is used, and the top class is in the
    // witness, so branches with max > Omega or max + 1 >= best are dead.
    for_each_normalized_coloring(
        h, [&](Color max) { return static_cast<Weight>(max) > out.omega || static_cast<std::size_t>(max) + 1 >= best; },
        [&](const std::vector<Color>& colors, Color max) {
            const auto w = omega_uc_value(orient(h, Coloring(colors)), out.omega + 1, SearchLimits{kMaskLimit, kMaskLimit});
            if (w && *w == out.omega) {
                best = static_cast<std::size_t>(max) + 1;
                best_colors = colors;
            }
            return true;
        });
    out.min_colors = best;
    out.example = Coloring(best_colors);
    return out;
}

}  // namespace upcolor
