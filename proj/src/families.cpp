#include "upcolor/families.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace upcolor {

namespace {

struct FamilyName {
    FamilyKind kind;
    std::string_view name;
};

constexpr std::array<FamilyName, 9> kFamilyNames{{
    {FamilyKind::Path, "path"},
    {FamilyKind::Cycle, "cycle"},
    {FamilyKind::Complete, "complete"},
    {FamilyKind::CompleteBipartite, "complete_bipartite"},
    {FamilyKind::Star, "star"},
    {FamilyKind::Hairy, "hairy"},
    {FamilyKind::Cone, "cone"},
    {FamilyKind::CliqueFlower, "clique_flower"},
    {FamilyKind::House, "house"},
}};

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::BadParameters, what);
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

std::string_view to_string(FamilyKind kind) {
    for (const auto& f : kFamilyNames) {
        if (f.kind == kind) return f.name;
    }
    return "unknown";
}

std::optional<FamilyKind> family_from_string(std::string_view name) {
    for (const auto& f : kFamilyNames) {
        if (f.name == name) return f.kind;
    }
    return std::nullopt;
}

Graph path_graph(std::size_t n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
    return new_graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
    edges.push_back({0, static_cast<Vertex>(n - 1)});
    return new_graph(n, edges);
}

Graph complete_graph(std::size_t n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return new_graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t r, std::size_t s) {
    require(r >= 1 && s >= 1, "complete bipartite graph needs r, s >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < r; ++u) {
        for (Vertex v = 0; v < s; ++v) edges.push_back({u, static_cast<Vertex>(r + v)});
    }
    return new_graph(r + s, edges);
}

Graph star_graph(std::size_t leaves) { return complete_bipartite_graph(1, leaves); }

Graph hairy_graph(const Graph& base, std::size_t l) {
    const std::size_t n = base.order();
    std::vector<Edge> edges = base.edges();
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t k = 0; k < l; ++k) edges.push_back({v, static_cast<Vertex>(n + v * l + k)});
    }
    return new_graph(n * (l + 1), edges);
}

Graph cone_graph(const Graph& base) {
    const auto apex = static_cast<Vertex>(base.order());
    std::vector<Edge> edges = base.edges();
    for (Vertex v = 0; v < apex; ++v) edges.push_back({v, apex});
    return new_graph(base.order() + 1, edges);
}

Graph clique_flower(std::size_t n, bool shared_attachment) {
    require(n >= 1, "clique flower needs n >= 1");
    // Central K_{n+1} on 0..n; vertex n is the one left bare.
    std::vector<Edge> edges = complete_graph(n + 1).edges();
    auto next = static_cast<Vertex>(n + 1);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> petal;
        if (shared_attachment) petal.push_back(v);
        while (petal.size() < n) petal.push_back(next++);
        for (std::size_t a = 0; a < petal.size(); ++a) {
            for (std::size_t b = a + 1; b < petal.size(); ++b) edges.push_back({petal[a], petal[b]});
        }
        if (!shared_attachment) {
            for (Vertex p : petal) edges.push_back({v, p});
        }
    }
    return new_graph(next, edges);
}

Graph house_graph() {
    // Square 0-1-2-3 with roof 4 over the edge 0-1.
    return new_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
}

Graph top_class_example_graph() { return new_graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {1, 5}}); }

FamilyGraph generate(const FamilySpec& spec) {
    FamilyGraph out;
    auto colors_of = [](std::size_t n, auto f) {
        std::vector<Color> c(n);
        for (Vertex v = 0; v < n; ++v) c[v] = f(v);
        return Coloring(std::move(c));
    };
    switch (spec.kind) {
        case FamilyKind::Path:
            out.graph = path_graph(spec.n);
            out.coloring = colors_of(spec.n, [](Vertex v) { return static_cast<Color>(v % 2); });
            break;
        case FamilyKind::Cycle: {
            out.graph = cycle_graph(spec.n);
            const std::size_t n = spec.n;
            out.coloring = colors_of(n, [n](Vertex v) {
                return static_cast<Color>(n % 2 == 1 && v == n - 1 ? 2 : v % 2);
            });
            break;
        }
        case FamilyKind::Complete:
            out.graph = complete_graph(spec.n);
            out.coloring = colors_of(spec.n, [](Vertex v) { return static_cast<Color>(v); });
            break;
        case FamilyKind::CompleteBipartite: {
            out.graph = complete_bipartite_graph(spec.r, spec.s);
            const std::size_t r = spec.r;
            out.coloring = colors_of(spec.r + spec.s, [r](Vertex v) { return static_cast<Color>(v < r ? 1 : 0); });
            break;
        }
        case FamilyKind::Star:
            require(spec.n >= 1, "star needs at least one leaf");
            out.graph = star_graph(spec.n);
            out.coloring = colors_of(spec.n + 1, [](Vertex v) { return static_cast<Color>(v == 0 ? 1 : 0); });
            break;
        case FamilyKind::Hairy:
            require(spec.base.has_value(), "hairy needs a base graph");
            out.graph = hairy_graph(*spec.base, spec.l);
            break;
        case FamilyKind::Cone:
            require(spec.base.has_value(), "cone needs a base graph");
            out.graph = cone_graph(*spec.base);
            break;
        case FamilyKind::CliqueFlower:
            out.graph = clique_flower(spec.n, spec.shared_attachment);
            break;
        case FamilyKind::House:
            out.graph = house_graph();
            out.coloring = Coloring({2, 1, 2, 0, 0});
            break;
    }
    return out;
}

bool FormulaBounds::admits(std::size_t value) const {
    if (!allowed.empty()) return std::find(allowed.begin(), allowed.end(), value) != allowed.end();
    return lo <= value && value <= hi;
}

FormulaBounds family_formula_bounds(const FamilySpec& spec, ColoringKind kind) {
    FormulaBounds b;
    switch (spec.kind) {
        case FamilyKind::Path:
            require(spec.n >= 1, "path needs n >= 1");
            b.lo = kind == ColoringKind::Any ? ceil_div(spec.n, 3) : spec.n / 2;
            b.hi = ceil_div(spec.n, 2);
            return b;
        case FamilyKind::Cycle:
            require(spec.n >= 3, "cycle needs n >= 3");
            b.lo = ceil_div(spec.n, 3);
            b.hi = spec.n / 2;
            return b;
        case FamilyKind::CompleteBipartite: {
            require(spec.r >= 1 && spec.s >= 1, "complete bipartite graph needs r, s >= 1");
            const std::size_t lo = std::min(spec.r, spec.s);
            const std::size_t hi = std::max(spec.r, spec.s);
            // The domination number of K_{r,s}: 1 with a side of size one, else 2.
            b.lo = lo == 1 ? 1 : 2;
            b.hi = hi;
            if (kind == ColoringKind::Optimal) {
                b.lo = lo;
                b.allowed = lo == hi ? std::vector<std::size_t>{lo} : std::vector<std::size_t>{lo, hi};
            }
            return b;
        }
        default:
            throw Error(ErrorCode::UnsupportedFamily,
                        "no closed-form gamma_uc interval for family " + std::string(to_string(spec.kind)));
    }
}

std::vector<std::size_t> dominating_top_class_sizes(const Graph& g) {
    const auto chi = static_cast<Color>(chromatic_number(g).chi);
    std::set<std::size_t> sizes;
    for_each_normalized_coloring(
        g, [&](Color max) { return max >= chi; },
        [&](const std::vector<Color>& colors, Color max) {
            if (max != chi - 1) return true;
            std::size_t top = 0;
            bool dominating = true;
            for (Vertex v = 0; v < g.order() && dominating; ++v) {
                if (colors[v] == max) {
                    ++top;
                    continue;
                }
                const auto& nb = g.neighbors(v);
                dominating = std::any_of(nb.begin(), nb.end(), [&](Vertex u) { return colors[u] == max; });
            }
            if (dominating) sizes.insert(top);
            return true;
        });
    return {sizes.begin(), sizes.end()};
}

}  // namespace upcolor
