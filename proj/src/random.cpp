#include "upcolor/random.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <queue>
#include <set>

namespace upcolor {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorCode::BadParameters, "Rng::below needs a positive bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

bool Rng::chance(double p) {
    // 53 random bits, uniform in [0, 1).
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
}

namespace {

template <class T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

std::vector<Edge> pruefer_tree(std::size_t n, Rng& rng) {
    std::vector<Edge> edges;
    if (n < 2) return edges;
    if (n == 2) return {{0, 1}};
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
    std::vector<std::size_t> degree(n, 1);
    for (Vertex c : code) ++degree[c];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.push(v);
    }
    for (Vertex c : code) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        edges.push_back({leaf, c});
        if (--degree[c] == 1) leaves.push(c);
    }
    const Vertex a = leaves.top();
    leaves.pop();
    edges.push_back({a, leaves.top()});
    return edges;
}

}  // namespace

GraphDocument random_tree(std::size_t n, std::uint64_t seed, std::size_t k) {
    if (n == 0) throw Error(ErrorCode::BadParameters, "random tree needs n >= 1");
    if (k < 2 && n > 1) throw Error(ErrorCode::BadParameters, "random tree colouring needs k >= 2");
    Rng rng(seed);
    GraphDocument doc;
    doc.graph = new_graph(n, pruefer_tree(n, rng));
    const Graph& g = doc.graph;

    std::vector<Color> color(n, -1);
    std::vector<Vertex> frontier{static_cast<Vertex>(rng.below(n))};
    std::vector<bool> queued(n, false);
    queued[frontier[0]] = true;
    while (!frontier.empty()) {
        const std::size_t pick = rng.below(frontier.size());
        const Vertex v = frontier[pick];
        frontier[pick] = frontier.back();
        frontier.pop_back();
        Color parent = -1;
        for (Vertex u : g.neighbors(v)) {
            if (color[u] >= 0) parent = color[u];
        }
        std::vector<Color> options;
        for (Color c = 0; c < static_cast<Color>(k); ++c) {
            if (c != parent) options.push_back(c);
        }
        color[v] = options[rng.below(options.size())];
        for (Vertex u : g.neighbors(v)) {
            if (!queued[u]) {
                queued[u] = true;
                frontier.push_back(u);
            }
        }
    }
    doc.coloring = Coloring(std::move(color));
    doc.source = "random_tree(" + std::to_string(n) + ", " + std::to_string(seed) + ")";
    return doc;
}

Coloring random_proper_coloring(const Graph& g, Rng& rng, std::size_t k) {
    const std::size_t n = g.order();
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    shuffle(order, rng);
    std::vector<Color> color(n, -1);
    for (Vertex v : order) {
        std::set<Color> used;
        for (Vertex u : g.neighbors(v)) {
            if (color[u] >= 0) used.insert(color[u]);
        }
        std::vector<Color> options;
        for (Color c = 0; c < static_cast<Color>(k); ++c) {
            if (!used.count(c)) options.push_back(c);
        }
        if (!options.empty()) {
            color[v] = options[rng.below(options.size())];
        } else {
            Color c = static_cast<Color>(k);
            while (used.count(c)) ++c;
            color[v] = c;
        }
    }
    return Coloring(std::move(color));
}

Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
    if (n == 0) throw Error(ErrorCode::BadParameters, "random graph needs n >= 1");
    if (n > 1 && p <= 0.0) throw Error(ErrorCode::BadParameters, "edge probability must be positive");
    for (;;) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (rng.chance(p)) edges.push_back({u, v});
            }
        }
        Graph g = new_graph(n, edges);
        if (is_connected(g)) return g;
    }
}

ThreeSatInstance random_3cnf(std::size_t variables, std::size_t clauses, Rng& rng) {
    if (variables == 0 || clauses == 0) throw Error(ErrorCode::BadParameters, "3-CNF needs variables and clauses");
    ThreeSatInstance inst;
    inst.variables = variables;
    const std::size_t width = std::min<std::size_t>(3, variables);
    for (std::size_t i = 0; i < clauses; ++i) {
        std::vector<int> clause;
        while (clause.size() < width) {
            const int var = static_cast<int>(rng.below(variables)) + 1;
            const bool seen = std::any_of(clause.begin(), clause.end(), [&](int lit) { return std::abs(lit) == var; });
            if (seen) continue;
            clause.push_back(rng.chance(0.5) ? -var : var);
        }
        inst.clauses.push_back(std::move(clause));
    }
    return inst;
}

MinCoverInstance random_min_cover(std::size_t universe, std::size_t subsets, Rng& rng) {
    if (universe == 0 || subsets == 0) throw Error(ErrorCode::BadParameters, "cover instance needs elements and subsets");
    MinCoverInstance inst;
    for (std::size_t e = 1; e <= universe; ++e) inst.universe.push_back(static_cast<int>(e));
    std::vector<bool> covered(universe + 1, false);
    for (std::size_t i = 0; i < subsets; ++i) {
        const std::size_t size = 1 + rng.below(std::min<std::size_t>(3, universe));
        std::vector<int> subset;
        while (subset.size() < size) {
            const int e = static_cast<int>(rng.below(universe)) + 1;
            if (std::find(subset.begin(), subset.end(), e) == subset.end()) subset.push_back(e);
        }
        std::sort(subset.begin(), subset.end());
        for (int e : subset) covered[e] = true;
        inst.subsets.push_back(std::move(subset));
    }
    // Elements missed by every subset get a singleton so a cover exists.
    for (std::size_t e = 1; e <= universe; ++e) {
        if (!covered[e]) inst.subsets.push_back({static_cast<int>(e)});
    }
    inst.t = inst.subsets.size();
    return inst;
}

}  // namespace upcolor
