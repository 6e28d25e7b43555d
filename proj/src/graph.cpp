#include "upcolor/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

namespace upcolor {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ImproperColoring: return "ImproperColoring";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotDominating: return "NotDominating";
    case ErrorCode::ImproperBase: return "ImproperBase";
    case ErrorCode::InternalVerificationFailed: return "InternalVerificationFailed";
    case ErrorCode::EmptyCollection: return "EmptyCollection";
    case ErrorCode::EmptyFormula: return "EmptyFormula";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::TooManyOccurrences: return "TooManyOccurrences";
    case ErrorCode::BadAssignmentLength: return "BadAssignmentLength";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::SyntaxError: return "SyntaxError";
    }
    return "Unknown";
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_members(std::size_t universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw Error(ErrorCode::TooLarge, "bit mask sets hold at most 64 vertices");
    VertexSet s(universe);
    if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
}

std::size_t VertexSet::size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::contains(Vertex v) const {
    if (v >= universe_) return false;
    return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " outside set universe");
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
    if (v >= universe_) return;
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto word = words_[w];
        while (word != 0) {
            const int bit = std::countr_zero(word);
            out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(bit)));
            word &= word - 1;
        }
    }
    return out;
}

std::uint64_t VertexSet::mask() const {
    if (universe_ > 64) throw Error(ErrorCode::TooLarge, "bit mask view needs at most 64 vertices");
    return words_.empty() ? 0 : words_[0];
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        const auto theirs = w < other.words_.size() ? other.words_[w] : 0;
        if ((words_[w] & ~theirs) != 0) return false;
    }
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    if (other.universe_ > universe_) {
        universe_ = other.universe_;
        words_.resize(other.words_.size(), 0);
    }
    for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    const auto common = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < common; ++w) words_[w] &= ~other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= w < other.words_.size() ? other.words_[w] : 0;
    return *this;
}

// -------------------------------------------------------------------- Graph

Graph new_graph(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adjacency_.resize(n);
    std::set<Edge> seen;
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside 0.." + std::to_string(n));
        }
        if (e.u == e.v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
        const Edge canon{std::min(e.u, e.v), std::max(e.u, e.v)};
        if (!seen.insert(canon).second) {
            throw Error(ErrorCode::DuplicateEdge,
                        "duplicate edge (" + std::to_string(canon.u) + "," + std::to_string(canon.v) + ")");
        }
    }
    g.edges_.assign(seen.begin(), seen.end());
    for (const auto& e : g.edges_) {
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) return false;
    const auto& row = adjacency_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

// ----------------------------------------------------------------- Coloring

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
    for (std::size_t v = 0; v < colors_.size(); ++v) {
        if (colors_[v] < 0) throw Error(ErrorCode::BadParameters, "negative colour at vertex " + std::to_string(v));
    }
}

Color Coloring::max_color() const {
    if (colors_.empty()) return -1;
    return *std::max_element(colors_.begin(), colors_.end());
}

std::size_t Coloring::distinct_colors() const {
    std::vector<Color> sorted = colors_;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

Weight Coloring::weight_of(const VertexSet& set) const {
    Weight total = 0;
    for (Vertex v : set.members()) total += colors_.at(v);
    return total;
}

ColoringCheck validate_coloring(const Graph& g, const Coloring& c) {
    if (c.size() != g.order()) {
        throw Error(ErrorCode::LengthMismatch,
                    "colouring has " + std::to_string(c.size()) + " entries for " + std::to_string(g.order()) + " vertices");
    }
    for (const auto& e : g.edges()) {
        if (c[e.u] == c[e.v]) return {false, e};
    }
    return {};
}

// ------------------------------------------------------------- ColoredGraph

ColoredGraph orient(const Graph& g, const Coloring& c) {
    const auto check = validate_coloring(g, c);
    if (!check.proper) {
        throw Error(ErrorCode::ImproperColoring, "edge (" + std::to_string(check.violation->u) + "," +
                                                     std::to_string(check.violation->v) + ") joins equal colours");
    }
    ColoredGraph cg;
    cg.graph_ = g;
    cg.coloring_ = c;
    cg.in_.resize(g.order());
    cg.out_.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        for (Vertex u : g.neighbors(v)) {
            if (c[u] > c[v]) {
                cg.in_[v].push_back(u);
            } else {
                cg.out_[v].push_back(u);
            }
        }
    }
    return cg;
}

std::vector<Edge> ColoredGraph::arcs() const {
    std::vector<Edge> out;
    for (Vertex v = 0; v < order(); ++v) {
        for (Vertex u : out_[v]) out.push_back({v, u});
    }
    return out;
}

VertexSet local_maxima(const ColoredGraph& cg) {
    VertexSet m(cg.order());
    for (Vertex v = 0; v < cg.order(); ++v) {
        if (cg.in_degree(v) == 0) m.insert(v);
    }
    return m;
}

bool up_color_feasible(const ColoredGraph& cg) {
    for (Vertex v = 0; v < cg.order(); ++v) {
        if (cg.graph().degree(v) == 0 && cg.color(v) == 0) return false;
    }
    return true;
}

DominationCheck is_up_color_dominating(const ColoredGraph& cg, const VertexSet& d) {
    DominationCheck result;
    result.instance_feasible = up_color_feasible(cg);
    for (Vertex v : d.members()) {
        if (v >= cg.order()) throw Error(ErrorCode::VertexOutOfRange, "set member outside graph");
        if (cg.color(v) == 0) {
            result.dominating = false;
            result.violation = DominationViolation{DominationViolation::Kind::ColorZeroMember, v};
            return result;
        }
    }
    for (Vertex v = 0; v < cg.order(); ++v) {
        if (d.contains(v)) continue;
        const auto& higher = cg.in_neighbors(v);
        const bool covered = std::any_of(higher.begin(), higher.end(), [&](Vertex u) { return d.contains(u); });
        if (!covered) {
            result.dominating = false;
            result.violation = DominationViolation{DominationViolation::Kind::Undominated, v};
            return result;
        }
    }
    return result;
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) edges.push_back({u, v});
        }
    }
    return new_graph(g.order(), edges);
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == g.order();
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.edge_count() + 1 == g.order() && is_connected(g);
}

VertexSet universal_vertices(const Graph& g) {
    VertexSet out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) + 1 == g.order()) out.insert(v);
    }
    return out;
}

}  // namespace upcolor
