#pragma once

// Graph and coloring data model, the colour-induced orientation and the
// up-color domination predicate.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "upcolor/error.hpp"

namespace upcolor {

using Vertex = std::uint32_t;
using Color = std::int32_t;
using Weight = std::int64_t;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Membership over the dense id range 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    static VertexSet from_members(std::size_t universe, std::span<const Vertex> members);
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }

    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);

    std::vector<Vertex> members() const;
    /// Only valid for universes of at most 64 vertices.
    std::uint64_t mask() const;

    bool is_subset_of(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

class Graph {
public:
    Graph() = default;

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    /// Canonical edge list: u < v, sorted.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Sorted neighbour list.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

private:
    friend Graph new_graph(std::size_t n, std::span<const Edge> edges);

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

Graph new_graph(std::size_t n, std::span<const Edge> edges);
inline Graph new_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return new_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Total map vertex -> non-negative colour. Properness is checked against a
/// graph separately; colourings need not be surjective nor start at 0.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<Color> colors);
    Coloring(std::initializer_list<Color> colors) : Coloring(std::vector<Color>(colors)) {}

    std::size_t size() const noexcept { return colors_.size(); }
    Color operator[](Vertex v) const { return colors_[v]; }
    Color at(Vertex v) const { return colors_.at(v); }
    const std::vector<Color>& values() const noexcept { return colors_; }

    /// Largest colour in use, or -1 on an empty colouring.
    Color max_color() const;
    /// Number of distinct colours in use.
    std::size_t distinct_colors() const;
    Weight weight_of(const VertexSet& set) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
};

struct ColoringCheck {
    bool proper = true;
    std::optional<Edge> violation;
};

ColoringCheck validate_coloring(const Graph& g, const Coloring& c);

/// A graph together with a proper colouring and the induced orientation:
/// every edge points from its higher-coloured endpoint to the lower one.
class ColoredGraph {
public:
    const Graph& graph() const noexcept { return graph_; }
    const Coloring& coloring() const noexcept { return coloring_; }
    std::size_t order() const noexcept { return graph_.order(); }
    Color color(Vertex v) const { return coloring_[v]; }

    /// Neighbours of strictly higher colour.
    const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_.at(v); }
    /// Neighbours of strictly lower colour.
    const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_.at(v); }
    std::size_t in_degree(Vertex v) const { return in_.at(v).size(); }
    std::size_t out_degree(Vertex v) const { return out_.at(v).size(); }

    /// Directed edges (from, to), sorted.
    std::vector<Edge> arcs() const;

private:
    friend ColoredGraph orient(const Graph& g, const Coloring& c);

    Graph graph_;
    Coloring coloring_;
    std::vector<std::vector<Vertex>> in_;
    std::vector<std::vector<Vertex>> out_;
};

ColoredGraph orient(const Graph& g, const Coloring& c);

/// Vertices with no neighbour of strictly greater colour (sources of the
/// orientation); isolated vertices are included.
VertexSet local_maxima(const ColoredGraph& cg);

struct DominationViolation {
    enum class Kind { ColorZeroMember, Undominated };
    Kind kind;
    Vertex vertex;
};

struct DominationCheck {
    bool dominating = true;
    std::optional<DominationViolation> violation;
    /// False when some isolated vertex has colour 0: no up-color dominating
    /// set exists at all for this coloured graph.
    bool instance_feasible = true;
};

DominationCheck is_up_color_dominating(const ColoredGraph& cg, const VertexSet& d);

/// True iff no isolated vertex carries colour 0.
bool up_color_feasible(const ColoredGraph& cg);

Graph complement(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// Vertices adjacent to every other vertex.
VertexSet universal_vertices(const Graph& g);

}  // namespace upcolor
