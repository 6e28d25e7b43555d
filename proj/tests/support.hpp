#pragma once

#include <string>

#include "upcolor/exact.hpp"
#include "upcolor/families.hpp"
#include "upcolor/graph.hpp"
#include "upcolor/io.hpp"

namespace upcolor::test {

inline std::string fixture(const std::string& name) { return std::string(UPCOLOR_FIXTURES) + "/" + name; }

inline ColoredGraph colored(const Graph& g, Coloring c) { return orient(g, c); }

/// K_{2,3} with the class of three (vertices 2,3,4) coloured 1 or 0.
inline ColoredGraph k23(bool large_class_on_top) {
    const Graph g = complete_bipartite_graph(2, 3);
    return large_class_on_top ? orient(g, Coloring{0, 0, 1, 1, 1}) : orient(g, Coloring{1, 1, 0, 0, 0});
}

inline VertexSet set_of(std::size_t n, std::initializer_list<Vertex> members) { return VertexSet(n, members); }

}  // namespace upcolor::test
