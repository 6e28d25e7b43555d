#pragma once

// Text formats: the line-oriented graph file, DIMACS CNF, the minimum cover
// instance file, and Graphviz DOT output.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "upcolor/graph.hpp"
#include "upcolor/reductions.hpp"

namespace upcolor {

struct GraphDocument {
    Graph graph;
    std::optional<Coloring> coloring;
    std::vector<std::string> names;  // empty, or one per vertex
    std::string source;
};

/// Directives, one per line, '#' starts a comment:
///   n <count>          vertex count, must come first
///   e <u> <v>          undirected edge, 0-based
///   c <v> <color>      colour of v; either every vertex or none
///   v <v> <name>       optional display name
GraphDocument parse_graph_text(std::string_view text, std::string source = {});
GraphDocument parse_graph_file(const std::string& path);

/// Canonical form: n, sorted edges, colours, names. parse(serialize(d))
/// reproduces d.
std::string serialize_graph(const GraphDocument& doc);

/// DIMACS CNF ("p cnf <vars> <clauses>", clauses terminated by 0).
ThreeSatInstance parse_dimacs_cnf(std::string_view text);
std::string serialize_dimacs_cnf(const ThreeSatInstance& inst);

/// "u <m>" declares elements 1..m, each "s e1 [e2] [e3]" adds a subset,
/// optional "t <bound>" sets the decision bound.
MinCoverInstance parse_min_cover(std::string_view text);

std::string read_file(const std::string& path);

/// Vertices are labelled "id:color" (or "name:color"); highlighted
/// vertices get a dashed double border.
std::string emit_dot(const GraphDocument& doc, const VertexSet& highlight);

}  // namespace upcolor
