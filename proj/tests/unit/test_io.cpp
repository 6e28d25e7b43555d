#include <doctest.h>

#include "../support.hpp"
#include "upcolor/random.hpp"

using namespace upcolor;
using namespace upcolor::test;

namespace {

ErrorCode parse_error(std::string_view text) {
    try {
        parse_graph_text(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("parse succeeded");
    return ErrorCode::SyntaxError;
}

}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("graph file parsing") {
    const auto doc = parse_graph_text("n 3\ne 0 1\ne 1 2\nc 0 0\nc 1 1\nc 2 0\n");
    CHECK(doc.graph == path_graph(3));
    REQUIRE(doc.coloring);
    CHECK(*doc.coloring == Coloring{0, 1, 0});

    const auto commented = parse_graph_text("# a path\nn 3  # three vertices\n\ne 0 1\ne 1 2\n");
    CHECK(commented.graph == path_graph(3));
    CHECK_FALSE(commented.coloring);
}

TEST_CASE("graph file errors") {
    CHECK(parse_error("n 2\ne 0 1\nc 0 1\nc 1 1\n") == ErrorCode::ImproperColoring);
    CHECK(parse_error("n 2\ne 0 2\n") == ErrorCode::VertexOutOfRange);
    CHECK(parse_error("e 0 1\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("n 2\nx 0 1\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("n 2\ne 0 1\nc 0 1\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("n 2\ne 0 one\n") == ErrorCode::SyntaxError);
    try {
        parse_graph_text("n 2\n\nbogus\n");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("K_{2,3} fixtures") {
    const auto big = parse_graph_file(fixture("k23_large_class_top.txt"));
    const auto cg = orient(big.graph, *big.coloring);
    CHECK(local_maxima(cg) == set_of(5, {2, 3, 4}));
    CHECK(gamma_uc_exact(cg).size == 3);
    const auto small = parse_graph_file(fixture("k23_small_class_top.txt"));
    CHECK(gamma_uc_exact(orient(small.graph, *small.coloring)).size == 2);
}

TEST_CASE("serialize then parse is the identity") {
    GraphDocument doc;
    doc.graph = complete_bipartite_graph(2, 3);
    doc.coloring = Coloring{1, 1, 0, 0, 0};
    doc.names = {"a", "b", "x", "y", "z"};
    const auto text = serialize_graph(doc);
    const auto back = parse_graph_text(text);
    CHECK(back.graph == doc.graph);
    CHECK(back.coloring == doc.coloring);
    CHECK(back.names == doc.names);
    CHECK(serialize_graph(back) == text);
}

TEST_CASE("DIMACS CNF") {
    const auto inst = parse_dimacs_cnf("c comment\np cnf 3 2\n1 -2 3 0\n-1\n2 0\n");
    CHECK(inst.variables == 3);
    CHECK(inst.clauses == std::vector<std::vector<int>>{{1, -2, 3}, {-1, 2}});
    CHECK(parse_dimacs_cnf(serialize_dimacs_cnf(inst)).clauses == inst.clauses);
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 1 1\n2 0\n"), Error);
    CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 1 2\n1 0\n"), Error);
}

TEST_CASE("min-cover instance files") {
    const auto inst = parse_min_cover(read_file(fixture("cover_small.txt")));
    CHECK(inst.universe.size() == 4);
    CHECK(inst.subsets.size() == 4);
    CHECK(inst.t == 2);
    CHECK(parse_min_cover("u 2\ns 1 2\n").t == 1);
    CHECK_THROWS_AS(parse_min_cover("u 2\ns 3\n"), Error);
    CHECK_THROWS_AS(parse_min_cover("s 1\n"), Error);
}

TEST_CASE("DOT output") {
    GraphDocument p3{path_graph(3), Coloring{0, 1, 0}, {}, {}};
    const auto dot = emit_dot(p3, set_of(3, {1}));
    CHECK(dot.find("1 [label=\"1:1\", style=dashed, peripheries=2];") != std::string::npos);
    CHECK(dot.find("0 [label=\"0:0\"];") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);

    const auto plain = emit_dot(p3, VertexSet(3));
    CHECK(plain.find("dashed") == std::string::npos);

    GraphDocument k33{complete_bipartite_graph(3, 3), Coloring{1, 1, 1, 0, 0, 0}, {}, {}};
    const auto fig = emit_dot(k33, set_of(6, {0, 1, 2}));
    std::size_t dashed = 0;
    for (auto pos = fig.find("dashed"); pos != std::string::npos; pos = fig.find("dashed", pos + 1)) ++dashed;
    CHECK(dashed == 3);
    CHECK(emit_dot(k33, set_of(6, {0, 1, 2})) == fig);
}

TEST_CASE("random trees") {
    const auto one = random_tree(1, 99);
    CHECK(one.graph.order() == 1);
    CHECK((*one.coloring)[0] >= 0);
    CHECK((*one.coloring)[0] <= 3);

    const auto two = random_tree(2, 0);
    CHECK(two.graph.edge_count() == 1);
    CHECK((*two.coloring)[0] != (*two.coloring)[1]);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto t = random_tree(1 + seed % 15, seed);
        CHECK(is_tree(t.graph));
        CHECK(validate_coloring(t.graph, *t.coloring).proper);
        CHECK(t.coloring->max_color() <= 3);
    }
    CHECK_THROWS_AS(random_tree(0, 1), Error);
}

TEST_CASE("random tree golden fixture") {
    const auto frozen = parse_graph_file(fixture("random_tree_12_seed7.txt"));
    const auto fresh = random_tree(12, 7);
    CHECK(fresh.graph == frozen.graph);
    CHECK(fresh.coloring == frozen.coloring);
}

TEST_CASE("seeded generators are reproducible") {
    Rng a(5), b(5);
    const auto ga = random_connected_graph(7, 0.4, a);
    const auto gb = random_connected_graph(7, 0.4, b);
    CHECK(ga == gb);
    CHECK(is_connected(ga));
    CHECK(random_proper_coloring(ga, a) == random_proper_coloring(gb, b));
    CHECK(random_3cnf(3, 3, a).clauses == random_3cnf(3, 3, b).clauses);
    const auto cover = random_min_cover(5, 4, a);
    CHECK(solve_min_cover(cover).has_value());
}

}
