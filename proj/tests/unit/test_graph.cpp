#include <doctest.h>

#include "../support.hpp"

using namespace upcolor;
using namespace upcolor::test;

TEST_SUITE("graph_core") {

TEST_CASE("new_graph builds canonical edge lists") {
    const auto p3 = new_graph(3, {{1, 0}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(p3.degree(1) == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK_FALSE(p3.adjacent(0, 2));

    const auto k23g = new_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(k23g == complete_bipartite_graph(2, 3));
}

TEST_CASE("new_graph rejects malformed input") {
    auto code_of = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        FAIL("no error raised");
        return ErrorCode::SyntaxError;
    };
    CHECK(code_of([] { new_graph(2, {{0, 0}}); }) == ErrorCode::LoopEdge);
    CHECK(code_of([] { new_graph(2, {{0, 1}, {1, 0}}); }) == ErrorCode::DuplicateEdge);
    CHECK(code_of([] { new_graph(2, {{0, 2}}); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("validate_coloring") {
    const auto p3 = path_graph(3);
    CHECK(validate_coloring(p3, Coloring{0, 1, 0}).proper);
    const auto bad = validate_coloring(p3, Coloring{0, 0, 1});
    CHECK_FALSE(bad.proper);
    REQUIRE(bad.violation);
    CHECK(*bad.violation == Edge{0, 1});
    CHECK(validate_coloring(complete_bipartite_graph(2, 3), Coloring{0, 0, 1, 1, 1}).proper);
    CHECK_THROWS_AS(orient(p3, Coloring{0, 0, 1}), Error);
}

TEST_CASE("orientation points from higher to lower colour") {
    auto cg = orient(path_graph(3), Coloring{0, 1, 0});
    CHECK(cg.arcs() == std::vector<Edge>{{1, 0}, {1, 2}});
    cg = orient(path_graph(3), Coloring{0, 1, 2});
    CHECK(cg.arcs() == std::vector<Edge>{{1, 0}, {2, 1}});
    cg = orient(complete_graph(3), Coloring{0, 1, 2});
    CHECK(cg.arcs() == std::vector<Edge>{{1, 0}, {2, 0}, {2, 1}});
    CHECK(cg.in_degree(0) == 2);
    CHECK(cg.out_degree(2) == 2);
}

TEST_CASE("local maxima") {
    CHECK(local_maxima(orient(path_graph(3), Coloring{0, 1, 0})) == set_of(3, {1}));
    CHECK(local_maxima(orient(path_graph(3), Coloring{1, 0, 1})) == set_of(3, {0, 2}));
    CHECK(local_maxima(k23(true)) == set_of(5, {2, 3, 4}));
}

TEST_CASE("up-color domination predicate") {
    const auto cg = k23(true);
    CHECK(is_up_color_dominating(cg, set_of(5, {2, 3, 4})).dominating);
    const auto wrong = is_up_color_dominating(cg, set_of(5, {0, 1}));
    CHECK_FALSE(wrong.dominating);
    REQUIRE(wrong.violation);
    CHECK(wrong.violation->kind == DominationViolation::Kind::ColorZeroMember);
    CHECK(is_up_color_dominating(orient(path_graph(3), Coloring{0, 1, 0}), set_of(3, {1})).dominating);

    const auto undominated = is_up_color_dominating(orient(path_graph(3), Coloring{0, 1, 2}), set_of(3, {2}));
    CHECK_FALSE(undominated.dominating);
    CHECK(undominated.violation->kind == DominationViolation::Kind::Undominated);
    CHECK(undominated.violation->vertex == 0);
}

TEST_CASE("feasibility needs no isolated colour-0 vertex") {
    CHECK_FALSE(up_color_feasible(orient(new_graph(1, {}), Coloring{0})));
    CHECK(up_color_feasible(orient(new_graph(1, {}), Coloring{1})));
    CHECK(up_color_feasible(orient(path_graph(2), Coloring{0, 1})));
}

TEST_CASE("complement, connectivity, trees, universal vertices") {
    CHECK(complement(complete_graph(3)).edge_count() == 0);
    CHECK(complement(path_graph(3)).edges() == std::vector<Edge>{{0, 2}});
    CHECK(complement(cycle_graph(5)).edge_count() == 5);
    CHECK(is_connected(cycle_graph(5)));
    CHECK_FALSE(is_connected(new_graph(3, {{0, 1}})));
    CHECK(is_tree(star_graph(4)));
    CHECK_FALSE(is_tree(cycle_graph(4)));
    CHECK(universal_vertices(cone_graph(cycle_graph(4))) == set_of(5, {4}));
}

TEST_CASE("vertex sets") {
    VertexSet s(70);
    s.insert(3);
    s.insert(69);
    CHECK(s.size() == 2);
    CHECK(s.members() == std::vector<Vertex>{3, 69});
    s.erase(3);
    CHECK_FALSE(s.contains(3));
    CHECK(VertexSet::from_mask(5, 0b10101) == set_of(5, {0, 2, 4}));
    CHECK_THROWS_AS(s.insert(70), Error);
}

}
