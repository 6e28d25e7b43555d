#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naive.hpp"
#include "upcolor/exact.hpp"
#include "upcolor/families.hpp"
#include "upcolor/random.hpp"
#include "upcolor/tree.hpp"

using namespace upcolor;

namespace {

std::vector<Graph> random_graphs(std::uint64_t seed, std::size_t count, std::size_t n_max) {
    Rng rng(seed);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 1 + rng.below(n_max);
        out.push_back(random_connected_graph(n, 0.45, rng));
    }
    return out;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("classic invariants agree with naive enumeration") {
    for (const auto& g : random_graphs(101, 60, 8)) {
        const auto inv = classic_invariants(g);
        CHECK(inv.gamma == naive::gamma(g));
        CHECK(inv.i == naive::independent_gamma(g));
        CHECK(inv.alpha == naive::alpha(g));
        CHECK(inv.chi == naive::chi(g));
        CHECK(inv.theta == naive::chi(complement(g)));
        CHECK(inv.gamma_r == naive::roman(g));
        CHECK(naive::dominates(g, minimum_dominating_set(g).mask()));
    }
}

TEST_CASE("fixed-colouring searches agree with naive enumeration") {
    Rng rng(202);
    for (const auto& g : random_graphs(203, 120, 10)) {
        const auto c = random_proper_coloring(g, rng, 1 + rng.below(4));
        const auto cg = orient(g, c);
        const auto gamma = gamma_uc_exact(cg);
        const auto omega = omega_uc_exact(cg);
        const auto ng = naive::gamma_uc(cg);
        const auto nw = naive::omega_uc(cg);
        CHECK(gamma.feasible == ng.has_value());
        CHECK(omega.feasible == nw.has_value());
        if (!ng) continue;
        CHECK(gamma.size == *ng);
        CHECK(omega.weight == *nw);
        CHECK(is_up_color_dominating(cg, gamma.witness).dominating);
        CHECK(is_up_color_dominating(cg, omega.witness).dominating);
        CHECK(c.weight_of(omega.witness) == omega.weight);
    }
}

TEST_CASE("tree algorithms agree with the exact searches") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto doc = random_tree(1 + seed % 14, seed);
        const auto cg = orient(doc.graph, *doc.coloring);
        const auto exact_gamma = gamma_uc_exact(cg);
        if (!exact_gamma.feasible) {
            CHECK_THROWS_AS(tree_gamma_uc(cg), Error);
            CHECK_THROWS_AS(tree_omega_uc(cg), Error);
            continue;
        }
        const auto tg = tree_gamma_uc(cg);
        const auto tw = tree_omega_uc(cg);
        CHECK(tg.size == exact_gamma.size);
        CHECK(tw.weight == omega_uc_exact(cg).weight);
        CHECK(tree_omega_dp(cg).weight == tw.weight);
        CHECK(is_up_color_dominating(cg, tg.witness).dominating);
        CHECK(is_up_color_dominating(cg, tw.witness).dominating);
    }
}

TEST_CASE("Omega_uc normalised search equals the unrestricted search") {
    for (const auto& g : random_graphs(303, 40, 6)) {
        CHECK(Omega_uc_exact(g).value == Omega_uc_unrestricted(g));
    }
}

TEST_CASE("chi_uc witnesses are tight") {
    for (const auto& g : random_graphs(404, 25, 7)) {
        const auto r = chi_uc_exact(g);
        const auto gamma = naive::gamma(g);
        CHECK(r.witness.distinct_colors() == r.colors);
        CHECK(*naive::gamma_uc(orient(g, r.witness)) == gamma);
        if (r.colors > 1) {
            bool smaller = false;
            naive::each_coloring(g, r.colors - 1, [&](const Coloring& c) {
                const auto v = naive::gamma_uc(orient(g, c));
                if (v && *v == gamma) smaller = true;
            });
            CHECK_FALSE(smaller);
        }
    }
}

}
