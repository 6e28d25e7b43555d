#pragma once

// Seeded instance generators. Everything is driven by std::mt19937_64 with
// a rejection-sampled bounded draw so results do not depend on the
// standard library's distribution implementations.

#include <cstdint>
#include <random>

#include "upcolor/io.hpp"
#include "upcolor/reductions.hpp"

namespace upcolor {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    bool chance(double p);
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// Uniform labelled tree (Pruefer decoding) with a random proper colouring
/// from {0..k-1}: vertices are coloured in a random connected order, so each
/// one sees exactly one coloured neighbour and k >= 2 always suffices.
GraphDocument random_tree(std::size_t n, std::uint64_t seed, std::size_t k = 4);

/// Proper colouring visiting vertices in random order; each picks uniformly
/// among the colours 0..k-1 its coloured neighbours leave free, falling back
/// to the smallest free colour >= k.
Coloring random_proper_coloring(const Graph& g, Rng& rng, std::size_t k = 4);

/// G(n, p) conditioned on connectivity (resampled until connected).
Graph random_connected_graph(std::size_t n, double p, Rng& rng);

ThreeSatInstance random_3cnf(std::size_t variables, std::size_t clauses, Rng& rng);

MinCoverInstance random_min_cover(std::size_t universe, std::size_t subsets, Rng& rng);

}  // namespace upcolor
