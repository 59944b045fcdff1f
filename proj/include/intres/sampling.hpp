#pragma once

#include <cstdint>
#include <random>

#include "intres/module.hpp"

namespace intres {

// Seeded generators for the randomized property suites.  Everything funnels
// through one engine, so a fixed seed reproduces the whole corpus.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
    bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(eng) < p; }
};

Poset random_poset(Rng& rng, int min_elems, int max_elems, bool require_connected);

Interval random_interval(Rng& rng, const Poset& p);

// Nonempty random subset of the element indices.
std::vector<int> random_subset(Rng& rng, int n);

Morphism random_morphism(Rng& rng, const PersModule& M, const PersModule& N);

// Random commutative representation: kernel or cokernel of a random morphism
// between random interval-decomposable modules (every module arises this
// way), or occasionally the sum itself.  Regenerates until the dimension caps
// hold; falls back to a single interval module.
PersModule random_module(Rng& rng, const Poset& p, Scalar prime, int max_pointwise_dim,
                         int max_total_dim);

} // namespace intres
