#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "intres/module.hpp"

namespace intres {

struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::vector<std::string> notes;
    std::vector<std::string> fail_msgs;
};

// The worked 4-element example module with dimension vector (1; 1, 2, 1):
// the unique non-interval indecomposable over that D_4 orientation.
PersModule d4_example_module(Scalar prime = 2);

// Randomized covers over GF(2) and GF(3): pointwise surjectivity, per-summand
// pointwise injectivity, support equality.
SuiteResult suite_cover_contract(std::uint64_t seed, int cases_per_field);

// interval_cover vs. the exhaustive brute-force oracle and the greedy
// redundancy-elimination variant: equal summand multisets.
SuiteResult suite_oracle(std::uint64_t seed, int cases);

// Resolutions over a convex full subposet and over the ambient poset are
// termwise equal after re-embedding.
SuiteResult suite_convex_invariance(std::uint64_t seed, int cases);

// Resolutions with and without support reduction agree termwise, and the
// reduced run never performs more hom-space solves.
SuiteResult suite_support_reduction(std::uint64_t seed, int cases);

// interval_gldim(full subposet) <= interval_gldim(poset).
SuiteResult suite_monotonicity(std::uint64_t seed, int cases);

// classify_zero_gldim(p) accepted iff interval_gldim(p) == 0, on the curated
// corpus (A_n/D_4 orientations, C(m,l), grids, ladders) plus random connected
// posets.
SuiteResult suite_classification(std::uint64_t seed, int random_cases);

// Zero/nonzero agreement of interval_gldim over GF(2), GF(3), GF(5); the full
// values are recorded as observations only.
SuiteResult suite_char_independence(std::uint64_t seed, int cases);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

} // namespace intres
