#pragma once

#include <vector>

#include "intres/module.hpp"

namespace intres {

struct IntervalMultiset {
    std::vector<std::pair<Interval, int>> items; // canonical interval order, multiplicities >= 1

    static IntervalMultiset from_copies(std::vector<Interval> copies);
    int copy_count() const;
    int total_dim() const;
    bool operator==(const IntervalMultiset& rhs) const { return items == rhs.items; }
    std::string to_string(const Poset& host) const;
};

// Direct sum of interval modules with explicit coordinate bookkeeping: the
// coordinate order at each element is the copy order, copies listed in
// canonical interval order.
struct IntervalSum {
    Poset host;
    Scalar p = 2;
    std::vector<Interval> copies;
    PersModule module;
    std::vector<std::vector<int>> coords; // per element: copy index owning each coordinate

    static IntervalSum build(const Poset& host, Scalar p, std::vector<Interval> copies);
    int coordinate_of(int copy, int elt) const; // -1 when the copy misses elt
    Morphism copy_inclusion(int copy) const;
    IntervalMultiset multiset() const;
};

// Basis of Hom(k_I, k_J), computed combinatorially: indicator morphisms of the
// connected components of I ∩ J that no structure map pushes out of J or pulls
// in from I.  Cross-checked against the generic linear-algebra hom_basis in
// tests.
std::vector<std::vector<int>> interval_hom_components(const Poset& p, const Interval& I,
                                                      const Interval& J);

struct EngineCounters {
    // linear systems solved for spaces Hom(k_I, target-module); the metric the
    // support-reduction comparison is stated in
    long long hom_solves = 0;
};

// Hom(k_I, M) for every interval I of M's host, with coordinate matrices
// (columns = basis morphisms in stacked I-coordinates).
struct ModuleHomTable {
    std::vector<Interval> intervals;
    std::vector<PersModule> interval_modules;
    std::vector<std::vector<Morphism>> homs;
    std::vector<Matrix> hom_coords;

    static ModuleHomTable build(const PersModule& M, EngineCounters* counters);
};

// Multiplicity of k_I in the interval cover: dim Hom(k_I, M) minus the
// dimension of the span of all composites k_I -> k_J -> M over J != I.
IntervalMultiset minimal_multiplicities(const PersModule& M, EngineCounters* counters = nullptr);

struct Cover {
    PersModule target;
    IntervalSum source;
    Morphism map;                     // source.module -> target
    std::vector<Morphism> generators; // per copy, the composite k_I -> target
};

// Right minimal approximation by interval-decomposable modules.  The computed
// cover is certified on the spot: pointwise surjective, per-copy pointwise
// injective, equal supports, right approximation, right minimal; any breach
// throws InternalError.
Cover interval_cover(const PersModule& M, EngineCounters* counters = nullptr);

// Hom(k_J, source) -> Hom(k_J, target) surjective for every interval J.
bool is_right_approximation(const IntervalSum& source, const std::vector<Morphism>& generators,
                            const PersModule& target, EngineCounters* counters = nullptr);

// Every g with f∘g = 0 nilpotent, tested through the powers of the
// multiplicatively closed solution space.
bool is_right_minimal(const IntervalSum& source, const std::vector<Morphism>& generators,
                      const PersModule& target);

PersModule syzygy(const PersModule& M, EngineCounters* counters = nullptr);

struct Resolution {
    PersModule target;
    std::vector<IntervalMultiset> terms; // J_0, J_1, ...
    std::vector<Morphism> maps;          // maps[0]: J_0 -> target, maps[i]: J_i -> J_{i-1}
    long long hom_solves = 0;
    bool reduced_support = false;

    int length() const { return terms.empty() ? 0 : static_cast<int>(terms.size()) - 1; }
};

struct ResolveOptions {
    bool reduce_support = true;
    int step_cap = 64;
};

// Iterated interval covers until the syzygy vanishes.  With reduce_support
// each step first passes to the full subposet on the convex hull of the
// current support (a convex full subposet, over which covers agree with
// covers over the host) and re-embeds the results.
Resolution interval_resolution(const PersModule& M, const ResolveOptions& opts = {});

int interval_resdim(const PersModule& M, const ResolveOptions& opts = {});

struct BruteForceOptions {
    int total_dim_cap = 10;
    int poset_size_cap = 6;
};

// Test oracle: smallest-total-dimension subfamily of the canonical generating
// family { hom_basis(k_I, M) over all I } whose assembled map is a right
// approximation; budgets searched in increasing order, ties broken by the
// include-first depth-first order over canonically sorted generators.
Cover brute_force_cover(const PersModule& M, const BruteForceOptions& opts = {});

// Cross-check variant: start from the full generating family and drop any
// copy that factors through the remaining ones until stable.
IntervalMultiset greedy_cover_multiset(const PersModule& M);

} // namespace intres
