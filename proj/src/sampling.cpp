#include "intres/sampling.hpp"

#include <algorithm>

namespace intres {

Poset random_poset(Rng& rng, int min_elems, int max_elems, bool require_connected) {
    for (int attempt = 0; attempt < 400; ++attempt) {
        int n = rng.uniform(min_elems, max_elems);
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.chance(0.4)) pairs.emplace_back(i, j);
        Poset p = poset_from_index_pairs(labels, pairs);
        if (!require_connected || p.is_connected()) return p;
    }
    // connectivity never failed 400 times for these densities; fall back to a chain
    return make_a_n(std::max(min_elems, 2), equioriented_word(std::max(min_elems, 2)));
}

Interval random_interval(Rng& rng, const Poset& p) {
    std::vector<Interval> all = enumerate_intervals(p);
    return all[rng.uniform(0, static_cast<int>(all.size()) - 1)];
}

std::vector<int> random_subset(Rng& rng, int n) {
    std::vector<int> out;
    while (out.empty())
        for (int i = 0; i < n; ++i)
            if (rng.chance(0.5)) out.push_back(i);
    return out;
}

Morphism random_morphism(Rng& rng, const PersModule& M, const PersModule& N) {
    std::vector<Morphism> basis = hom_basis(M, N);
    Morphism f = Morphism::zero(M, N);
    for (const Morphism& b : basis)
        f = f + b.scaled(static_cast<Scalar>(rng.uniform(0, static_cast<int>(M.field()) - 1)));
    return f;
}

PersModule random_module(Rng& rng, const Poset& p, Scalar prime, int max_pointwise_dim,
                         int max_total_dim) {
    std::vector<Interval> all = enumerate_intervals(p);
    auto random_sum = [&](int max_parts) {
        std::vector<PersModule> parts;
        int count = rng.uniform(1, max_parts);
        for (int k = 0; k < count; ++k)
            parts.push_back(
                interval_module(p, all[rng.uniform(0, static_cast<int>(all.size()) - 1)], prime));
        return direct_sum(p, prime, parts).sum;
    };
    auto within_caps = [&](const PersModule& m) {
        if (m.total_dim() == 0 || m.total_dim() > max_total_dim) return false;
        for (int x = 0; x < p.size(); ++x)
            if (m.dim(x) > max_pointwise_dim) return false;
        return true;
    };
    for (int attempt = 0; attempt < 60; ++attempt) {
        int mode = rng.uniform(0, 3);
        PersModule candidate;
        if (mode == 0) {
            candidate = random_sum(3);
        } else {
            PersModule src = random_sum(3);
            PersModule tgt = random_sum(3);
            Morphism f = random_morphism(rng, src, tgt);
            candidate = (mode == 1) ? kernel(f).sub : cokernel(f).quotient;
        }
        if (within_caps(candidate)) return candidate;
    }
    return interval_module(p, all[rng.uniform(0, static_cast<int>(all.size()) - 1)], prime);
}

} // namespace intres
