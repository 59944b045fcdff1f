#include "intres/homology.hpp"

#include <algorithm>
#include <numeric>

namespace intres {

Poset opposite(const Poset& p) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.less(a, b)) pairs.emplace_back(b, a);
    return poset_from_index_pairs(p.labels(), pairs);
}

SubmoduleResult radical(const PersModule& M) {
    const Poset& p = M.host();
    const Scalar q = M.field();
    std::vector<Matrix> basis(p.size());
    std::vector<int> dims(p.size());
    for (int y = 0; y < p.size(); ++y) {
        // images along Hasse predecessors already span the radical at y
        Matrix stacked(M.dim(y), 0, q);
        for (int w : p.hasse_down(y))
            stacked = stacked.hstack(M.edge_map(p.hasse_edge_index(w, y)));
        basis[y] = column_space_basis(stacked);
        dims[y] = basis[y].cols();
    }
    std::vector<Matrix> maps;
    for (std::size_t e = 0; e < p.hasse().size(); ++e) {
        auto [a, b] = p.hasse()[e];
        auto x = solve_matrix(basis[b], M.edge_map(static_cast<int>(e)) * basis[a]);
        if (!x) throw InternalError("radical: structure map leaves the radical");
        maps.push_back(std::move(*x));
    }
    PersModule R(p, q, std::move(dims), std::move(maps));
    Morphism incl(R, M, std::move(basis));
    return {std::move(R), std::move(incl)};
}

QuotientResult top(const PersModule& M) { return cokernel(radical(M).inclusion); }

PersModule projective_at(const Poset& p, int x, Scalar prime) {
    return interval_module(p, Interval{p.up_set(x)}, prime);
}

PersModule simple_at(const Poset& p, int x, Scalar prime) {
    return interval_module(p, Interval{{x}}, prime);
}

ProjectiveCover projective_cover(const PersModule& M) {
    const Poset& p = M.host();
    const Scalar q = M.field();
    QuotientResult t = top(M);

    // one generator per basis vector of the top, lifted deterministically
    struct Gen {
        int elt;
        std::vector<Scalar> vec; // lift in M_elt
    };
    std::vector<Gen> gens;
    for (int x = 0; x < p.size(); ++x) {
        const Matrix& proj = t.projection.block(x);
        for (int i = 0; i < t.quotient.dim(x); ++i) {
            std::vector<Scalar> e(t.quotient.dim(x), 0);
            e[i] = 1;
            auto s = solve(proj, e);
            if (!s) throw InternalError("projective_cover: top projection not surjective");
            gens.push_back({x, s->particular});
        }
    }
    // align copy order with the canonical interval order used by IntervalSum
    std::vector<int> order(gens.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<Interval> ups;
    ups.reserve(gens.size());
    for (const Gen& g : gens) ups.push_back(Interval{p.up_set(g.elt)});
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return ups[a] < ups[b]; });

    std::vector<Interval> copies;
    std::vector<int> copy_gens;
    for (int k : order) {
        copies.push_back(ups[k]);
        copy_gens.push_back(gens[k].elt);
    }
    IntervalSum source = IntervalSum::build(p, q, copies);

    std::vector<Matrix> blocks;
    for (int y = 0; y < p.size(); ++y) {
        Matrix m(M.dim(y), source.module.dim(y), q);
        for (int col = 0; col < static_cast<int>(source.coords[y].size()); ++col) {
            int copy = source.coords[y][col];
            const Gen& g = gens[order[copy]];
            std::vector<Scalar> img = M.map_between(g.elt, y).apply(g.vec);
            for (int i = 0; i < M.dim(y); ++i) m.set(i, col, img[i]);
        }
        blocks.push_back(std::move(m));
    }
    Morphism map(source.module, M, std::move(blocks));
    if (!map.pointwise_surjective())
        throw InternalError("projective_cover: assembled map not surjective");

    // minimality: the kernel sits inside the radical of the source
    {
        SubmoduleResult rad = radical(source.module);
        SubmoduleResult ker = kernel(map);
        for (int y = 0; y < p.size(); ++y) {
            Matrix both = rad.inclusion.block(y).hstack(ker.inclusion.block(y));
            if (rank(both) != rad.sub.dim(y))
                throw InternalError("projective_cover: kernel escapes the radical");
        }
    }
    return ProjectiveCover{std::move(copy_gens), std::move(source), std::move(map)};
}

Presentation minimal_presentation(const PersModule& M) {
    Presentation pres;
    pres.p0 = projective_cover(M);
    SubmoduleResult ker = kernel(pres.p0.map);
    pres.p1 = projective_cover(ker.sub);
    Morphism g = ker.inclusion.compose_after(pres.p1.map); // P1 -> P0

    const int n0 = static_cast<int>(pres.p0.gens.size());
    const int n1 = static_cast<int>(pres.p1.gens.size());
    pres.lambda = Matrix(n0, n1, M.field());
    for (int j = 0; j < n1; ++j) {
        int y = pres.p1.gens[j];
        int col = pres.p1.source.coordinate_of(j, y);
        for (int i = 0; i < n0; ++i) {
            int x = pres.p0.gens[i];
            if (!M.host().leq(x, y)) continue; // Hom(P_y, P_x) = 0 otherwise
            int row = pres.p0.source.coordinate_of(i, y);
            pres.lambda.set(i, j, g.block(y).at(row, col));
        }
    }
    return pres;
}

PersModule dual_module(const PersModule& N, const Poset& original) {
    const Scalar q = N.field();
    Poset op = opposite(original);
    if (!(N.host() == op)) throw InternalError("dual_module: module not over the opposite poset");
    std::vector<int> dims = N.dims();
    std::vector<Matrix> maps;
    for (auto [a, b] : original.hasse()) {
        int e = op.hasse_edge_index(b, a);
        if (e < 0) throw InternalError("dual_module: missing opposite edge");
        maps.push_back(N.edge_map(e).transposed());
    }
    return PersModule(original, q, std::move(dims), std::move(maps));
}

PersModule ar_translate(const PersModule& M) {
    const Poset& p = M.host();
    const Scalar q = M.field();
    if (M.is_zero()) return PersModule::zero(p, q);

    Presentation pres = minimal_presentation(M);
    if (pres.p1.gens.empty()) return PersModule::zero(p, q); // M projective

    // transpose: Hom(-, A) carries P_x to the opposite-poset projective at x
    // and keeps the component scalars
    Poset op = opposite(p);
    std::vector<Interval> copies0, copies1;
    for (int x : pres.p0.gens) copies0.push_back(Interval{op.up_set(x)});
    for (int y : pres.p1.gens) copies1.push_back(Interval{op.up_set(y)});
    // keep generator alignment under the canonical re-sorting
    std::vector<int> ord0(copies0.size()), ord1(copies1.size());
    std::iota(ord0.begin(), ord0.end(), 0);
    std::iota(ord1.begin(), ord1.end(), 0);
    std::stable_sort(ord0.begin(), ord0.end(), [&](int a, int b) { return copies0[a] < copies0[b]; });
    std::stable_sort(ord1.begin(), ord1.end(), [&](int a, int b) { return copies1[a] < copies1[b]; });
    std::vector<Interval> sorted0, sorted1;
    for (int k : ord0) sorted0.push_back(copies0[k]);
    for (int k : ord1) sorted1.push_back(copies1[k]);
    IntervalSum q0 = IntervalSum::build(op, q, sorted0);
    IntervalSum q1 = IntervalSum::build(op, q, sorted1);

    std::vector<Matrix> blocks;
    for (int z = 0; z < op.size(); ++z) {
        Matrix m(q1.module.dim(z), q0.module.dim(z), q);
        for (int col = 0; col < static_cast<int>(q0.coords[z].size()); ++col) {
            int i = ord0[q0.coords[z][col]]; // original p0 copy index
            for (int row = 0; row < static_cast<int>(q1.coords[z].size()); ++row) {
                int j = ord1[q1.coords[z][row]];
                // component P^op_{x_i} -> P^op_{y_j} is lambda_{ij} times the
                // canonical inclusion, which is 1 wherever both copies live
                m.set(row, col, pres.lambda.at(i, j));
            }
        }
        blocks.push_back(std::move(m));
    }
    Morphism h(q0.module, q1.module, std::move(blocks));
    QuotientResult tr = cokernel(h); // transpose of M, over the opposite poset
    return dual_module(tr.quotient, p);
}

int interval_gldim(const Poset& p, Scalar prime, const ResolveOptions& opts) {
    int best = 0;
    for (const Interval& I : enumerate_intervals(p)) {
        PersModule t = ar_translate(interval_module(p, I, prime));
        if (t.is_zero()) continue;
        best = std::max(best, interval_resdim(t, opts));
    }
    return best;
}

int projective_gldim(const Poset& p, Scalar prime) {
    int best = 0;
    for (int x = 0; x < p.size(); ++x) {
        PersModule cur = simple_at(p, x, prime);
        int pd = 0;
        while (true) {
            SubmoduleResult ker = kernel(projective_cover(cur).map);
            if (ker.sub.is_zero()) break;
            cur = ker.sub;
            ++pd;
            if (pd > p.size() + 1)
                throw InternalError("projective resolution longer than the element count");
        }
        best = std::max(best, pd);
    }
    return best;
}

} // namespace intres
