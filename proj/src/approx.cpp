#include "intres/approx.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace intres {

namespace {

// Incremental row space over GF(p): rows kept normalized with distinct pivots.
class SpanBuilder {
public:
    SpanBuilder(int width, Scalar p) : width_(width), p_(p) {}

    void reduce(std::vector<Scalar>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Scalar c = v[pivots_[r]];
            if (c == 0) continue;
            const auto& row = rows_[r];
            for (int j = pivots_[r]; j < width_; ++j)
                v[j] = (v[j] + static_cast<std::uint64_t>(p_ - c) * row[j]) % p_;
        }
    }

    bool contains(std::vector<Scalar> v) const {
        reduce(v);
        for (Scalar x : v)
            if (x != 0) return false;
        return true;
    }

    bool add(std::vector<Scalar> v) {
        reduce(v);
        int piv = -1;
        for (int j = 0; j < width_; ++j)
            if (v[j] != 0) { piv = j; break; }
        if (piv < 0) return false;
        Scalar inv = inverse_mod(v[piv], p_);
        for (int j = piv; j < width_; ++j) v[j] = static_cast<std::uint64_t>(v[j]) * inv % p_;
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
        pivots_.insert(pivots_.begin() + pos, piv);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    int dim() const { return static_cast<int>(rows_.size()); }

private:
    int width_;
    Scalar p_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<int> pivots_;
};

int interval_coord_width(const Interval& I, const PersModule& M) {
    int w = 0;
    for (int a : I.members) w += M.dim(a);
    return w;
}

// Stacked coordinates over the members of I of the composite (g ∘ indicator
// of comp): g maps some k_J into M, comp ⊆ I ∩ J.
std::vector<Scalar> masked_coords(const Interval& I, const PersModule& M, const Morphism& g,
                                  const std::vector<int>& comp) {
    std::vector<Scalar> out;
    out.reserve(interval_coord_width(I, M));
    for (int a : I.members) {
        bool in = std::binary_search(comp.begin(), comp.end(), a);
        for (int i = 0; i < M.dim(a); ++i) out.push_back(in ? g.block(a).at(i, 0) : 0);
    }
    return out;
}

std::vector<Scalar> stacked_hom_coords(const Interval& I, const PersModule& M, const Morphism& g) {
    return masked_coords(I, M, g, I.members);
}

} // namespace

IntervalMultiset IntervalMultiset::from_copies(std::vector<Interval> copies) {
    std::sort(copies.begin(), copies.end());
    IntervalMultiset out;
    for (auto& c : copies) {
        if (!out.items.empty() && out.items.back().first == c)
            ++out.items.back().second;
        else
            out.items.emplace_back(std::move(c), 1);
    }
    return out;
}

int IntervalMultiset::copy_count() const {
    int n = 0;
    for (const auto& [i, m] : items) n += m;
    return n;
}

int IntervalMultiset::total_dim() const {
    int n = 0;
    for (const auto& [i, m] : items) n += m * static_cast<int>(i.members.size());
    return n;
}

std::string IntervalMultiset::to_string(const Poset& host) const {
    std::ostringstream os;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k) os << " + ";
        os << items[k].first.to_string(host);
        if (items[k].second > 1) os << "^" << items[k].second;
    }
    if (items.empty()) os << "0";
    return os.str();
}

IntervalSum IntervalSum::build(const Poset& host, Scalar p, std::vector<Interval> copies) {
    IntervalSum s;
    s.host = host;
    s.p = p;
    std::stable_sort(copies.begin(), copies.end());
    s.copies = std::move(copies);
    std::vector<int> dims(host.size(), 0);
    s.coords.assign(host.size(), {});
    for (std::size_t c = 0; c < s.copies.size(); ++c)
        for (int a : s.copies[c].members) {
            ++dims[a];
            s.coords[a].push_back(static_cast<int>(c));
        }
    std::vector<Matrix> maps;
    maps.reserve(host.hasse().size());
    for (auto [a, b] : host.hasse()) {
        Matrix m(dims[b], dims[a], p);
        for (int col = 0; col < static_cast<int>(s.coords[a].size()); ++col) {
            int copy = s.coords[a][col];
            if (!s.copies[copy].contains(b)) continue;
            int row = static_cast<int>(std::find(s.coords[b].begin(), s.coords[b].end(), copy) -
                                       s.coords[b].begin());
            m.set(row, col, 1);
        }
        maps.push_back(std::move(m));
    }
    s.module = PersModule(host, p, std::move(dims), std::move(maps));
    return s;
}

int IntervalSum::coordinate_of(int copy, int elt) const {
    const auto& cs = coords[elt];
    auto it = std::find(cs.begin(), cs.end(), copy);
    return it == cs.end() ? -1 : static_cast<int>(it - cs.begin());
}

Morphism IntervalSum::copy_inclusion(int copy) const {
    PersModule k = interval_module(host, copies[copy], p);
    std::vector<Matrix> blocks;
    for (int x = 0; x < host.size(); ++x) {
        Matrix m(module.dim(x), k.dim(x), p);
        int row = coordinate_of(copy, x);
        if (row >= 0) m.set(row, 0, 1);
        blocks.push_back(std::move(m));
    }
    return Morphism(k, module, std::move(blocks));
}

IntervalMultiset IntervalSum::multiset() const { return IntervalMultiset::from_copies(copies); }

std::vector<std::vector<int>> interval_hom_components(const Poset& p, const Interval& I,
                                                      const Interval& J) {
    std::vector<int> inter;
    std::set_intersection(I.members.begin(), I.members.end(), J.members.begin(), J.members.end(),
                          std::back_inserter(inter));
    std::vector<std::vector<int>> out;
    if (inter.empty()) return out;
    std::vector<char> seen(p.size(), 0);
    auto in_inter = [&](int x) { return std::binary_search(inter.begin(), inter.end(), x); };
    for (int seed : inter) {
        if (seen[seed]) continue;
        std::vector<int> comp{seed};
        seen[seed] = 1;
        for (std::size_t qi = 0; qi < comp.size(); ++qi) {
            int x = comp[qi];
            for (int y : p.hasse_up(x))
                if (in_inter(y) && !seen[y]) { seen[y] = 1; comp.push_back(y); }
            for (int y : p.hasse_down(x))
                if (in_inter(y) && !seen[y]) { seen[y] = 1; comp.push_back(y); }
        }
        std::sort(comp.begin(), comp.end());
        // a scalar on the component must vanish when a structure map exits J
        // inside the target or enters from I outside the source overlap
        bool good = true;
        for (int a : comp) {
            for (int b : p.hasse_up(a))
                if (J.contains(b) && !I.contains(b)) { good = false; break; }
            if (!good) break;
            for (int w : p.hasse_down(a))
                if (I.contains(w) && !J.contains(w)) { good = false; break; }
            if (!good) break;
        }
        if (good) out.push_back(std::move(comp));
    }
    return out;
}

ModuleHomTable ModuleHomTable::build(const PersModule& M, EngineCounters* counters) {
    ModuleHomTable t;
    t.intervals = enumerate_intervals(M.host());
    t.interval_modules.reserve(t.intervals.size());
    t.homs.reserve(t.intervals.size());
    t.hom_coords.reserve(t.intervals.size());
    for (const Interval& I : t.intervals) {
        PersModule k = interval_module(M.host(), I, M.field());
        std::vector<Morphism> basis = hom_basis(k, M);
        if (counters) ++counters->hom_solves;
        int width = interval_coord_width(I, M);
        Matrix coords(width, static_cast<int>(basis.size()), M.field());
        for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
            auto v = stacked_hom_coords(I, M, basis[j]);
            for (int i = 0; i < width; ++i) coords.set(i, j, v[i]);
        }
        t.interval_modules.push_back(std::move(k));
        t.homs.push_back(std::move(basis));
        t.hom_coords.push_back(std::move(coords));
    }
    return t;
}

namespace {

// Multiplicities plus, per interval, the chosen basis lifts of Hom(k_I, M)
// modulo the radical span.
struct MultiplicityData {
    IntervalMultiset multiset;
    std::vector<std::vector<int>> picks; // per interval: selected hom-basis indices
};

MultiplicityData multiplicities_with(const ModuleHomTable& table, const PersModule& M) {
    const Poset& host = M.host();
    MultiplicityData out;
    out.picks.assign(table.intervals.size(), {});
    std::vector<Interval> copies;
    for (std::size_t i = 0; i < table.intervals.size(); ++i) {
        const Interval& I = table.intervals[i];
        const int d = static_cast<int>(table.homs[i].size());
        if (d == 0) continue;
        SpanBuilder rad(interval_coord_width(I, M), M.field());
        for (std::size_t j = 0; j < table.intervals.size(); ++j) {
            if (j == i || table.homs[j].empty()) continue;
            auto comps = interval_hom_components(host, I, table.intervals[j]);
            for (const auto& comp : comps)
                for (const Morphism& g : table.homs[j]) rad.add(masked_coords(I, M, g, comp));
        }
        for (int t = 0; t < d; ++t)
            if (rad.add(table.hom_coords[i].col(t))) out.picks[i].push_back(t);
        for (std::size_t k = 0; k < out.picks[i].size(); ++k) copies.push_back(I);
    }
    out.multiset = IntervalMultiset::from_copies(std::move(copies));
    return out;
}

bool approximation_with(const ModuleHomTable& table, const PersModule& M,
                        const std::vector<Interval>& copies,
                        const std::vector<Morphism>& generators) {
    const Poset& host = M.host();
    for (std::size_t j = 0; j < table.intervals.size(); ++j) {
        const int dj = static_cast<int>(table.homs[j].size());
        if (dj == 0) continue;
        const Interval& J = table.intervals[j];
        SpanBuilder span(interval_coord_width(J, M), M.field());
        for (std::size_t c = 0; c < copies.size(); ++c) {
            for (const auto& comp : interval_hom_components(host, J, copies[c]))
                span.add(masked_coords(J, M, generators[c], comp));
            if (span.dim() == dj) break;
        }
        if (span.dim() < dj) return false;
    }
    return true;
}

Morphism assemble_map(const IntervalSum& source, const std::vector<Morphism>& generators,
                      const PersModule& M) {
    std::vector<Matrix> blocks;
    for (int x = 0; x < M.host().size(); ++x) {
        Matrix m(M.dim(x), source.module.dim(x), M.field());
        for (int col = 0; col < static_cast<int>(source.coords[x].size()); ++col) {
            const Morphism& g = generators[source.coords[x][col]];
            for (int i = 0; i < M.dim(x); ++i) m.set(i, col, g.block(x).at(i, 0));
        }
        blocks.push_back(std::move(m));
    }
    return Morphism(source.module, M, std::move(blocks));
}

std::vector<Scalar> flatten_blocks(const std::vector<Matrix>& blocks) {
    std::vector<Scalar> out;
    for (const Matrix& m : blocks)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
    return out;
}

} // namespace

IntervalMultiset minimal_multiplicities(const PersModule& M, EngineCounters* counters) {
    ModuleHomTable table = ModuleHomTable::build(M, counters);
    return multiplicities_with(table, M).multiset;
}

bool is_right_approximation(const IntervalSum& source, const std::vector<Morphism>& generators,
                            const PersModule& target, EngineCounters* counters) {
    ModuleHomTable table = ModuleHomTable::build(target, counters);
    return approximation_with(table, target, source.copies, generators);
}

bool is_right_minimal(const IntervalSum& source, const std::vector<Morphism>& generators,
                      const PersModule& target) {
    const Poset& host = target.host();
    const Scalar p = target.field();
    const PersModule& X = source.module;
    const std::size_t ncopies = source.copies.size();
    if (ncopies == 0) return true;
    Morphism f = assemble_map(source, generators, target);

    // basis of End(X) as indicator units between copies
    struct Unit {
        std::vector<Matrix> blocks;
    };
    std::vector<Unit> units;
    for (std::size_t c = 0; c < ncopies; ++c)
        for (std::size_t d = 0; d < ncopies; ++d)
            for (const auto& comp : interval_hom_components(host, source.copies[c], source.copies[d])) {
                Unit u;
                for (int x = 0; x < host.size(); ++x) {
                    Matrix m(X.dim(x), X.dim(x), p);
                    if (std::binary_search(comp.begin(), comp.end(), x)) {
                        int row = source.coordinate_of(static_cast<int>(d), x);
                        int col = source.coordinate_of(static_cast<int>(c), x);
                        m.set(row, col, 1);
                    }
                    u.blocks.push_back(std::move(m));
                }
                units.push_back(std::move(u));
            }
    if (units.empty()) return true;

    // K = { g in End(X) : f g = 0 }, cut out as the kernel of u -> flatten(f∘u)
    int flat_fx = 0;
    for (int x = 0; x < host.size(); ++x) flat_fx += target.dim(x) * X.dim(x);
    Matrix sys(flat_fx, static_cast<int>(units.size()), p);
    for (std::size_t e = 0; e < units.size(); ++e) {
        std::vector<Matrix> comp_blocks;
        for (int x = 0; x < host.size(); ++x) comp_blocks.push_back(f.block(x) * units[e].blocks[x]);
        auto v = flatten_blocks(comp_blocks);
        for (int i = 0; i < flat_fx; ++i) sys.set(i, static_cast<int>(e), v[i]);
    }
    Matrix kerK = kernel_basis(sys);

    std::vector<std::vector<Matrix>> kbasis;
    for (int j = 0; j < kerK.cols(); ++j) {
        std::vector<Matrix> g;
        for (int x = 0; x < host.size(); ++x) g.push_back(Matrix(X.dim(x), X.dim(x), p));
        for (std::size_t e = 0; e < units.size(); ++e) {
            Scalar c = kerK.at(static_cast<int>(e), j);
            if (c == 0) continue;
            for (int x = 0; x < host.size(); ++x) g[x] = g[x] + units[e].blocks[x].scaled(c);
        }
        kbasis.push_back(std::move(g));
    }
    if (kbasis.empty()) return true;

    // K is closed under multiplication, so f is right minimal iff the chain
    // K ⊇ span(K·K) ⊇ ... reaches zero (all elements nilpotent).
    int flat_xx = 0;
    for (int x = 0; x < host.size(); ++x) flat_xx += X.dim(x) * X.dim(x);
    std::vector<std::vector<Matrix>> current = kbasis;
    int prev_dim = -1;
    for (int iter = 0; iter <= flat_xx + 1; ++iter) {
        SpanBuilder span(flat_xx, p);
        std::vector<std::vector<Matrix>> reduced;
        for (const auto& g : current)
            if (span.add(flatten_blocks(g))) reduced.push_back(g);
        if (span.dim() == 0) return true;
        if (span.dim() == prev_dim) return false;
        prev_dim = span.dim();
        std::vector<std::vector<Matrix>> next;
        for (const auto& g : reduced)
            for (const auto& h : kbasis) {
                std::vector<Matrix> prod;
                for (int x = 0; x < host.size(); ++x) prod.push_back(g[x] * h[x]);
                next.push_back(std::move(prod));
            }
        current = std::move(next);
    }
    throw InternalError("is_right_minimal: power chain failed to stabilize");
}

Cover interval_cover(const PersModule& M, EngineCounters* counters) {
    const Poset& host = M.host();
    ModuleHomTable table = ModuleHomTable::build(M, counters);
    MultiplicityData mult = multiplicities_with(table, M);

    std::vector<Interval> copies;
    std::vector<Morphism> generators;
    for (std::size_t i = 0; i < table.intervals.size(); ++i)
        for (int t : mult.picks[i]) {
            copies.push_back(table.intervals[i]);
            generators.push_back(table.homs[i][t]);
        }
    // copies are already in canonical interval order (table order)
    IntervalSum source = IntervalSum::build(host, M.field(), copies);
    Morphism map = assemble_map(source, generators, M);

    Cover cover{M, std::move(source), std::move(map), std::move(generators)};

    // certificates; the approximation is unique up to isomorphism, so any
    // failure here is an engine bug and is never masked
    for (std::size_t c = 0; c < cover.source.copies.size(); ++c)
        for (int a : cover.source.copies[c].members)
            if (cover.generators[c].block(a).is_zero())
                throw InternalError("interval cover: summand copy not pointwise injective");
    if (!cover.map.pointwise_surjective())
        throw InternalError("interval cover: map not pointwise surjective");
    {
        std::vector<char> in(host.size(), 0);
        for (const auto& I : cover.source.copies)
            for (int a : I.members) in[a] = 1;
        for (int a = 0; a < host.size(); ++a)
            if ((in[a] != 0) != (M.dim(a) > 0))
                throw InternalError("interval cover: source and target supports differ");
    }
    if (!approximation_with(table, M, cover.source.copies, cover.generators))
        throw InternalError("interval cover: approximation certificate failed");
    if (!is_right_minimal(cover.source, cover.generators, M))
        throw InternalError("interval cover: minimality certificate failed");
    return cover;
}

PersModule syzygy(const PersModule& M, EngineCounters* counters) {
    return kernel(interval_cover(M, counters).map).sub;
}

namespace {

Interval map_interval(const Interval& I, const std::vector<int>& to_orig) {
    std::vector<int> members;
    members.reserve(I.members.size());
    for (int a : I.members) members.push_back(to_orig[a]);
    std::sort(members.begin(), members.end());
    return Interval{std::move(members)};
}

} // namespace

Resolution interval_resolution(const PersModule& M, const ResolveOptions& opts) {
    Resolution res;
    res.target = M;
    res.reduced_support = opts.reduce_support;
    EngineCounters counters;

    const Poset& orig = M.host();
    Poset work = orig;
    PersModule cur = M;
    std::vector<int> to_orig(orig.size());
    std::iota(to_orig.begin(), to_orig.end(), 0);

    PersModule prev_ext_source;        // previous extended cover source, over orig
    Morphism prev_iota;                // previous kernel inclusion, over previous work poset
    std::vector<int> prev_orig_to_work; // orig index -> previous work index

    for (int step = 0;; ++step) {
        if (cur.is_zero()) break;
        if (step >= opts.step_cap)
            throw InternalError("interval resolution exceeded step cap " +
                                std::to_string(opts.step_cap) +
                                "; finiteness of the interval resolution dimension is violated");
        if (opts.reduce_support) {
            std::vector<int> hull = convex_hull(work, cur.support());
            if (static_cast<int>(hull.size()) < work.size()) {
                SubposetEmbedding sub = full_subposet(work, hull);
                cur = restrict_module(cur, sub);
                std::vector<int> next(sub.sub.size());
                for (int i = 0; i < sub.sub.size(); ++i) next[i] = to_orig[sub.map[i]];
                to_orig = std::move(next);
                work = sub.sub;
            }
        }
        std::vector<int> orig_to_work(orig.size(), -1);
        for (int i = 0; i < work.size(); ++i) orig_to_work[to_orig[i]] = i;

        Cover cover = interval_cover(cur, &counters);
        SubposetEmbedding emb_work{work, orig, to_orig};

        std::vector<Interval> mapped;
        mapped.reserve(cover.source.copies.size());
        for (const Interval& I : cover.source.copies) mapped.push_back(map_interval(I, to_orig));
        res.terms.push_back(IntervalMultiset::from_copies(mapped));

        PersModule ext_source = extend_by_zero(cover.source.module, emb_work);
        if (step == 0) {
            std::vector<Matrix> blocks;
            for (int x = 0; x < orig.size(); ++x) {
                if (orig_to_work[x] >= 0)
                    blocks.push_back(cover.map.block(orig_to_work[x]));
                else
                    blocks.push_back(Matrix(M.dim(x), 0, M.field()));
            }
            res.maps.emplace_back(ext_source, M, std::move(blocks));
        } else {
            std::vector<Matrix> blocks;
            for (int x = 0; x < orig.size(); ++x) {
                int rows = prev_ext_source.dim(x);
                int cols = ext_source.dim(x);
                if (cols == 0) {
                    blocks.push_back(Matrix(rows, 0, M.field()));
                } else {
                    // x lies in the current work poset, hence in the previous one
                    blocks.push_back(prev_iota.block(prev_orig_to_work[x]) *
                                     cover.map.block(orig_to_work[x]));
                }
            }
            res.maps.emplace_back(ext_source, prev_ext_source, std::move(blocks));
        }

        SubmoduleResult ker = kernel(cover.map);
        prev_ext_source = std::move(ext_source);
        prev_iota = ker.inclusion;
        prev_orig_to_work = orig_to_work;
        cur = ker.sub;
    }
    res.hom_solves = counters.hom_solves;

    // exactness bookkeeping: f surjective, chain composes to zero, and
    // pointwise dim J_i = rank(g_i) + rank(g_{i+1})
    for (std::size_t i = 0; i < res.maps.size(); ++i) {
        for (int x = 0; x < orig.size(); ++x) {
            int r = rank(res.maps[i].block(x));
            int r_next = i + 1 < res.maps.size() ? rank(res.maps[i + 1].block(x)) : 0;
            if (i == 0 && r != M.dim(x))
                throw InternalError("resolution: augmentation not surjective");
            if (res.maps[i].source().dim(x) != r + r_next)
                throw InternalError("resolution: exactness bookkeeping failed");
        }
        if (i + 1 < res.maps.size() &&
            !res.maps[i].compose_after(res.maps[i + 1]).is_zero())
            throw InternalError("resolution: consecutive maps do not compose to zero");
    }
    return res;
}

int interval_resdim(const PersModule& M, const ResolveOptions& opts) {
    return interval_resolution(M, opts).length();
}

Cover brute_force_cover(const PersModule& M, const BruteForceOptions& opts) {
    if (M.total_dim() > opts.total_dim_cap || M.host().size() > opts.poset_size_cap)
        throw ValidationError("brute_force_cover cap exceeded (total dim " +
                              std::to_string(M.total_dim()) + ", poset size " +
                              std::to_string(M.host().size()) + ")");
    const Poset& host = M.host();
    ModuleHomTable table = ModuleHomTable::build(M, nullptr);

    struct Gen {
        int interval;
        int basis_index;
        int dim;
    };
    std::vector<Gen> gens;
    for (std::size_t i = 0; i < table.intervals.size(); ++i)
        for (std::size_t t = 0; t < table.homs[i].size(); ++t)
            gens.push_back({static_cast<int>(i), static_cast<int>(t),
                            static_cast<int>(table.intervals[i].members.size())});
    const int ng = static_cast<int>(gens.size());

    // composite coordinate vectors of every generator against every interval J
    std::vector<std::vector<std::vector<std::vector<Scalar>>>> vecs(
        ng, std::vector<std::vector<std::vector<Scalar>>>(table.intervals.size()));
    std::vector<int> need;
    std::vector<int> targets; // intervals with nonzero hom space, singletons first
    for (std::size_t j = 0; j < table.intervals.size(); ++j) {
        if (table.homs[j].empty()) continue;
        targets.push_back(static_cast<int>(j));
        for (int g = 0; g < ng; ++g) {
            const Morphism& morph = table.homs[gens[g].interval][gens[g].basis_index];
            for (const auto& comp :
                 interval_hom_components(host, table.intervals[j], table.intervals[gens[g].interval]))
                vecs[g][j].push_back(masked_coords(table.intervals[j], M, morph, comp));
        }
    }

    std::vector<long long> suffix(ng + 1, 0);
    for (int g = ng - 1; g >= 0; --g) suffix[g] = suffix[g + 1] + gens[g].dim;

    std::vector<int> chosen;
    auto covers_all = [&]() {
        for (int j : targets) {
            SpanBuilder span(interval_coord_width(table.intervals[j], M), M.field());
            for (int g : chosen)
                for (const auto& v : vecs[g][j]) span.add(v);
            if (span.dim() < static_cast<int>(table.homs[j].size())) return false;
        }
        return true;
    };

    std::vector<int> best;
    bool found = false;
    // include-first DFS: the first subset reaching the budget in this order is
    // the canonical tie-break
    auto dfs = [&](auto&& self, int k, long long need_dim) -> bool {
        if (need_dim == 0) return covers_all();
        if (k == ng || suffix[k] < need_dim) return false;
        if (gens[k].dim <= need_dim) {
            chosen.push_back(k);
            if (self(self, k + 1, need_dim - gens[k].dim)) return true;
            chosen.pop_back();
        }
        return self(self, k + 1, need_dim);
    };
    for (long long budget = 0; budget <= suffix[0]; ++budget) {
        chosen.clear();
        if (dfs(dfs, 0, budget)) {
            best = chosen;
            found = true;
            break;
        }
    }
    if (!found) throw InternalError("brute_force_cover: full generating family is no approximation");

    std::vector<Interval> copies;
    std::vector<Morphism> generators;
    for (int g : best) {
        copies.push_back(table.intervals[gens[g].interval]);
        generators.push_back(table.homs[gens[g].interval][gens[g].basis_index]);
    }
    IntervalSum source = IntervalSum::build(host, M.field(), copies);
    Morphism map = assemble_map(source, generators, M);
    return Cover{M, std::move(source), std::move(map), std::move(generators)};
}

IntervalMultiset greedy_cover_multiset(const PersModule& M) {
    const Poset& host = M.host();
    ModuleHomTable table = ModuleHomTable::build(M, nullptr);
    struct Gen {
        int interval;
        int basis_index;
    };
    std::vector<Gen> gens;
    for (std::size_t i = 0; i < table.intervals.size(); ++i)
        for (std::size_t t = 0; t < table.homs[i].size(); ++t)
            gens.push_back({static_cast<int>(i), static_cast<int>(t)});
    std::vector<char> alive(gens.size(), 1);

    bool removed = true;
    while (removed) {
        removed = false;
        for (std::size_t c = 0; c < gens.size(); ++c) {
            if (!alive[c]) continue;
            const Interval& I = table.intervals[gens[c].interval];
            SpanBuilder span(interval_coord_width(I, M), M.field());
            for (std::size_t d = 0; d < gens.size(); ++d) {
                if (!alive[d] || d == c) continue;
                const Morphism& g = table.homs[gens[d].interval][gens[d].basis_index];
                for (const auto& comp :
                     interval_hom_components(host, I, table.intervals[gens[d].interval]))
                    span.add(masked_coords(I, M, g, comp));
            }
            const Morphism& gc = table.homs[gens[c].interval][gens[c].basis_index];
            if (span.contains(stacked_hom_coords(I, M, gc))) {
                alive[c] = 0;
                removed = true;
                break;
            }
        }
    }
    std::vector<Interval> copies;
    for (std::size_t c = 0; c < gens.size(); ++c)
        if (alive[c]) copies.push_back(table.intervals[gens[c].interval]);
    return IntervalMultiset::from_copies(std::move(copies));
}

} // namespace intres
