#include "intres/module.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace intres {

PersModule::PersModule(Poset host, Scalar p, std::vector<int> dims, std::vector<Matrix> maps)
    : host_(std::move(host)), p_(p), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (static_cast<int>(dims_.size()) != host_.size())
        throw SchemaError("module dims size does not match poset");
    for (int d : dims_)
        if (d < 0) throw SchemaError("negative dimension");
    if (maps_.size() != host_.hasse().size())
        throw SchemaError("module needs one matrix per Hasse edge");
    for (std::size_t e = 0; e < maps_.size(); ++e) {
        auto [a, b] = host_.hasse()[e];
        const Matrix& m = maps_[e];
        if (m.rows() != dims_[b] || m.cols() != dims_[a])
            throw SchemaError("map on edge " + host_.label(a) + "->" + host_.label(b) +
                              " has shape " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected " + std::to_string(dims_[b]) +
                              "x" + std::to_string(dims_[a]));
        if (m.field() != p_) throw SchemaError("map field mismatch");
    }
}

PersModule PersModule::zero(const Poset& host, Scalar p) {
    std::vector<int> dims(host.size(), 0);
    std::vector<Matrix> maps;
    maps.reserve(host.hasse().size());
    for (std::size_t e = 0; e < host.hasse().size(); ++e) maps.emplace_back(0, 0, p);
    return PersModule(host, p, std::move(dims), std::move(maps));
}

int PersModule::total_dim() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
}

Matrix PersModule::map_between(int a, int b) const {
    if (a == b) return Matrix::identity(dims_[a], p_);
    if (!host_.less(a, b)) throw InternalError("map_between on incomparable elements");
    // dynamic programming along the topological order; any Hasse predecessor
    // above a yields the same composite once validate() holds
    std::vector<Matrix> comp(host_.size());
    std::vector<char> have(host_.size(), 0);
    comp[a] = Matrix::identity(dims_[a], p_);
    have[a] = 1;
    for (int z : host_.topological_order()) {
        if (z == a) continue;
        if (!(host_.less(a, z) && host_.leq(z, b))) continue;
        for (int w : host_.hasse_down(z)) {
            if (!have[w]) continue;
            comp[z] = edge_map(host_.hasse_edge_index(w, z)) * comp[w];
            have[z] = 1;
            break;
        }
        if (!have[z]) throw InternalError("no path found in map_between");
        if (z == b) return comp[z];
    }
    throw InternalError("map_between failed to reach target");
}

std::vector<int> PersModule::support() const {
    std::vector<int> out;
    for (int x = 0; x < host_.size(); ++x)
        if (dims_[x] > 0) out.push_back(x);
    return out;
}

bool PersModule::is_zero() const { return total_dim() == 0; }

bool PersModule::operator==(const PersModule& rhs) const {
    return host_ == rhs.host_ && p_ == rhs.p_ && dims_ == rhs.dims_ && maps_ == rhs.maps_;
}

CommutativityReport validate(const PersModule& m) {
    const Poset& p = m.host();
    for (int a = 0; a < p.size(); ++a) {
        std::vector<Matrix> comp(p.size());
        std::vector<char> have(p.size(), 0);
        comp[a] = Matrix::identity(m.dim(a), m.field());
        have[a] = 1;
        for (int z : p.topological_order()) {
            if (z == a || !p.less(a, z)) continue;
            int first_via = -1;
            for (int w : p.hasse_down(z)) {
                if (!have[w]) continue;
                Matrix candidate = m.edge_map(p.hasse_edge_index(w, z)) * comp[w];
                if (!have[z]) {
                    comp[z] = candidate;
                    have[z] = 1;
                    first_via = w;
                } else if (!(candidate == comp[z])) {
                    CommutativityReport r;
                    r.ok = false;
                    std::ostringstream os;
                    os << "non-commutative square: paths " << p.label(a) << " -> " << p.label(z)
                       << " via " << p.label(first_via) << " and via " << p.label(w)
                       << " compose to different matrices";
                    r.message = os.str();
                    return r;
                }
            }
        }
    }
    return {};
}

PersModule interval_module(const Poset& p, const Interval& I, Scalar prime) {
    if (!is_interval(p, I.members))
        throw ValidationError("subset " + I.to_string(p) + " is not an interval");
    std::vector<int> dims(p.size(), 0);
    for (int x : I.members) dims[x] = 1;
    std::vector<Matrix> maps;
    maps.reserve(p.hasse().size());
    for (auto [a, b] : p.hasse()) {
        Matrix m(dims[b], dims[a], prime);
        if (dims[a] == 1 && dims[b] == 1) m.set(0, 0, 1);
        maps.push_back(std::move(m));
    }
    return PersModule(p, prime, std::move(dims), std::move(maps));
}

Morphism::Morphism(const PersModule& source, const PersModule& target, std::vector<Matrix> blocks)
    : source_(std::make_shared<PersModule>(source)),
      target_(std::make_shared<PersModule>(target)),
      blocks_(std::move(blocks)) {
    if (!(source.host() == target.host())) throw SchemaError("morphism host mismatch");
    if (source.field() != target.field()) throw SchemaError("morphism field mismatch");
    if (static_cast<int>(blocks_.size()) != source.host().size())
        throw SchemaError("morphism needs one block per element");
    for (int x = 0; x < source.host().size(); ++x)
        if (blocks_[x].rows() != target.dim(x) || blocks_[x].cols() != source.dim(x))
            throw SchemaError("morphism block shape mismatch at '" + source.host().label(x) + "'");
}

Morphism Morphism::zero(const PersModule& source, const PersModule& target) {
    std::vector<Matrix> blocks;
    for (int x = 0; x < source.host().size(); ++x)
        blocks.emplace_back(target.dim(x), source.dim(x), source.field());
    return Morphism(source, target, std::move(blocks));
}

Morphism Morphism::identity(const PersModule& m) {
    std::vector<Matrix> blocks;
    for (int x = 0; x < m.host().size(); ++x)
        blocks.push_back(Matrix::identity(m.dim(x), m.field()));
    return Morphism(m, m, std::move(blocks));
}

bool Morphism::is_valid() const {
    const Poset& p = source().host();
    for (std::size_t e = 0; e < p.hasse().size(); ++e) {
        auto [a, b] = p.hasse()[e];
        if (!(blocks_[b] * source().edge_map(static_cast<int>(e)) ==
              target().edge_map(static_cast<int>(e)) * blocks_[a]))
            return false;
    }
    return true;
}

bool Morphism::is_zero() const {
    for (const Matrix& m : blocks_)
        if (!m.is_zero()) return false;
    return true;
}

bool Morphism::pointwise_injective() const {
    for (const Matrix& m : blocks_)
        if (rank(m) != m.cols()) return false;
    return true;
}

bool Morphism::pointwise_surjective() const {
    for (const Matrix& m : blocks_)
        if (rank(m) != m.rows()) return false;
    return true;
}

Morphism Morphism::compose_after(const Morphism& f) const {
    if (!(f.target() == source())) throw InternalError("morphism composition mismatch");
    std::vector<Matrix> blocks;
    blocks.reserve(blocks_.size());
    for (std::size_t x = 0; x < blocks_.size(); ++x)
        blocks.push_back(blocks_[x] * f.blocks_[x]);
    return Morphism(f.source(), target(), std::move(blocks));
}

Morphism Morphism::operator+(const Morphism& rhs) const {
    std::vector<Matrix> blocks;
    blocks.reserve(blocks_.size());
    for (std::size_t x = 0; x < blocks_.size(); ++x) blocks.push_back(blocks_[x] + rhs.blocks_[x]);
    return Morphism(source(), target(), std::move(blocks));
}

Morphism Morphism::scaled(Scalar c) const {
    std::vector<Matrix> blocks;
    blocks.reserve(blocks_.size());
    for (const Matrix& m : blocks_) blocks.push_back(m.scaled(c));
    return Morphism(source(), target(), std::move(blocks));
}

int morphism_coordinate_count(const PersModule& source, const PersModule& target) {
    int n = 0;
    for (int x = 0; x < source.host().size(); ++x) n += source.dim(x) * target.dim(x);
    return n;
}

std::vector<Scalar> morphism_coordinates(const Morphism& f) {
    std::vector<Scalar> out;
    for (const Matrix& m : f.blocks())
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
    return out;
}

Morphism morphism_from_coordinates(const PersModule& source, const PersModule& target,
                                   const std::vector<Scalar>& coords) {
    std::vector<Matrix> blocks;
    std::size_t k = 0;
    for (int x = 0; x < source.host().size(); ++x) {
        Matrix m(target.dim(x), source.dim(x), source.field());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.set(i, j, coords[k++]);
        blocks.push_back(std::move(m));
    }
    return Morphism(source, target, std::move(blocks));
}

std::vector<Morphism> hom_basis(const PersModule& M, const PersModule& N) {
    if (!(M.host() == N.host())) throw SchemaError("hom_basis host mismatch");
    if (M.field() != N.field()) throw SchemaError("hom_basis field mismatch");
    const Poset& p = M.host();
    const Scalar q = M.field();

    std::vector<int> base(p.size() + 1, 0);
    for (int x = 0; x < p.size(); ++x) base[x + 1] = base[x] + M.dim(x) * N.dim(x);
    const int vars = base[p.size()];

    int rows = 0;
    for (auto [a, b] : p.hasse()) rows += N.dim(b) * M.dim(a);

    Matrix sys(rows, vars, q);
    int row = 0;
    for (std::size_t e = 0; e < p.hasse().size(); ++e) {
        auto [a, b] = p.hasse()[e];
        const Matrix& ma = M.edge_map(static_cast<int>(e));
        const Matrix& na = N.edge_map(static_cast<int>(e));
        // f_b * M(a->b) - N(a->b) * f_a = 0, entry (r, c)
        for (int r = 0; r < N.dim(b); ++r)
            for (int c = 0; c < M.dim(a); ++c) {
                for (int k = 0; k < M.dim(b); ++k) {
                    int var = base[b] + r * M.dim(b) + k;
                    sys.set(row, var, sys.at(row, var) + ma.at(k, c));
                }
                for (int k = 0; k < N.dim(a); ++k) {
                    int var = base[a] + k * M.dim(a) + c;
                    sys.set(row, var, sys.at(row, var) + (q - 1) * na.at(r, k));
                }
                ++row;
            }
    }
    Matrix ker = kernel_basis(sys);
    std::vector<Morphism> out;
    out.reserve(ker.cols());
    for (int j = 0; j < ker.cols(); ++j)
        out.push_back(morphism_from_coordinates(M, N, ker.col(j)));
    return out;
}

SubmoduleResult kernel(const Morphism& f) {
    const PersModule& M = f.source();
    const Poset& p = M.host();
    const Scalar q = M.field();
    std::vector<Matrix> basis(p.size());
    std::vector<int> dims(p.size());
    for (int x = 0; x < p.size(); ++x) {
        basis[x] = kernel_basis(f.block(x));
        dims[x] = basis[x].cols();
    }
    std::vector<Matrix> maps;
    maps.reserve(p.hasse().size());
    for (std::size_t e = 0; e < p.hasse().size(); ++e) {
        auto [a, b] = p.hasse()[e];
        auto x = solve_matrix(basis[b], M.edge_map(static_cast<int>(e)) * basis[a]);
        if (!x) throw InternalError("kernel: structure map does not preserve kernels");
        maps.push_back(std::move(*x));
    }
    PersModule K(p, q, std::move(dims), std::move(maps));
    Morphism incl(K, M, std::move(basis));
    return {std::move(K), std::move(incl)};
}

QuotientResult cokernel(const Morphism& f) {
    const PersModule& N = f.target();
    const Poset& p = N.host();
    const Scalar q = N.field();
    std::vector<Matrix> proj(p.size());
    std::vector<int> dims(p.size());
    for (int x = 0; x < p.size(); ++x) {
        // rows spanning the left null space of f_x: kernel of the transpose
        proj[x] = kernel_basis(f.block(x).transposed()).transposed();
        dims[x] = proj[x].rows();
    }
    std::vector<Matrix> maps;
    maps.reserve(p.hasse().size());
    for (std::size_t e = 0; e < p.hasse().size(); ++e) {
        auto [a, b] = p.hasse()[e];
        // X with X * proj_a = proj_b * N(a->b)
        auto xt = solve_matrix(proj[a].transposed(), (proj[b] * N.edge_map(static_cast<int>(e))).transposed());
        if (!xt) throw InternalError("cokernel: induced map not well defined");
        maps.push_back(xt->transposed());
    }
    PersModule C(p, q, std::move(dims), std::move(maps));
    Morphism pr(N, C, std::move(proj));
    return {std::move(C), std::move(pr)};
}

DirectSum direct_sum(const Poset& host, Scalar p, const std::vector<PersModule>& parts) {
    for (const PersModule& m : parts) {
        if (!(m.host() == host)) throw SchemaError("direct_sum host mismatch");
        if (m.field() != p) throw SchemaError("direct_sum field mismatch");
    }
    std::vector<int> dims(host.size(), 0);
    std::vector<std::vector<int>> offset(parts.size(), std::vector<int>(host.size(), 0));
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (int x = 0; x < host.size(); ++x) {
            offset[k][x] = dims[x];
            dims[x] += parts[k].dim(x);
        }
    std::vector<Matrix> maps;
    maps.reserve(host.hasse().size());
    for (std::size_t e = 0; e < host.hasse().size(); ++e) {
        auto [a, b] = host.hasse()[e];
        Matrix m(dims[b], dims[a], p);
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const Matrix& part = parts[k].edge_map(static_cast<int>(e));
            for (int i = 0; i < part.rows(); ++i)
                for (int j = 0; j < part.cols(); ++j)
                    m.set(offset[k][b] + i, offset[k][a] + j, part.at(i, j));
        }
        maps.push_back(std::move(m));
    }
    DirectSum out{PersModule(host, p, dims, std::move(maps)), {}, {}};
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::vector<Matrix> in_blocks, pr_blocks;
        for (int x = 0; x < host.size(); ++x) {
            Matrix in(dims[x], parts[k].dim(x), p);
            Matrix pr(parts[k].dim(x), dims[x], p);
            for (int i = 0; i < parts[k].dim(x); ++i) {
                in.set(offset[k][x] + i, i, 1);
                pr.set(i, offset[k][x] + i, 1);
            }
            in_blocks.push_back(std::move(in));
            pr_blocks.push_back(std::move(pr));
        }
        out.inclusions.emplace_back(parts[k], out.sum, std::move(in_blocks));
        out.projections.emplace_back(out.sum, parts[k], std::move(pr_blocks));
    }
    return out;
}

PersModule restrict_module(const PersModule& M, const SubposetEmbedding& emb) {
    if (!(emb.host == M.host())) throw SchemaError("restrict: embedding host mismatch");
    std::vector<int> dims(emb.sub.size());
    for (int i = 0; i < emb.sub.size(); ++i) dims[i] = M.dim(emb.map[i]);
    std::vector<Matrix> maps;
    maps.reserve(emb.sub.hasse().size());
    for (auto [a, b] : emb.sub.hasse()) maps.push_back(M.map_between(emb.map[a], emb.map[b]));
    return PersModule(emb.sub, M.field(), std::move(dims), std::move(maps));
}

Morphism restrict_morphism(const Morphism& f, const SubposetEmbedding& emb) {
    PersModule src = restrict_module(f.source(), emb);
    PersModule tgt = restrict_module(f.target(), emb);
    std::vector<Matrix> blocks;
    blocks.reserve(emb.sub.size());
    for (int i = 0; i < emb.sub.size(); ++i) blocks.push_back(f.block(emb.map[i]));
    return Morphism(src, tgt, std::move(blocks));
}

Interval theta_interval(const SubposetEmbedding& emb, const Interval& I) {
    if (!is_interval(emb.sub, I.members))
        throw ValidationError("theta: " + I.to_string(emb.sub) + " is not an interval of the subposet");
    std::vector<int> image;
    image.reserve(I.members.size());
    for (int i : I.members) image.push_back(emb.map[i]);
    std::sort(image.begin(), image.end());
    std::vector<int> hull = convex_hull(emb.host, image);
    if (!is_interval(emb.host, hull))
        throw InternalError("theta: convex hull of an interval image is not an interval");
    return Interval{std::move(hull)};
}

PersModule extend_by_zero(const PersModule& M, const SubposetEmbedding& emb) {
    if (!is_convex(emb.host, emb.map))
        throw ValidationError("zero extension requires a convex full subposet");
    std::vector<int> dims(emb.host.size(), 0);
    for (int i = 0; i < emb.sub.size(); ++i) dims[emb.map[i]] = M.dim(i);
    std::vector<int> back(emb.host.size(), -1);
    for (int i = 0; i < emb.sub.size(); ++i) back[emb.map[i]] = i;
    std::vector<Matrix> maps;
    maps.reserve(emb.host.hasse().size());
    for (auto [a, b] : emb.host.hasse()) {
        if (back[a] >= 0 && back[b] >= 0) {
            // a covering pair of the host inside a convex subposet is a
            // covering pair of the subposet
            int e = emb.sub.hasse_edge_index(back[a], back[b]);
            if (e < 0) throw InternalError("extend_by_zero: covering pair missing in subposet");
            maps.push_back(M.edge_map(e));
        } else {
            maps.emplace_back(dims[b], dims[a], M.field());
        }
    }
    return PersModule(emb.host, M.field(), std::move(dims), std::move(maps));
}

Morphism extend_by_zero(const Morphism& f, const SubposetEmbedding& emb) {
    PersModule src = extend_by_zero(f.source(), emb);
    PersModule tgt = extend_by_zero(f.target(), emb);
    std::vector<Matrix> blocks;
    std::vector<int> back(emb.host.size(), -1);
    for (int i = 0; i < emb.sub.size(); ++i) back[emb.map[i]] = i;
    for (int x = 0; x < emb.host.size(); ++x) {
        if (back[x] >= 0)
            blocks.push_back(f.block(back[x]));
        else
            blocks.emplace_back(0, 0, f.source().field());
    }
    return Morphism(src, tgt, std::move(blocks));
}

namespace {

bool all_blocks_invertible(const Morphism& f) {
    for (const Matrix& m : f.blocks())
        if (rank(m) != m.rows()) return false; // square blocks by equal dims
    return true;
}

} // namespace

IsoCheck is_isomorphic(const PersModule& a, const PersModule& b, std::uint64_t seed) {
    if (!(a.host() == b.host()) || a.field() != b.field()) return IsoCheck::not_isomorphic;
    if (a.dims() != b.dims()) return IsoCheck::not_isomorphic;
    if (a.total_dim() == 0) return IsoCheck::isomorphic;
    std::vector<Morphism> basis = hom_basis(a, b);
    if (basis.empty()) return IsoCheck::not_isomorphic;
    const Scalar p = a.field();
    const std::size_t d = basis.size();
    if (d <= 6) {
        // exhaustive over all nonzero coefficient tuples
        std::vector<Scalar> coeff(d, 0);
        while (true) {
            std::size_t i = 0;
            while (i < d && coeff[i] == p - 1) coeff[i++] = 0;
            if (i == d) break;
            ++coeff[i];
            Morphism f = basis[0].scaled(coeff[0]);
            for (std::size_t k = 1; k < d; ++k) f = f + basis[k].scaled(coeff[k]);
            if (all_blocks_invertible(f)) return IsoCheck::isomorphic;
        }
        return IsoCheck::not_isomorphic;
    }
    std::mt19937_64 eng(seed);
    std::uniform_int_distribution<Scalar> dist(0, p - 1);
    for (int trial = 0; trial < 4000; ++trial) {
        Morphism f = basis[0].scaled(dist(eng));
        for (std::size_t k = 1; k < d; ++k) f = f + basis[k].scaled(dist(eng));
        if (all_blocks_invertible(f)) return IsoCheck::isomorphic;
    }
    return IsoCheck::inconclusive;
}

} // namespace intres
