#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "intres/linalg.hpp"
#include "intres/poset.hpp"

namespace intres {

// Pointwise finite-dimensional representation of a poset over GF(p): a space
// per element and a matrix per Hasse edge; composites along longer relations
// are computed on demand.  Immutable after construction.
class PersModule {
public:
    PersModule() = default;
    PersModule(Poset host, Scalar p, std::vector<int> dims, std::vector<Matrix> maps);

    static PersModule zero(const Poset& host, Scalar p);

    const Poset& host() const { return host_; }
    Scalar field() const { return p_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int elt) const { return dims_[elt]; }
    int total_dim() const;
    const Matrix& edge_map(int edge) const { return maps_[edge]; }

    // Composite map along any relation a <= b; identity for a == b.
    // Well defined once validate() passes.
    Matrix map_between(int a, int b) const;

    std::vector<int> support() const;
    bool is_zero() const;
    bool operator==(const PersModule& rhs) const;

private:
    Poset host_;
    Scalar p_ = 2;
    std::vector<int> dims_;
    std::vector<Matrix> maps_; // parallel to host_.hasse()
};

struct CommutativityReport {
    bool ok = true;
    std::string message; // names the offending square when !ok
};

// Checks that all directed Hasse paths between any two comparable elements
// compose to the same matrix.
CommutativityReport validate(const PersModule& m);

PersModule interval_module(const Poset& p, const Interval& I, Scalar prime);

// Morphism of representations: one block per element, commuting with the
// structure maps on every Hasse edge.
class Morphism {
public:
    Morphism() = default;
    Morphism(const PersModule& source, const PersModule& target, std::vector<Matrix> blocks);

    static Morphism zero(const PersModule& source, const PersModule& target);
    static Morphism identity(const PersModule& m);

    const PersModule& source() const { return *source_; }
    const PersModule& target() const { return *target_; }
    const Matrix& block(int elt) const { return blocks_[elt]; }
    const std::vector<Matrix>& blocks() const { return blocks_; }

    bool is_valid() const; // all commuting squares hold
    bool is_zero() const;
    bool pointwise_injective() const;
    bool pointwise_surjective() const;

    Morphism compose_after(const Morphism& f) const; // *this ∘ f
    Morphism operator+(const Morphism& rhs) const;
    Morphism scaled(Scalar c) const;

private:
    std::shared_ptr<const PersModule> source_, target_;
    std::vector<Matrix> blocks_;
};

// Coordinates of a morphism: blocks flattened row-major, elements ascending.
std::vector<Scalar> morphism_coordinates(const Morphism& f);
int morphism_coordinate_count(const PersModule& source, const PersModule& target);
Morphism morphism_from_coordinates(const PersModule& source, const PersModule& target,
                                   const std::vector<Scalar>& coords);

// Basis of Hom(M, N), from the kernel of the stacked Hasse-edge commutation
// constraints; deterministic in the canonical variable order.
std::vector<Morphism> hom_basis(const PersModule& M, const PersModule& N);

struct SubmoduleResult {
    PersModule sub;
    Morphism inclusion;
};
SubmoduleResult kernel(const Morphism& f);

struct QuotientResult {
    PersModule quotient;
    Morphism projection;
};
QuotientResult cokernel(const Morphism& f);

struct DirectSum {
    PersModule sum;
    std::vector<Morphism> inclusions;
    std::vector<Morphism> projections;
};
DirectSum direct_sum(const Poset& host, Scalar p, const std::vector<PersModule>& parts);

// Restriction along a full subposet embedding; maps on sub-Hasse edges are
// host composites (well defined by commutativity).
PersModule restrict_module(const PersModule& M, const SubposetEmbedding& emb);
Morphism restrict_morphism(const Morphism& f, const SubposetEmbedding& emb);

// Convex-hull functor on intervals: conv(image of I) in the host.
Interval theta_interval(const SubposetEmbedding& emb, const Interval& I);

// Re-embeds a module over a convex full subposet into the host by zero
// extension (dims 0 outside the image).  Throws when the image is not convex.
PersModule extend_by_zero(const PersModule& M, const SubposetEmbedding& emb);
Morphism extend_by_zero(const Morphism& f, const SubposetEmbedding& emb);

enum class IsoCheck { isomorphic, not_isomorphic, inconclusive };

// Equal dimension vectors plus an invertible morphism found in hom_basis
// combinations: exhaustive over GF(p) tuples when the hom space has dimension
// <= 6, randomized (seeded) above that, reporting "inconclusive" on failure.
IsoCheck is_isomorphic(const PersModule& a, const PersModule& b,
                       std::uint64_t seed = 0x9e3779b97f4a7c15ull);

} // namespace intres
