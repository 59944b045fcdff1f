#pragma once

#include "intres/approx.hpp"
#include "intres/module.hpp"

namespace intres {

// Same elements and labels, order reversed.
Poset opposite(const Poset& p);

// (rad M)_y = sum of the images of all structure maps into y.
SubmoduleResult radical(const PersModule& M);
QuotientResult top(const PersModule& M);

// Projective at x is the interval module on the up-set of x.
PersModule projective_at(const Poset& p, int x, Scalar prime);
PersModule simple_at(const Poset& p, int x, Scalar prime);

struct ProjectiveCover {
    std::vector<int> gens; // generator element per copy, aligned with source.copies
    IntervalSum source;    // direct sum of projectives k_{up(x)}
    Morphism map;          // surjective, kernel inside rad(source)
};
ProjectiveCover projective_cover(const PersModule& M);

// Minimal presentation P1 -> P0 -> M -> 0.  Components between projectives
// are scalar multiples of the canonical inclusions (Hom(P_y, P_x) is at most
// one-dimensional for incidence algebras), captured in `lambda`.
struct Presentation {
    ProjectiveCover p0;
    ProjectiveCover p1;
    Matrix lambda; // rows: p0 copies, cols: p1 copies; entry = component scalar
};
Presentation minimal_presentation(const PersModule& M);

// Auslander-Reiten translate: dual of the cokernel of the presentation matrix
// transported to opposite-poset projectives.  Vanishes exactly on projectives.
PersModule ar_translate(const PersModule& M);

// Dual of a module over opposite(original): transpose every matrix, reverse
// the poset.
PersModule dual_module(const PersModule& N, const Poset& original);

// max over intervals I of interval_resdim(ar_translate(k_I)), with the
// convention resdim(0) = 0.
int interval_gldim(const Poset& p, Scalar prime = 2, const ResolveOptions& opts = {});

// max over simples of the minimal projective resolution length.
int projective_gldim(const Poset& p, Scalar prime = 2);

} // namespace intres
