#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "intres/poset.hpp"

namespace intres {

// Shape of one connected component of a Hasse diagram with zero interval
// resolution global dimension: an A_n orientation or a C(m,l) cycle.
struct ComponentShape {
    enum class Kind { A, C };
    Kind kind = Kind::A;
    std::vector<int> elements; // host indices, in walk order for A
    int n = 0;                 // A only
    std::string orientation;   // A only, over {r,l}
    int m = 0, l = 0;          // C only, m >= l

    std::string to_string() const;
};

struct ShapeVerdict {
    bool accepted = false;
    std::vector<ComponentShape> components; // one per component when accepted
    std::string witness;                    // rejection reason otherwise

    std::string shape_string() const; // "A_n(word)", "C(m,l)", component list, or "none"
};

// Accepts exactly the posets whose every component is an A_n orientation or a
// single cycle with one source and one sink (a C(m,l)); any Hasse vertex of
// degree >= 3 or a cycle with repeated sources/sinks is a rejection witness.
ShapeVerdict classify_zero_gldim(const Poset& p);

// ---- strings over the C(m,l) quiver ---------------------------------------

// Arrows: alpha_0..alpha_m along 0h -> 1 -> ... -> m -> 1h, beta_0..beta_l
// along the primed row.  Vertex indices follow make_cml.
struct CmlQuiver {
    int m = 1, l = 1;
    Poset poset;

    int v_bottom() const { return 0; }
    int v_top() const { return m + l + 1; }
    int v_spine(int i) const { return i; }      // 1..m
    int v_primed(int j) const { return m + j; } // 1..l
    int alpha_source(int i) const { return i == 0 ? 0 : v_spine(i); }
    int alpha_target(int i) const { return i == m ? v_top() : v_spine(i + 1); }
    int beta_source(int j) const { return j == 0 ? 0 : v_primed(j); }
    int beta_target(int j) const { return j == l ? v_top() : v_primed(j + 1); }
};

CmlQuiver cml_quiver(int m, int l);

struct StringLetter {
    bool beta = false;
    int index = 0;
    bool inverse = false;

    bool operator==(const StringLetter& o) const {
        return beta == o.beta && index == o.index && inverse == o.inverse;
    }
    bool operator<(const StringLetter& o) const {
        if (beta != o.beta) return !beta;
        if (index != o.index) return index < o.index;
        return !inverse && o.inverse;
    }
};

// Reduced walk avoiding the two zero relations (the full alpha and beta
// paths); a trivial string is an empty walk pinned at a vertex.
struct StringWord {
    int base = -1; // trivial strings only
    std::vector<StringLetter> letters;

    bool trivial() const { return letters.empty(); }
    StringWord inverse() const;
    // the lexicographically smaller of {w, w^{-1}}
    StringWord representative() const;
    bool operator==(const StringWord& o) const { return base == o.base && letters == o.letters; }
};

int string_source(const CmlQuiver& q, const StringWord& w);
int string_target(const CmlQuiver& q, const StringWord& w);
bool is_valid_string(const CmlQuiver& q, const StringWord& w);
std::string render_string(const StringWord& w);

// Complete set of representatives, one per inverse pair, in family order:
// trivial strings, alpha segments, beta segments, the valley words
// (beta-prefix)^{-1}(alpha-prefix), the peak words (beta-suffix)(alpha-suffix)^{-1}.
// The enumerator asserts band-freeness: every nontrivial string has distinct
// endpoints.
std::vector<StringWord> enumerate_strings(const CmlQuiver& q);

// Vertex support of the walk; bijective onto the intervals of C(m,l) other
// than the full one.
Interval string_to_interval(const CmlQuiver& q, const StringWord& w);

// (m^2 + 4ml + l^2 + 5m + 5l + 6) / 2, cross-checked against ml + C(m+l+3, 2).
long long count_indecomposables(long long m, long long l);

} // namespace intres
