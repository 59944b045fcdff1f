#pragma once

#include <string>
#include <utility>
#include <vector>

#include "intres/errors.hpp"

namespace intres {

// Finite poset with a fixed element order.  Immutable after construction;
// builders close an arbitrary generating relation transitively and derive the
// Hasse diagram (transitive reduction).
class Poset {
public:
    Poset() = default;

    int size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    int index_of(const std::string& label) const; // throws SchemaError when unknown

    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * n_ + b] != 0; }
    bool less(int a, int b) const { return a != b && leq(a, b); }

    const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }
    const std::vector<int>& hasse_up(int a) const { return up_[a]; }
    const std::vector<int>& hasse_down(int a) const { return down_[a]; }
    int hasse_edge_index(int a, int b) const; // -1 when (a,b) is not a covering pair

    std::vector<int> up_set(int x) const;
    std::vector<int> down_set(int x) const;

    // Deterministic linear extension: ascending size of down-set, ties by index.
    const std::vector<int>& topological_order() const { return topo_; }

    bool is_connected() const;
    std::vector<std::vector<int>> components() const; // undirected Hasse components

    bool operator==(const Poset& rhs) const {
        return n_ == rhs.n_ && labels_ == rhs.labels_ && leq_ == rhs.leq_;
    }

    friend Poset poset_from_relations(const std::vector<std::string>&,
                                      const std::vector<std::pair<std::string, std::string>>&);
    friend Poset poset_from_index_pairs(std::vector<std::string>, const std::vector<std::pair<int, int>>&);

private:
    void finish(); // closure done: derive hasse, adjacency, topo order

    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<char> leq_; // n*n, reflexive-transitive
    std::vector<std::pair<int, int>> hasse_;
    std::vector<std::vector<int>> up_, down_;
    std::vector<int> topo_;
};

// Relations may be any generating set of the order; the constructor closes
// them.  Cycles (antisymmetry violations) and unknown/duplicate labels throw.
Poset poset_from_relations(const std::vector<std::string>& labels,
                           const std::vector<std::pair<std::string, std::string>>& pairs);
Poset poset_from_index_pairs(std::vector<std::string> labels,
                             const std::vector<std::pair<int, int>>& pairs);

// Connected convex subset of a host poset, kept as a sorted member list.
// Canonical order: size, then lexicographic member list.
struct Interval {
    std::vector<int> members;

    bool contains(int x) const;
    bool operator==(const Interval& rhs) const { return members == rhs.members; }
    bool operator<(const Interval& rhs) const {
        if (members.size() != rhs.members.size()) return members.size() < rhs.members.size();
        return members < rhs.members;
    }
    std::string to_string(const Poset& host) const;
};

bool is_convex(const Poset& p, const std::vector<int>& s);
// Connectivity through Hasse edges with both ends in s.  For convex s this is
// exactly connectivity of the induced subposet.
bool is_connected_subset(const Poset& p, const std::vector<int>& s);
bool is_interval(const Poset& p, const std::vector<int>& s);

// All intervals, canonically ordered.  Grows connected convex sets from
// singletons by "add one Hasse-adjacent element, then close convexly"; the
// naive power-set scan lives in tests as the oracle.
std::vector<Interval> enumerate_intervals(const Poset& p);

// { x : a <= x <= b for some a, b in s }.  Idempotent, extensive, monotone.
std::vector<int> convex_hull(const Poset& p, const std::vector<int>& s);

struct SubposetEmbedding {
    Poset sub;
    Poset host;
    std::vector<int> map; // sub index -> host index, strictly increasing for full_subposet
};

// Full subposet on the given host elements, with the inclusion map.
SubposetEmbedding full_subposet(const Poset& host, const std::vector<int>& elements);

// Validates that `map` embeds `sub` as a full subposet of `host` (order
// reflected and preserved).  Non-full embeddings are rejected: resolution
// dimensions are not monotone under non-full inclusions, so nothing
// downstream may consume one.
SubposetEmbedding make_embedding(Poset sub, Poset host, std::vector<int> map);

// Label-ignoring isomorphism by permutation search; intended for tests on
// posets with at most 8 elements.
bool unlabeled_isomorphic(const Poset& a, const Poset& b);

// Named families ----------------------------------------------------------

// A_n quiver: orientation word over {r,l}, length n-1; word[i] == 'r' means
// element i+1 < i+2.
Poset make_a_n(int n, const std::string& orientation);
// D_4 quiver with center "3" and leaves "1","2","4"; word over {i,o} per leaf
// in that order, 'i' = leaf below center, 'o' = center below leaf.
Poset make_d4(const std::string& orientation);
// Two chains 0h < 1 < ... < m < 1h and 0h < 1' < ... < l' < 1h.
Poset make_cml(int m, int l);
// Commutative grid, labels "ij" (0-based row i, column j); rows, cols in 1..9.
Poset make_grid(int rows, int cols);
// Commutative ladder with m rungs: rows b1..bm / t1..tm, verticals bi < ti,
// horizontal orientation word over {r,l} of length m-1 shared by both rows.
Poset make_ladder(int m, const std::string& orientation);
// The 7-element poset of two stacked diamonds, and its 6-element variant with
// the middle element removed (classical gldim 2 resp. 3).
Poset make_igusa_p();
Poset make_igusa_p_prime();

std::string equioriented_word(int n);
std::string zigzag_word(int n);

} // namespace intres
