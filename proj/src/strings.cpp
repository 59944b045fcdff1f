#include "intres/strings.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace intres {

std::string ComponentShape::to_string() const {
    std::ostringstream os;
    if (kind == Kind::A)
        os << "A_" << n << "(" << (orientation.empty() ? "-" : orientation) << ")";
    else
        os << "C(" << m << "," << l << ")";
    return os.str();
}

std::string ShapeVerdict::shape_string() const {
    if (!accepted) return "none";
    std::ostringstream os;
    for (std::size_t i = 0; i < components.size(); ++i)
        os << (i ? " + " : "") << components[i].to_string();
    return os.str();
}

namespace {

int hasse_degree(const Poset& p, int x) {
    return static_cast<int>(p.hasse_up(x).size() + p.hasse_down(x).size());
}

std::vector<int> undirected_neighbors(const Poset& p, int x) {
    std::vector<int> out = p.hasse_up(x);
    out.insert(out.end(), p.hasse_down(x).begin(), p.hasse_down(x).end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

ShapeVerdict classify_zero_gldim(const Poset& p) {
    ShapeVerdict v;
    for (const auto& comp : p.components()) {
        for (int x : comp)
            if (hasse_degree(p, x) >= 3) {
                v.witness = "vertex '" + p.label(x) + "' has Hasse degree " +
                            std::to_string(hasse_degree(p, x)) +
                            "; it generates a D_4-type full subposet";
                v.components.clear();
                return v;
            }
        int edges = 0;
        for (auto [a, b] : p.hasse())
            if (std::binary_search(comp.begin(), comp.end(), a)) ++edges;
        const int n = static_cast<int>(comp.size());
        if (edges == n - 1) {
            // a path: walk from the smaller endpoint
            ComponentShape shape;
            shape.kind = ComponentShape::Kind::A;
            shape.n = n;
            int start = comp[0];
            for (int x : comp)
                if (undirected_neighbors(p, x).size() <= 1) { start = x; break; }
            int prev = -1, cur = start;
            shape.elements.push_back(cur);
            while (static_cast<int>(shape.elements.size()) < n) {
                int next = -1;
                for (int y : undirected_neighbors(p, cur))
                    if (y != prev) { next = y; break; }
                shape.orientation.push_back(p.hasse_edge_index(cur, next) >= 0 ? 'r' : 'l');
                prev = cur;
                cur = next;
                shape.elements.push_back(cur);
            }
            v.components.push_back(std::move(shape));
        } else if (edges == n) {
            // a single cycle; count sources and sinks of its orientation
            std::vector<int> sources, sinks;
            for (int x : comp) {
                if (p.hasse_down(x).empty()) sources.push_back(x);
                if (p.hasse_up(x).empty()) sinks.push_back(x);
            }
            if (sources.size() != 1 || sinks.size() != 1) {
                v.witness = "Hasse cycle with " + std::to_string(sources.size()) + " sources and " +
                            std::to_string(sinks.size()) +
                            " sinks is a path algebra of extended Dynkin type A";
                v.components.clear();
                return v;
            }
            ComponentShape shape;
            shape.kind = ComponentShape::Kind::C;
            shape.elements = comp;
            std::vector<int> branch;
            for (int first : p.hasse_up(sources[0])) {
                int len = 0, cur = first;
                while (cur != sinks[0]) {
                    ++len;
                    cur = p.hasse_up(cur)[0];
                }
                branch.push_back(len);
            }
            // interior vertex counts of the two directed paths; never zero in
            // a transitive reduction
            shape.m = std::max(branch[0], branch[1]);
            shape.l = std::min(branch[0], branch[1]);
            if (shape.l < 1) throw InternalError("degenerate cycle in a Hasse diagram");
            v.components.push_back(std::move(shape));
        } else {
            // impossible for max degree <= 2, kept as a guard
            v.witness = "component with " + std::to_string(edges) + " edges on " +
                        std::to_string(n) + " vertices";
            v.components.clear();
            return v;
        }
    }
    v.accepted = true;
    return v;
}

CmlQuiver cml_quiver(int m, int l) {
    CmlQuiver q;
    q.m = m;
    q.l = l;
    q.poset = make_cml(m, l);
    return q;
}

StringWord StringWord::inverse() const {
    StringWord out;
    out.base = base;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.letters.push_back({it->beta, it->index, !it->inverse});
    return out;
}

StringWord StringWord::representative() const {
    StringWord inv = inverse();
    return std::lexicographical_compare(inv.letters.begin(), inv.letters.end(), letters.begin(),
                                        letters.end())
               ? inv
               : *this;
}

namespace {

int letter_source(const CmlQuiver& q, const StringLetter& s) {
    int from = s.beta ? q.beta_source(s.index) : q.alpha_source(s.index);
    int to = s.beta ? q.beta_target(s.index) : q.alpha_target(s.index);
    return s.inverse ? to : from;
}

int letter_target(const CmlQuiver& q, const StringLetter& s) {
    int from = s.beta ? q.beta_source(s.index) : q.alpha_source(s.index);
    int to = s.beta ? q.beta_target(s.index) : q.alpha_target(s.index);
    return s.inverse ? from : to;
}

// does w contain the full alpha (or beta) path, directed or fully inverted?
bool contains_zero_relation(const StringWord& w, bool beta, int top_index) {
    const int len = top_index + 1;
    if (static_cast<int>(w.letters.size()) < len) return false;
    for (std::size_t s = 0; s + len <= w.letters.size(); ++s) {
        bool fwd = true, bwd = true;
        for (int k = 0; k < len; ++k) {
            const StringLetter& letter = w.letters[s + k];
            if (letter.beta != beta) { fwd = bwd = false; break; }
            if (!(letter.index == k && !letter.inverse)) fwd = false;
            if (!(letter.index == top_index - k && letter.inverse)) bwd = false;
        }
        if (fwd || bwd) return true;
    }
    return false;
}

} // namespace

int string_source(const CmlQuiver& q, const StringWord& w) {
    return w.trivial() ? w.base : letter_source(q, w.letters.front());
}

int string_target(const CmlQuiver& q, const StringWord& w) {
    return w.trivial() ? w.base : letter_target(q, w.letters.back());
}

bool is_valid_string(const CmlQuiver& q, const StringWord& w) {
    if (w.trivial()) return w.base >= 0 && w.base < q.poset.size();
    for (const auto& s : w.letters) {
        int hi = s.beta ? q.l : q.m;
        if (s.index < 0 || s.index > hi) return false;
    }
    for (std::size_t k = 0; k + 1 < w.letters.size(); ++k) {
        if (letter_target(q, w.letters[k]) != letter_source(q, w.letters[k + 1])) return false;
        const StringLetter &a = w.letters[k], &b = w.letters[k + 1];
        if (a.beta == b.beta && a.index == b.index && a.inverse != b.inverse) return false;
    }
    if (contains_zero_relation(w, false, q.m)) return false;
    if (contains_zero_relation(w, true, q.l)) return false;
    return true;
}

std::string render_string(const StringWord& w) {
    if (w.trivial()) return "e_" + std::to_string(w.base);
    std::ostringstream os;
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        if (k) os << " ";
        os << (w.letters[k].beta ? "b" : "a") << w.letters[k].index;
        if (w.letters[k].inverse) os << "^-1";
    }
    return os.str();
}

std::vector<StringWord> enumerate_strings(const CmlQuiver& q) {
    std::vector<StringWord> out;
    auto push = [&](StringWord w) {
        w = w.representative();
        if (!is_valid_string(q, w))
            throw InternalError("enumerated word is not a string: " + render_string(w));
        if (!w.trivial() && string_source(q, w) == string_target(q, w))
            throw InternalError("string with equal endpoints would admit bands: " +
                                render_string(w));
        out.push_back(std::move(w));
    };
    // (i) trivial strings
    for (int v = 0; v < q.poset.size(); ++v) {
        StringWord w;
        w.base = v;
        push(w);
    }
    // (ii) alpha segments, the full path excluded
    for (int i = 0; i <= q.m; ++i)
        for (int j = i; j <= q.m; ++j) {
            if (i == 0 && j == q.m) continue;
            StringWord w;
            for (int k = i; k <= j; ++k) w.letters.push_back({false, k, false});
            push(w);
        }
    // (iii) beta segments
    for (int i = 0; i <= q.l; ++i)
        for (int j = i; j <= q.l; ++j) {
            if (i == 0 && j == q.l) continue;
            StringWord w;
            for (int k = i; k <= j; ++k) w.letters.push_back({true, k, false});
            push(w);
        }
    // (iv) (beta_0..beta_j)^{-1} (alpha_0..alpha_i)
    for (int i = 0; i <= q.m - 1; ++i)
        for (int j = 0; j <= q.l - 1; ++j) {
            StringWord w;
            for (int k = j; k >= 0; --k) w.letters.push_back({true, k, true});
            for (int k = 0; k <= i; ++k) w.letters.push_back({false, k, false});
            push(w);
        }
    // (v) (beta_j..beta_l) (alpha_i..alpha_m)^{-1}
    for (int i = 1; i <= q.m; ++i)
        for (int j = 1; j <= q.l; ++j) {
            StringWord w;
            for (int k = j; k <= q.l; ++k) w.letters.push_back({true, k, false});
            for (int k = q.m; k >= i; --k) w.letters.push_back({false, k, true});
            push(w);
        }
    // representatives are pairwise distinct
    std::set<std::pair<int, std::vector<std::tuple<bool, int, bool>>>> seen;
    for (const auto& w : out) {
        std::vector<std::tuple<bool, int, bool>> key;
        for (const auto& s : w.letters) key.emplace_back(s.beta, s.index, s.inverse);
        if (!seen.emplace(w.base, std::move(key)).second)
            throw InternalError("duplicate string representative");
    }
    return out;
}

Interval string_to_interval(const CmlQuiver& q, const StringWord& w) {
    std::set<int> verts;
    if (w.trivial()) {
        verts.insert(w.base);
    } else {
        for (const auto& s : w.letters) {
            verts.insert(letter_source(q, s));
            verts.insert(letter_target(q, s));
        }
    }
    Interval I{std::vector<int>(verts.begin(), verts.end())};
    if (!is_interval(q.poset, I.members))
        throw InternalError("string support is not an interval: " + render_string(w));
    return I;
}

long long count_indecomposables(long long m, long long l) {
    if (m < 1 || l < 1) throw SchemaError("count_indecomposables needs m, l >= 1");
    long long closed = (m * m + 4 * m * l + l * l + 5 * m + 5 * l + 6) / 2;
    long long s = m + l + 3;
    long long alt = m * l + s * (s - 1) / 2;
    if (closed != alt) throw InternalError("indecomposable count formulas disagree");
    return closed;
}

} // namespace intres
