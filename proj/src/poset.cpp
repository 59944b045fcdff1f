#include "intres/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace intres {

int Poset::index_of(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    throw SchemaError("unknown element label '" + label + "'");
}

int Poset::hasse_edge_index(int a, int b) const {
    for (int e = 0; e < static_cast<int>(hasse_.size()); ++e)
        if (hasse_[e].first == a && hasse_[e].second == b) return e;
    return -1;
}

std::vector<int> Poset::up_set(int x) const {
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
        if (leq(x, y)) out.push_back(y);
    return out;
}

std::vector<int> Poset::down_set(int x) const {
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
        if (leq(y, x)) out.push_back(y);
    return out;
}

bool Poset::is_connected() const { return components().size() <= 1; }

std::vector<std::vector<int>> Poset::components() const {
    std::vector<int> comp(n_, -1);
    int nc = 0;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : up_[x])
                if (comp[y] < 0) { comp[y] = nc; stack.push_back(y); }
            for (int y : down_[x])
                if (comp[y] < 0) { comp[y] = nc; stack.push_back(y); }
        }
        ++nc;
    }
    std::vector<std::vector<int>> out(nc);
    for (int x = 0; x < n_; ++x) out[comp[x]].push_back(x);
    return out;
}

void Poset::finish() {
    hasse_.clear();
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (!less(a, b)) continue;
            bool covering = true;
            for (int z = 0; z < n_; ++z)
                if (less(a, z) && less(z, b)) { covering = false; break; }
            if (covering) hasse_.emplace_back(a, b);
        }
    std::sort(hasse_.begin(), hasse_.end());
    up_.assign(n_, {});
    down_.assign(n_, {});
    for (auto [a, b] : hasse_) {
        up_[a].push_back(b);
        down_[b].push_back(a);
    }
    topo_.resize(n_);
    std::iota(topo_.begin(), topo_.end(), 0);
    std::vector<int> below(n_, 0);
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (less(y, x)) ++below[x];
    std::stable_sort(topo_.begin(), topo_.end(),
                     [&](int a, int b) { return below[a] < below[b]; });
}

Poset poset_from_index_pairs(std::vector<std::string> labels,
                             const std::vector<std::pair<int, int>>& pairs) {
    Poset p;
    p.n_ = static_cast<int>(labels.size());
    if (p.n_ == 0) throw SchemaError("poset needs at least one element");
    {
        std::set<std::string> seen;
        for (const auto& l : labels) {
            if (l.empty()) throw SchemaError("empty element label");
            if (!seen.insert(l).second) throw SchemaError("duplicate element label '" + l + "'");
        }
    }
    p.labels_ = std::move(labels);
    p.leq_.assign(static_cast<std::size_t>(p.n_) * p.n_, 0);
    auto rel = [&](int a, int b) -> char& { return p.leq_[static_cast<std::size_t>(a) * p.n_ + b]; };
    for (int i = 0; i < p.n_; ++i) rel(i, i) = 1;
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= p.n_ || b < 0 || b >= p.n_) throw SchemaError("relation index out of range");
        rel(a, b) = 1;
    }
    // Warshall closure
    for (int k = 0; k < p.n_; ++k)
        for (int i = 0; i < p.n_; ++i) {
            if (!rel(i, k)) continue;
            for (int j = 0; j < p.n_; ++j)
                if (rel(k, j)) rel(i, j) = 1;
        }
    for (int a = 0; a < p.n_; ++a)
        for (int b = a + 1; b < p.n_; ++b)
            if (rel(a, b) && rel(b, a))
                throw ValidationError("relation cycle between '" + p.labels_[a] + "' and '" +
                                      p.labels_[b] + "' violates antisymmetry");
    p.finish();
    return p;
}

Poset poset_from_relations(const std::vector<std::string>& labels,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        if (!idx.emplace(labels[i], i).second)
            throw SchemaError("duplicate element label '" + labels[i] + "'");
    }
    std::vector<std::pair<int, int>> ip;
    ip.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end()) throw SchemaError("unknown element label '" + a + "'");
        if (ib == idx.end()) throw SchemaError("unknown element label '" + b + "'");
        ip.emplace_back(ia->second, ib->second);
    }
    return poset_from_index_pairs(labels, ip);
}

bool Interval::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

std::string Interval::to_string(const Poset& host) const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < members.size(); ++i)
        os << (i ? "," : "") << host.label(members[i]);
    os << "}";
    return os.str();
}

bool is_convex(const Poset& p, const std::vector<int>& s) {
    std::vector<char> in(p.size(), 0);
    for (int x : s) in[x] = 1;
    for (int z = 0; z < p.size(); ++z) {
        if (in[z]) continue;
        bool above = false, below = false;
        for (int x : s) {
            if (p.less(x, z)) above = true;
            if (p.less(z, x)) below = true;
        }
        if (above && below) return false;
    }
    return true;
}

bool is_connected_subset(const Poset& p, const std::vector<int>& s) {
    if (s.empty()) return false;
    std::vector<char> in(p.size(), 0);
    for (int x : s) in[x] = 1;
    std::vector<char> seen(p.size(), 0);
    std::vector<int> stack{s[0]};
    seen[s[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        auto visit = [&](int y) {
            if (in[y] && !seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        };
        for (int y : p.hasse_up(x)) visit(y);
        for (int y : p.hasse_down(x)) visit(y);
    }
    return reached == s.size();
}

bool is_interval(const Poset& p, const std::vector<int>& s) {
    if (s.empty()) return false;
    return is_convex(p, s) && is_connected_subset(p, s);
}

std::vector<int> convex_hull(const Poset& p, const std::vector<int>& s) {
    if (s.empty()) throw SchemaError("convex hull of empty set");
    std::vector<char> above(p.size(), 0), below(p.size(), 0);
    for (int z = 0; z < p.size(); ++z)
        for (int x : s) {
            if (p.leq(x, z)) above[z] = 1;
            if (p.leq(z, x)) below[z] = 1;
        }
    std::vector<int> out;
    for (int z = 0; z < p.size(); ++z)
        if (above[z] && below[z]) out.push_back(z);
    return out;
}

std::vector<Interval> enumerate_intervals(const Poset& p) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    for (int x = 0; x < p.size(); ++x) {
        std::vector<int> s{x};
        if (seen.insert(s).second) queue.push_back(s);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<int> s = queue[qi];
        std::vector<char> in(p.size(), 0);
        for (int x : s) in[x] = 1;
        std::set<int> adjacent;
        for (auto [a, b] : p.hasse()) {
            if (in[a] && !in[b]) adjacent.insert(b);
            if (!in[a] && in[b]) adjacent.insert(a);
        }
        for (int y : adjacent) {
            std::vector<int> grown = s;
            grown.push_back(y);
            std::sort(grown.begin(), grown.end());
            std::vector<int> hull = convex_hull(p, grown);
            if (seen.insert(hull).second) queue.push_back(hull);
        }
    }
    std::vector<Interval> out;
    out.reserve(queue.size());
    for (auto& s : queue) out.push_back(Interval{std::move(s)});
    std::sort(out.begin(), out.end());
    return out;
}

SubposetEmbedding full_subposet(const Poset& host, const std::vector<int>& elements) {
    if (elements.empty()) throw SchemaError("full subposet of empty set");
    std::vector<int> map = elements;
    std::sort(map.begin(), map.end());
    map.erase(std::unique(map.begin(), map.end()), map.end());
    std::vector<std::string> labels;
    labels.reserve(map.size());
    for (int x : map) {
        if (x < 0 || x >= host.size()) throw SchemaError("subposet element index out of range");
        labels.push_back(host.label(x));
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < map.size(); ++i)
        for (std::size_t j = 0; j < map.size(); ++j)
            if (i != j && host.less(map[i], map[j])) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    SubposetEmbedding emb;
    emb.sub = poset_from_index_pairs(std::move(labels), pairs);
    emb.host = host;
    emb.map = std::move(map);
    return emb;
}

SubposetEmbedding make_embedding(Poset sub, Poset host, std::vector<int> map) {
    if (static_cast<int>(map.size()) != sub.size()) throw SchemaError("embedding map size mismatch");
    std::set<int> image;
    for (int x : map) {
        if (x < 0 || x >= host.size()) throw SchemaError("embedding image out of range");
        if (!image.insert(x).second) throw SchemaError("embedding map not injective");
    }
    for (int i = 0; i < sub.size(); ++i)
        for (int j = 0; j < sub.size(); ++j)
            if (sub.leq(i, j) != host.leq(map[i], map[j]))
                throw ValidationError(
                    "not a full subposet embedding at '" + sub.label(i) + "','" + sub.label(j) +
                    "': resolution-dimension monotonicity can fail for non-full inclusions");
    return SubposetEmbedding{std::move(sub), std::move(host), std::move(map)};
}

bool unlabeled_isomorphic(const Poset& a, const Poset& b) {
    if (a.size() != b.size()) return false;
    const int n = a.size();
    if (n > 8) throw SchemaError("unlabeled isomorphism check limited to 8 elements");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (a.leq(i, j) != b.leq(perm[i], perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// families ------------------------------------------------------------------

static void check_word(const std::string& w, std::size_t len, const std::string& alphabet,
                       const std::string& what) {
    if (w.size() != len)
        throw SchemaError(what + " orientation word must have length " + std::to_string(len) +
                          ", got '" + w + "'");
    for (char c : w)
        if (alphabet.find(c) == std::string::npos)
            throw SchemaError(what + " orientation word may only use '" + alphabet + "', got '" + w + "'");
}

Poset make_a_n(int n, const std::string& orientation) {
    if (n < 1) throw SchemaError("A_n needs n >= 1");
    check_word(orientation, static_cast<std::size_t>(n - 1), "rl", "A_n");
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) {
        if (orientation[i] == 'r')
            pairs.emplace_back(i, i + 1);
        else
            pairs.emplace_back(i + 1, i);
    }
    return poset_from_index_pairs(std::move(labels), pairs);
}

Poset make_d4(const std::string& orientation) {
    check_word(orientation, 3, "io", "D_4");
    std::vector<std::string> labels{"1", "2", "3", "4"};
    const int center = 2; // index of label "3"
    const int leaves[3] = {0, 1, 3};
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < 3; ++k) {
        if (orientation[k] == 'i')
            pairs.emplace_back(leaves[k], center);
        else
            pairs.emplace_back(center, leaves[k]);
    }
    return poset_from_index_pairs(std::move(labels), pairs);
}

Poset make_cml(int m, int l) {
    if (m < 1 || l < 1) throw SchemaError("C(m,l) needs m, l >= 1");
    std::vector<std::string> labels;
    labels.push_back("0h");
    for (int i = 1; i <= m; ++i) labels.push_back(std::to_string(i));
    for (int j = 1; j <= l; ++j) labels.push_back(std::to_string(j) + "'");
    labels.push_back("1h");
    const int top = m + l + 1;
    std::vector<std::pair<int, int>> pairs;
    pairs.emplace_back(0, 1);
    for (int i = 1; i < m; ++i) pairs.emplace_back(i, i + 1);
    pairs.emplace_back(m, top);
    pairs.emplace_back(0, m + 1);
    for (int j = 1; j < l; ++j) pairs.emplace_back(m + j, m + j + 1);
    pairs.emplace_back(m + l, top);
    return poset_from_index_pairs(std::move(labels), pairs);
}

Poset make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1 || rows > 9 || cols > 9)
        throw SchemaError("grid sizes must be in 1..9");
    std::vector<std::string> labels;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) labels.push_back(std::to_string(i) + std::to_string(j));
    auto id = [&](int i, int j) { return i * cols + j; };
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (i + 1 < rows) pairs.emplace_back(id(i, j), id(i + 1, j));
            if (j + 1 < cols) pairs.emplace_back(id(i, j), id(i, j + 1));
        }
    return poset_from_index_pairs(std::move(labels), pairs);
}

Poset make_ladder(int m, const std::string& orientation) {
    if (m < 1) throw SchemaError("ladder needs m >= 1");
    check_word(orientation, static_cast<std::size_t>(m - 1), "rl", "ladder");
    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i) labels.push_back("b" + std::to_string(i));
    for (int i = 1; i <= m; ++i) labels.push_back("t" + std::to_string(i));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i) pairs.emplace_back(i, m + i);
    for (int i = 0; i + 1 < m; ++i) {
        if (orientation[i] == 'r') {
            pairs.emplace_back(i, i + 1);
            pairs.emplace_back(m + i, m + i + 1);
        } else {
            pairs.emplace_back(i + 1, i);
            pairs.emplace_back(m + i + 1, m + i);
        }
    }
    return poset_from_index_pairs(std::move(labels), pairs);
}

Poset make_igusa_p() {
    std::vector<std::string> labels{"bot", "l1", "r1", "mid", "l2", "r2", "top"};
    std::vector<std::pair<std::string, std::string>> pairs{
        {"bot", "l1"}, {"bot", "r1"}, {"l1", "mid"}, {"r1", "mid"},
        {"mid", "l2"}, {"mid", "r2"}, {"l2", "top"}, {"r2", "top"}};
    return poset_from_relations(labels, pairs);
}

Poset make_igusa_p_prime() {
    std::vector<std::string> labels{"bot", "l1", "r1", "l2", "r2", "top"};
    std::vector<std::pair<std::string, std::string>> pairs{
        {"bot", "l1"}, {"bot", "r1"}, {"l1", "l2"}, {"l1", "r2"},
        {"r1", "l2"}, {"r1", "r2"}, {"l2", "top"}, {"r2", "top"}};
    return poset_from_relations(labels, pairs);
}

std::string equioriented_word(int n) { return std::string(n > 0 ? n - 1 : 0, 'r'); }

std::string zigzag_word(int n) {
    std::string w;
    for (int i = 0; i + 1 < n; ++i) w.push_back(i % 2 == 0 ? 'r' : 'l');
    return w;
}

} // namespace intres
