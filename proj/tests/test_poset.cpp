#include "doctest.h"

#include "intres/poset.hpp"
#include "oracles.hpp"

using namespace intres;

namespace {

Poset diamond() {
    return poset_from_relations({"0h", "a", "b", "1h"},
                                {{"0h", "a"}, {"0h", "b"}, {"a", "1h"}, {"b", "1h"}});
}

std::vector<int> idx(const Poset& p, const std::vector<std::string>& labels) {
    std::vector<int> out;
    for (const auto& l : labels) out.push_back(p.index_of(l));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("construction closes relations and reduces to covers") {
    Poset single = poset_from_relations({"a"}, {});
    CHECK(single.size() == 1);
    CHECK(single.hasse().empty());

    Poset chain = poset_from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(chain.hasse().size() == 2); // a->c reduced away
    CHECK(chain.leq(0, 2));

    CHECK_THROWS_AS(poset_from_relations({"a", "b"}, {{"a", "b"}, {"b", "a"}}), ValidationError);
    CHECK_THROWS_AS(poset_from_relations({"a", "a"}, {}), SchemaError);
    CHECK_THROWS_AS(poset_from_relations({"a"}, {{"a", "z"}}), SchemaError);
}

TEST_CASE("is_interval on the stated examples") {
    Poset g = make_grid(2, 2); // 00 < 01, 00 < 10, 01 < 11, 10 < 11
    CHECK_FALSE(is_interval(g, idx(g, {"00", "01", "11"}))); // 10 lies strictly between
    CHECK(is_interval(g, {0}));
    Poset chain = make_a_n(3, "rr");
    CHECK_FALSE(is_interval(chain, {0, 2}));
}

TEST_CASE("interval enumeration matches the power-set oracle") {
    std::vector<Poset> posets = {make_a_n(3, "rr"),   make_grid(2, 2), make_cml(2, 1),
                                 make_d4("ioo"),      make_grid(2, 3), make_igusa_p(),
                                 make_ladder(3, "rl"), make_grid(3, 3), make_cml(5, 3),
                                 make_ladder(5, "rlrl"), make_grid(2, 6)};
    Rng rng(42);
    for (int i = 0; i < 25; ++i) posets.push_back(random_poset(rng, 1, 6, false));
    for (int i = 0; i < 8; ++i) posets.push_back(random_poset(rng, 7, 9, false));
    for (const Poset& p : posets) {
        auto expected = oracle::enumerate_intervals_bruteforce(p);
        auto got = enumerate_intervals(p);
        REQUIRE(got.size() == expected.size());
        for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k].members == expected[k]);
        for (const Interval& I : got) CHECK(is_interval(p, I.members));
    }
}

TEST_CASE("interval counts for the named families") {
    CHECK(enumerate_intervals(make_a_n(3, "rr")).size() == 6); // n(n+1)/2
    for (int n = 1; n <= 7; ++n)
        CHECK(enumerate_intervals(make_a_n(n, equioriented_word(n))).size() ==
              static_cast<std::size_t>(n * (n + 1) / 2));
    CHECK(enumerate_intervals(make_grid(2, 2)).size() == 11);
    CHECK(enumerate_intervals(make_cml(2, 1)).size() == 17);
}

TEST_CASE("convex hull") {
    Poset d = diamond();
    CHECK(convex_hull(d, idx(d, {"0h", "1h"})) == std::vector<int>{0, 1, 2, 3});
    Poset chain = make_a_n(3, "rr");
    CHECK(convex_hull(chain, {0, 2}) == std::vector<int>{0, 1, 2});

    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Poset p = random_poset(rng, 1, 6, false);
        std::vector<int> s = random_subset(rng, p.size());
        std::vector<int> h = convex_hull(p, s);
        CHECK(oracle::convex_by_definition(p, h));
        CHECK(std::includes(h.begin(), h.end(), s.begin(), s.end())); // extensive
        CHECK(convex_hull(p, h) == h);                                // idempotent
        std::vector<int> t = h;                                       // s subset of t
        std::vector<int> ht = convex_hull(p, t);
        CHECK(std::includes(ht.begin(), ht.end(), h.begin(), h.end())); // monotone
        // hull of an interval is itself
        for (const Interval& I : enumerate_intervals(p))
            if (I.members.size() <= 3) CHECK(convex_hull(p, I.members) == I.members);
    }
}

TEST_CASE("hull of a subposet interval meets the subposet in the interval") {
    Rng rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        Poset p = random_poset(rng, 2, 6, false);
        SubposetEmbedding emb = full_subposet(p, random_subset(rng, p.size()));
        for (const Interval& I : enumerate_intervals(emb.sub)) {
            std::vector<int> image;
            for (int a : I.members) image.push_back(emb.map[a]);
            std::sort(image.begin(), image.end());
            std::vector<int> hull = convex_hull(p, image);
            CHECK(is_interval(p, hull));
            std::vector<int> back; // hull ∩ image(sub)
            for (int x : hull)
                if (std::find(emb.map.begin(), emb.map.end(), x) != emb.map.end())
                    back.push_back(x);
            CHECK(back == image);
        }
    }
}

TEST_CASE("full subposets") {
    Poset d = diamond();
    SubposetEmbedding all = full_subposet(d, {0, 1, 2, 3});
    CHECK(all.sub == d);

    SubposetEmbedding anti = full_subposet(d, idx(d, {"a", "b"}));
    CHECK(anti.sub.hasse().empty()); // a, b incomparable

    Poset igusa = make_igusa_p();
    std::vector<int> keep;
    for (int x = 0; x < igusa.size(); ++x)
        if (igusa.label(x) != "mid") keep.push_back(x);
    SubposetEmbedding pruned = full_subposet(igusa, keep);
    CHECK(unlabeled_isomorphic(pruned.sub, make_igusa_p_prime()));
}

TEST_CASE("make_embedding rejects non-full inclusions") {
    // antichain {1,3} mapped onto a chain is order-preserving but not full
    Poset anti = poset_from_relations({"1", "3"}, {});
    Poset chain = make_a_n(3, "rr");
    CHECK_THROWS_AS(make_embedding(anti, chain, {0, 2}), ValidationError);
    // the honest full subposet goes through
    SubposetEmbedding ok = make_embedding(full_subposet(chain, {0, 2}).sub, chain, {0, 2});
    CHECK(ok.sub.leq(0, 1));
}

TEST_CASE("families match their pictures") {
    Poset a3 = make_a_n(3, "rr");
    CHECK(a3.hasse() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    CHECK(unlabeled_isomorphic(make_cml(1, 1), make_grid(2, 2)));

    Poset d4 = make_d4("ioo"); // 1 -> 3, 3 -> 2, 3 -> 4
    int c = d4.index_of("3");
    CHECK(d4.less(d4.index_of("1"), c));
    CHECK(d4.less(c, d4.index_of("2")));
    CHECK(d4.less(c, d4.index_of("4")));

    Poset cml = make_cml(2, 1);
    CHECK(cml.size() == 5);
    CHECK(cml.hasse_up(cml.index_of("0h")).size() == 2);
    CHECK(cml.hasse_down(cml.index_of("1h")).size() == 2);

    CHECK(make_ladder(3, "rr").size() == 6);
    CHECK(make_igusa_p().size() == 7);
    CHECK(make_igusa_p_prime().size() == 6);

    CHECK_THROWS_AS(make_a_n(3, "r"), SchemaError);   // wrong word length
    CHECK_THROWS_AS(make_d4("xyz"), SchemaError);     // bad alphabet
    CHECK_THROWS_AS(make_cml(0, 1), SchemaError);
}

TEST_CASE("unlabeled isomorphism is a real test") {
    CHECK(unlabeled_isomorphic(make_a_n(3, "rr"), make_a_n(3, "ll")));
    CHECK_FALSE(unlabeled_isomorphic(make_a_n(4, "rrr"), make_a_n(4, "rlr")));
    CHECK_FALSE(unlabeled_isomorphic(make_a_n(3, "rr"), make_a_n(4, "rrr")));
}
