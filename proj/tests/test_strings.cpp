#include "doctest.h"

#include <set>

#include "intres/sampling.hpp"
#include "intres/strings.hpp"

using namespace intres;

TEST_CASE("classifier on the named shapes") {
    SUBCASE("zigzag A_5") {
        ShapeVerdict v = classify_zero_gldim(make_a_n(5, zigzag_word(5)));
        CHECK(v.accepted);
        REQUIRE(v.components.size() == 1);
        CHECK(v.components[0].kind == ComponentShape::Kind::A);
        CHECK(v.components[0].n == 5);
    }
    SUBCASE("the square grid is C(1,1)") {
        ShapeVerdict v = classify_zero_gldim(make_grid(2, 2));
        CHECK(v.accepted);
        REQUIRE(v.components.size() == 1);
        CHECK(v.components[0].kind == ComponentShape::Kind::C);
        CHECK(v.components[0].m == 1);
        CHECK(v.components[0].l == 1);
    }
    SUBCASE("every D_4 orientation is rejected with a degree witness") {
        for (int w = 0; w < 8; ++w) {
            std::string word;
            for (int k = 0; k < 3; ++k) word.push_back((w >> k) & 1 ? 'o' : 'i');
            ShapeVerdict v = classify_zero_gldim(make_d4(word));
            CHECK_FALSE(v.accepted);
            CHECK(v.witness.find("'3'") != std::string::npos);
            CHECK(v.witness.find("degree 3") != std::string::npos);
        }
    }
    SUBCASE("C(m,l) shapes round-trip") {
        for (int m = 1; m <= 3; ++m)
            for (int l = 1; l <= m; ++l) {
                ShapeVerdict v = classify_zero_gldim(make_cml(m, l));
                CHECK(v.accepted);
                REQUIRE(v.components.size() == 1);
                CHECK(v.components[0].m == m);
                CHECK(v.components[0].l == l);
            }
    }
    SUBCASE("a single point is A_1") {
        ShapeVerdict v = classify_zero_gldim(poset_from_relations({"x"}, {}));
        CHECK(v.accepted);
        CHECK(v.components[0].n == 1);
    }
    SUBCASE("disconnected posets accept iff all components accept") {
        Poset two_chains = poset_from_relations({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
        ShapeVerdict v = classify_zero_gldim(two_chains);
        CHECK(v.accepted);
        CHECK(v.components.size() == 2);

        Poset chain_plus_d4 = poset_from_relations(
            {"a", "b", "1", "2", "3", "4"},
            {{"a", "b"}, {"1", "3"}, {"3", "2"}, {"3", "4"}});
        CHECK_FALSE(classify_zero_gldim(chain_plus_d4).accepted);
    }
}

TEST_CASE("string enumeration for C(1,1)") {
    CmlQuiver q = cml_quiver(1, 1);
    std::vector<StringWord> words = enumerate_strings(q);
    CHECK(words.size() == 10);
    int trivial = 0;
    for (const auto& w : words)
        if (w.trivial()) ++trivial;
    CHECK(trivial == 4);
    for (const auto& w : words) CHECK(is_valid_string(q, w));
}

TEST_CASE("string counts and family sizes") {
    SUBCASE("C(2,1) has 16 strings, one fewer than intervals") {
        CmlQuiver q = cml_quiver(2, 1);
        CHECK(enumerate_strings(q).size() == 16);
        CHECK(enumerate_intervals(q.poset).size() == 17);
    }
    SUBCASE("the alpha-segment family has size C(m+2,2) - 1") {
        for (int m = 1; m <= 5; ++m)
            for (int l = 1; l <= 3; ++l) {
                CmlQuiver q = cml_quiver(m, l);
                int alpha_segments = 0;
                for (const StringWord& w : enumerate_strings(q)) {
                    if (w.trivial()) continue;
                    bool all_alpha = true, none_inverse = true;
                    for (const auto& s : w.letters) {
                        if (s.beta) all_alpha = false;
                        if (s.inverse) none_inverse = false;
                    }
                    if (all_alpha && none_inverse) ++alpha_segments;
                }
                CHECK(alpha_segments == (m + 2) * (m + 1) / 2 - 1);
            }
    }
}

TEST_CASE("words stay clear of the zero relations") {
    CmlQuiver q = cml_quiver(2, 2);
    StringWord full_alpha;
    for (int k = 0; k <= 2; ++k) full_alpha.letters.push_back({false, k, false});
    CHECK_FALSE(is_valid_string(q, full_alpha));
    StringWord full_alpha_inv = full_alpha.inverse();
    CHECK_FALSE(is_valid_string(q, full_alpha_inv));
    StringWord backtrack;
    backtrack.letters.push_back({false, 0, false});
    backtrack.letters.push_back({false, 0, true});
    CHECK_FALSE(is_valid_string(q, backtrack));
}

TEST_CASE("string supports are a bijection onto the proper intervals") {
    for (int m = 1; m <= 4; ++m)
        for (int l = 1; m + l <= 6; ++l) {
            CmlQuiver q = cml_quiver(m, l);
            std::vector<StringWord> words = enumerate_strings(q);
            std::set<std::vector<int>> supports;
            for (const StringWord& w : words) {
                Interval I = string_to_interval(q, w);
                CHECK(supports.insert(I.members).second); // injective
                CHECK(static_cast<int>(I.members.size()) < q.poset.size()); // never the full one
            }
            std::vector<Interval> all = enumerate_intervals(q.poset);
            CHECK(words.size() + 1 == all.size());
            CHECK(static_cast<long long>(all.size()) == count_indecomposables(m, l));
            for (const Interval& I : all)
                if (static_cast<int>(I.members.size()) < q.poset.size())
                    CHECK(supports.count(I.members) == 1); // surjective
        }
}

TEST_CASE("specific string supports") {
    CmlQuiver q = cml_quiver(3, 2);
    // trivial string at the bottom
    StringWord triv;
    triv.base = q.v_bottom();
    CHECK(string_to_interval(q, triv).members == std::vector<int>{0});
    // valley word with i = j = 0 supports {0h, 1, 1'}
    StringWord valley;
    valley.letters.push_back({true, 0, true});
    valley.letters.push_back({false, 0, false});
    CHECK(string_to_interval(q, valley.representative()).members ==
          std::vector<int>{q.v_bottom(), q.v_spine(1), q.v_primed(1)});
}

TEST_CASE("count formula") {
    CHECK(count_indecomposables(1, 1) == 11);
    CHECK(count_indecomposables(2, 1) == 17);
    CHECK(count_indecomposables(3, 2) == 34);
    CHECK(count_indecomposables(4, 4) == 71);
    CHECK_THROWS_AS(count_indecomposables(0, 1), SchemaError);
}
