#include <gtest/gtest.h>

#include <algorithm>

#include "baire/determinize.hpp"
#include "baire/nba_ops.hpp"
#include "baire/random.hpp"
#include "helpers.hpp"

using namespace baire;
using namespace baire::testing;

TEST(Determinize, DeterministicShapedInput) {
    auto n = inf_ones_nba();
    auto d = determinize(n);
    for (const auto& w : all_lassos(2, 6)) EXPECT_EQ(lasso_membership(d, w), lasso_membership_nba(n, w));
    EXPECT_TRUE(lasso_membership(d, lasso({}, {1, 0})));
}

TEST(Determinize, FinitelyManyOnes) {
    auto d = determinize(fin_ones_nba());
    EXPECT_FALSE(lasso_membership(d, lasso({}, {1})));
    EXPECT_TRUE(lasso_membership(d, lasso({1, 1}, {0})));
    for (const auto& w : all_lassos(2, 6)) EXPECT_EQ(lasso_membership(d, w), lasso_membership_nba(fin_ones_nba(), w));
}

TEST(Determinize, RandomBattery) {
    Rng rng(42);
    std::vector<Alphabet> alphabets{Alphabet::tracks({"X"}), Alphabet::symbols({"a", "b", "c"})};
    for (int iter = 0; iter < 100; ++iter) {
        const auto& a = alphabets[iter % 2];
        auto lassos = all_lassos(a.size(), a.size() == 2 ? 6 : 4);
        auto n = random_nba(rng, a, 5);
        auto d = determinize(n);
        for (const auto& w : lassos) ASSERT_EQ(lasso_membership(d, w), lasso_membership_nba(n, w)) << iter;
    }
}

TEST(Determinize, BudgetIsEnforced) {
    Rng rng(8);
    auto n = random_nba(rng, Alphabet::symbols({"a", "b", "c"}), 5);
    EXPECT_THROW(determinize(n, 1), BudgetError);
}

TEST(Complement, EmptyBecomesUniversal) {
    auto c = complement_nba(empty_nba(bits1()));
    for (const auto& w : all_lassos(2, 5)) EXPECT_TRUE(lasso_membership_nba(c, w));
}

TEST(Complement, InfToFin) {
    auto c = complement_nba(inf_ones_nba());
    for (const auto& w : all_lassos(2, 6)) EXPECT_EQ(lasso_membership_nba(c, w), lasso_membership_nba(fin_ones_nba(), w));
}

TEST(Complement, RandomBatteryAndInvolution) {
    Rng rng(43);
    auto lassos = all_lassos(2, 6);
    for (int iter = 0; iter < 60; ++iter) {
        auto n = random_nba(rng, bits1(), 4);
        auto c = complement_nba(n);
        auto cc = complement_nba(c);
        for (const auto& w : lassos) {
            bool in = lasso_membership_nba(n, w);
            ASSERT_NE(lasso_membership_nba(c, w), in) << iter;
            ASSERT_EQ(lasso_membership_nba(cc, w), in) << iter;
        }
    }
}

TEST(DpaToDetMuller, FamiliesByDefinition) {
    DPA d;
    d.alphabet = bits1();
    d.states = 1;
    d.delta = {{0, 0}};
    d.priority = {2};
    EXPECT_EQ(dpa_to_detmuller(d).condition.enumerate(1), (std::vector<StateSet>{{0}}));
    d.priority = {1};
    EXPECT_TRUE(dpa_to_detmuller(d).condition.enumerate(1).empty());
    d.states = 2;
    d.delta = {{0, 1}, {0, 1}};
    d.priority = {1, 2};
    auto fam = dpa_to_detmuller(d).condition.enumerate(2);
    std::sort(fam.begin(), fam.end());
    EXPECT_EQ(fam, (std::vector<StateSet>{{0, 1}, {1}}));
}

TEST(DpaToNba, PreservesLanguage) {
    Rng rng(44);
    auto lassos = all_lassos(2, 5);
    for (int iter = 0; iter < 40; ++iter) {
        DPA d;
        d.alphabet = bits1();
        d.states = uniform(rng, 1, 4);
        d.delta.assign(d.states, std::vector<StateId>(2));
        for (auto& row : d.delta)
            for (auto& q : row) q = static_cast<StateId>(uniform(rng, 0, d.states - 1));
        for (std::size_t q = 0; q < d.states; ++q) d.priority.push_back(static_cast<unsigned>(uniform(rng, 0, 5)));
        auto n = dpa_to_nba(d);
        for (const auto& w : lassos) ASSERT_EQ(lasso_membership_nba(n, w), lasso_membership(d, w));
    }
}

TEST(NbaOps, UnionIntersectionProjection) {
    Rng rng(45);
    auto lassos = all_lassos(2, 5);
    for (int iter = 0; iter < 30; ++iter) {
        auto a = random_nba(rng, bits1(), 3), b = random_nba(rng, bits1(), 3);
        auto u = nba_union(a, b), i = nba_intersection(a, b);
        for (const auto& w : lassos) {
            bool x = lasso_membership_nba(a, w), y = lasso_membership_nba(b, w);
            ASSERT_EQ(lasso_membership_nba(u, w), x || y);
            ASSERT_EQ(lasso_membership_nba(i, w), x && y);
        }
        auto t = trim(a);
        for (const auto& w : lassos) ASSERT_EQ(lasso_membership_nba(t, w), lasso_membership_nba(a, w));
        auto found = find_accepted(a);
        if (found) EXPECT_TRUE(lasso_membership_nba(a, *found));
        else
            for (const auto& w : lassos) EXPECT_FALSE(lasso_membership_nba(a, w));
    }
}

TEST(NbaOps, CylindrifyThenProject) {
    auto n = inf_ones_nba();
    auto xy = Alphabet::tracks({"X", "Y"});
    auto c = cylindrify(n, xy);
    EXPECT_TRUE(lasso_membership_nba(c, lasso({}, {2})));
    EXPECT_FALSE(lasso_membership_nba(c, lasso({}, {1})));
    auto p = project(c, Alphabet::tracks({"Y"}));
    for (const auto& w : all_lassos(2, 4)) EXPECT_TRUE(lasso_membership_nba(p, w));
}

TEST(MinimizeDpa, PreservesLanguageAndShrinks) {
    Rng rng(77);
    for (int iter = 0; iter < 100; ++iter) {
        auto n = random_nba(rng, bits1(), 4);
        auto d = determinize(n);
        auto m = minimize_dpa(d);
        EXPECT_LE(m.states, d.states);
        for (const auto& w : all_lassos(2, 6)) ASSERT_EQ(lasso_membership(m, w), lasso_membership(d, w)) << iter;
    }
    auto reach = minimize_dpa(determinize(cylindrify(inf_ones_nba(), Alphabet::tracks({"X", "Y"}))));
    EXPECT_EQ(reach.states, 2u);
}

TEST(Dual, ComplementsAlternating) {
    Rng rng(78);
    for (int iter = 0; iter < 60; ++iter) {
        auto a = random_altmuller(rng, bits1(), 3);
        auto d = dual(a);
        for (const auto& w : all_lassos(2, 4)) ASSERT_NE(lasso_membership(a, w), lasso_membership(d, w)) << iter;
    }
}
