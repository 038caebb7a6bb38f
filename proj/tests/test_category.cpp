#include <gtest/gtest.h>

#include "baire/category.hpp"
#include "baire/measure.hpp"
#include "baire/random.hpp"
#include "helpers.hpp"

using namespace baire;
using namespace baire::testing;

TEST(BuildB, UnaryParameterUnfolding) {
    auto a = universal_det();
    auto b = build_b_word(a, std::vector<std::string>{"X"});
    EXPECT_EQ(b.states, 2u);
    EXPECT_EQ(b.initial, b_state(0, PlayerTag::Forall));
    const auto& e = b.delta[b_state(0, PlayerTag::Exists)][0];
    EXPECT_EQ(e.kind, Expr::Kind::Or);
    EXPECT_EQ(e.kids.size(), 4u);
    const auto& f = b.delta[b_state(0, PlayerTag::Forall)][0];
    EXPECT_EQ(f.kind, Expr::Kind::And);
    EXPECT_EQ(f.kids.size(), 4u);
}

TEST(BuildB, AcceptanceFamily) {
    auto a = last_letter();
    a.condition = MullerCondition::explicit_family({{0, 1}});
    auto b = build_b_word(a, std::vector<std::string>{"X"});
    const StateId e0 = b_state(0, PlayerTag::Exists), a0 = b_state(0, PlayerTag::Forall);
    const StateId e1 = b_state(1, PlayerTag::Exists), a1 = b_state(1, PlayerTag::Forall);
    EXPECT_TRUE(b.condition.accepts({a0}));
    EXPECT_TRUE(b.condition.accepts({a0, a1}));
    EXPECT_FALSE(b.condition.accepts({e0}));
    EXPECT_FALSE(b.condition.accepts({e0, e1}));
    EXPECT_TRUE(b.condition.accepts({e0, a1}));
    EXPECT_FALSE(b.condition.accepts({e0, a0}));
}

TEST(BuildB, SizeIsTwiceInput) {
    Rng rng(31);
    auto ab = Alphabet::tracks({"X", "Y"});
    for (int i = 0; i < 20; ++i) {
        auto a = random_detmuller(rng, ab, 5);
        EXPECT_EQ(build_b_word(a, std::vector<std::string>{"Y"}).states, 2 * a.states);
    }
}

TEST(DecideComeager, Examples) {
    EXPECT_TRUE(decide_comeager(universal_det()).comeager);
    EXPECT_FALSE(decide_comeager(only_zeros()).comeager);
    EXPECT_TRUE(decide_comeager(inf_ones()).comeager);
    EXPECT_FALSE(decide_comeager(fin_ones()).comeager);
    EXPECT_FALSE(decide_comeager(first_one()).comeager);
}

TEST(DecideComeager, AgreesWithMeasure) {
    Rng rng(77);
    for (int i = 0; i < 60; ++i) {
        auto a = random_detmuller(rng, bits1(), 5);
        auto r = staiger_crosscheck(a);
        ASSERT_TRUE(r.agree()) << i;
    }
}

TEST(PlayerSwitch, InfiniteSwitchesSeeBothTags) {
    // In the B acceptance game every state position carries its tag; a cycle
    // through positions whose tags differ contains both tags.
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        auto a = random_detmuller(rng, bits1(), 3);
        auto r = decide_comeager(a);
        const auto& info = r.game.info;
        for (Position p = 0; p < r.game.arena.size(); ++p) {
            if (!info[p].is_state) continue;
            for (auto s : r.game.arena.succ[p]) EXPECT_FALSE(info[s].is_state);
        }
    }
}

namespace {

AltMuller nondeterministic_only() {
    AltMuller a = to_alternating(fin_ones_nba());
    return a;
}

AltMuller universal_two_state() {
    // Both states read every letter conjunctively; the run must see state 1
    // infinitely often on every branch.
    AltMuller a;
    a.alphabet = bits1();
    a.states = 2;
    a.delta = {{parse_expr("q0 & q1"), parse_expr("q1")}, {parse_expr("q0"), parse_expr("q1 & q0")}};
    a.condition = MullerCondition::explicit_family({{1}, {0, 1}});
    return a;
}

void expect_dealternation_agrees(const AltMuller& b, std::size_t max_len) {
    auto n = dealternate(b);
    for (const auto& w : all_lassos(b.alphabet.size(), max_len))
        ASSERT_EQ(lasso_membership_nba(n, w), lasso_membership(b, w));
}

}  // namespace

TEST(Dealternate, AlternationFree) { expect_dealternation_agrees(nondeterministic_only(), 5); }

TEST(Dealternate, PurelyUniversal) { expect_dealternation_agrees(universal_two_state(), 5); }

TEST(Dealternate, BOfTwoStateAutomaton) {
    auto b = build_b_word(inf_ones(Alphabet::tracks({"X", "Y"})), std::vector<std::string>{"Y"});
    expect_dealternation_agrees(b, 5);
}

TEST(Dealternate, RandomAlternating) {
    Rng rng(123);
    for (int i = 0; i < 100; ++i) expect_dealternation_agrees(random_altmuller(rng, bits1(), 1 + i % 4), 5);
}

TEST(EliminateCategory, Examples) {
    auto xy = Alphabet::tracks({"X", "Y"});
    // X = Y pointwise: a sink records the first mismatch.
    DetMuller eq;
    eq.alphabet = xy;
    eq.states = 2;
    eq.delta = {{0, 1, 1, 0}, {1, 1, 1, 1}};
    eq.condition = MullerCondition::explicit_family({{0}});
    auto n = eliminate_category(eq, {"Y"});
    for (const auto& w : all_lassos(2, 4)) EXPECT_FALSE(lasso_membership_nba(n, w));
    auto full = eliminate_category(universal_det(xy), {"Y"});
    for (const auto& w : all_lassos(2, 4)) EXPECT_TRUE(lasso_membership_nba(full, w));
    // Y has infinitely many ones, independent of X.
    auto infy = last_letter(xy);
    for (LetterId l = 0; l < 4; ++l)
        for (StateId q = 0; q < 2; ++q) infy.delta[q][l] = xy.bit(l, 1) ? 1 : 0;
    infy.condition = MullerCondition::explicit_family({{1}, {0, 1}});
    auto ny = eliminate_category(infy, {"Y"});
    for (const auto& w : all_lassos(2, 4)) EXPECT_TRUE(lasso_membership_nba(ny, w));
}

TEST(EliminateCategory, SectionOracle) {
    Rng rng(99);
    auto xy = Alphabet::tracks({"X", "Y"});
    auto split = split_tracks(xy, 1);
    for (int i = 0; i < 100; ++i) {
        auto a = random_detmuller(rng, xy, 1 + i % 4);
        auto n = eliminate_category(a, {"Y"});
        for (int j = 0; j < 10; ++j) {
            auto w = random_lasso(rng, 2, 5);
            bool expect = decide_measure_one(section_automaton(a, split, w));
            ASSERT_EQ(lasso_membership_nba(n, w), expect) << i << "/" << j;
        }
    }
}
