#include <gtest/gtest.h>

#include "baire/game.hpp"
#include "baire/random.hpp"
#include "helpers.hpp"

using namespace baire;
using namespace baire::testing;

namespace {

Arena self_loop(PlayerTag who, unsigned prio) {
    Arena ar;
    ar.add(who, 0);
    ar.succ[0] = {0};
    ar.priority = std::vector<unsigned>{prio};
    return ar;
}

// Every position is won by exactly the player whose strategy is verified
// winning from it.
void expect_certified(const Arena& ar, const GameSolution& sol) {
    for (Position p = 0; p < ar.size(); ++p) {
        PlayerTag w = sol.winner[p];
        EXPECT_TRUE(check_strategy(ar, sol.strategy(w), w, 1u << 22, p)) << "position " << p;
    }
}

}  // namespace

TEST(Parity, SelfLoops) {
    for (auto who : {PlayerTag::Exists, PlayerTag::Forall}) {
        EXPECT_EQ(solve_parity(self_loop(who, 2)).winner[0], PlayerTag::Exists);
        EXPECT_EQ(solve_parity(self_loop(who, 1)).winner[0], PlayerTag::Forall);
    }
}

TEST(Parity, ExistsCanStayOnEvenPriority) {
    Arena ar;
    ar.add(PlayerTag::Exists);
    ar.add(PlayerTag::Exists);
    ar.succ[0] = {1};
    ar.succ[1] = {0, 1};
    ar.priority = std::vector<unsigned>{1, 2};
    auto sol = solve_parity(ar);
    EXPECT_EQ(sol.winner[0], PlayerTag::Exists);
    EXPECT_EQ(sol.winner[1], PlayerTag::Exists);
    expect_certified(ar, sol);
}

TEST(Muller, SelfLoops) {
    Arena ar;
    ar.add(PlayerTag::Forall, 0);
    ar.succ[0] = {0};
    ar.muller = MullerCondition::explicit_family({{0}});
    EXPECT_EQ(solve_muller(ar).winner[0], PlayerTag::Exists);
    ar.muller = MullerCondition::explicit_family({});
    EXPECT_EQ(solve_muller(ar).winner[0], PlayerTag::Forall);
}

namespace {

// Hub h (owned by Exists) may go to p1 or p2, both return to h. The
// condition asks for both p1 and p2 infinitely often.
Arena visit_both() {
    Arena ar;
    ar.add(PlayerTag::Exists, -1, "h");
    ar.add(PlayerTag::Exists, 1, "p1");
    ar.add(PlayerTag::Exists, 2, "p2");
    ar.succ[0] = {1, 2};
    ar.succ[1] = {0};
    ar.succ[2] = {0};
    ar.muller = MullerCondition::explicit_family({{1, 2}});
    return ar;
}

}  // namespace

TEST(Muller, VisitBothNeedsMemory) {
    auto ar = visit_both();
    auto sol = solve_muller(ar);
    EXPECT_EQ(sol.winner[0], PlayerTag::Exists);
    expect_certified(ar, sol);
    // Neither positional strategy wins.
    for (Position to : {1u, 2u}) {
        Strategy s;
        s.set_choice(0, 0, to);
        s.set_choice(0, 1, 0);
        s.set_choice(0, 2, 0);
        EXPECT_FALSE(check_strategy(ar, s, PlayerTag::Exists, 1000));
    }
}

TEST(CheckStrategy, HandBuiltTwoMemoryStrategy) {
    auto ar = visit_both();
    Strategy s;
    s.memory_size = 2;
    s.update_fn = [](std::uint32_t m, Position p) -> std::uint32_t {
        if (p == 1) return 1;
        if (p == 2) return 0;
        return m;
    };
    s.set_choice(0, 0, 1);
    s.set_choice(1, 0, 2);
    for (std::uint32_t m = 0; m < 2; ++m) {
        s.set_choice(m, 1, 0);
        s.set_choice(m, 2, 0);
    }
    EXPECT_TRUE(check_strategy(ar, s, PlayerTag::Exists, 1000));
}

TEST(CheckStrategy, OddSelfLoopLoses) {
    Arena ar;
    ar.add(PlayerTag::Exists);
    ar.add(PlayerTag::Exists);
    ar.succ[0] = {0, 1};
    ar.succ[1] = {1};
    ar.priority = std::vector<unsigned>{1, 2};
    Strategy s;
    s.set_choice(0, 0, 0);
    s.set_choice(0, 1, 1);
    EXPECT_FALSE(check_strategy(ar, s, PlayerTag::Exists, 100));
    s.set_choice(0, 0, 2);
    EXPECT_THROW(check_strategy(ar, s, PlayerTag::Exists, 100), Error);
}

TEST(Solvers, CertifiedOnRandomArenas) {
    Rng rng(1);
    for (int iter = 0; iter < 200; ++iter) {
        auto ar = random_arena(rng, 8, iter % 2 == 0);
        auto sol = solve(ar);
        ASSERT_EQ(sol.winner.size(), ar.size());
        expect_certified(ar, sol);
    }
}

TEST(Solvers, DualitySwapsWinners) {
    Rng rng(2);
    for (int iter = 0; iter < 100; ++iter) {
        auto ar = random_arena(rng, 8, iter % 2 == 1);
        auto a = solve(ar), b = solve(dual(ar));
        for (Position p = 0; p < ar.size(); ++p) ASSERT_EQ(a.winner[p], opponent(b.winner[p]));
    }
}

TEST(AcceptanceGame, DeterministicEmbeddingAgreesWithRuns) {
    Rng rng(9);
    auto lassos = all_lassos(2, 5);
    for (int iter = 0; iter < 20; ++iter) {
        auto d = random_detmuller(rng, bits1(), 4);
        auto a = to_alternating(d);
        for (const auto& w : lassos) ASSERT_EQ(lasso_membership(a, w), lasso_membership(d, w));
    }
}

namespace {

// State 0 moves to the accepting sink 1 and the rejecting sink 2 under `op`.
AltMuller sinks(Expr::Kind op) {
    AltMuller a;
    a.alphabet = bits1();
    a.states = 3;
    auto top = Expr::make(op, {Expr::make_atom(1), Expr::make_atom(2)});
    a.delta = {{top, top}, {Expr::make_atom(1), Expr::make_atom(1)}, {Expr::make_atom(2), Expr::make_atom(2)}};
    a.condition = MullerCondition::explicit_family({{1}});
    return a;
}

}  // namespace

TEST(AcceptanceGame, OrAndSinks) {
    auto w = lasso({}, {0});
    EXPECT_TRUE(lasso_membership(sinks(Expr::Kind::Or), w));
    EXPECT_FALSE(lasso_membership(sinks(Expr::Kind::And), w));
    auto arena = acceptance_arena_word(sinks(Expr::Kind::Or), w);
    EXPECT_EQ(arena.arena.owner[arena.arena.succ[arena.arena.initial][0]], PlayerTag::Exists);
}

TEST(AcceptanceGame, NbaEmbeddingAgrees) {
    Rng rng(4);
    auto lassos = all_lassos(2, 5);
    for (int iter = 0; iter < 20; ++iter) {
        auto n = random_nba(rng, bits1(), 4);
        auto a = to_alternating(n);
        for (const auto& w : lassos) ASSERT_EQ(lasso_membership(a, w), lasso_membership_nba(n, w));
    }
}
