#include <gtest/gtest.h>

#include <sstream>

#include "baire/bm.hpp"
#include "baire/io.hpp"
#include "baire/random.hpp"
#include "helpers.hpp"

using namespace baire;
using namespace baire::testing;

namespace {

struct Session {
    BmRecord record;
    std::string transcript;
};

Session run(const DetMuller& a, PlayerTag human, const std::string& script, std::size_t rounds = 0) {
    std::istringstream in(script);
    std::ostringstream out;
    BmOptions opts;
    opts.rounds = rounds;
    Session s;
    s.record = bm_play(a, human, in, out, opts);
    s.transcript = out.str();
    return s;
}

std::string fixture(const std::string& name) { return read_text_file(std::string(BAIRE_FIXTURE_DIR) + "/" + name); }

std::string random_script(Rng& rng, const char* seat, std::size_t moves) {
    std::string s;
    for (std::size_t i = 0; i < moves; ++i) {
        s += std::string(seat) + ":";
        for (std::size_t k = uniform(rng, 1, 4); k > 0; --k) s += uniform(rng, 0, 1) ? " 1" : " 0";
        s += "\n";
    }
    return s;
}

}  // namespace

TEST(BanachMazur, FullLanguageMachineExistsWins) {
    auto s = run(universal_det(), PlayerTag::Forall, fixture("bm/full-language.txt"));
    EXPECT_TRUE(s.record.comeager);
    EXPECT_EQ(s.record.winner, PlayerTag::Exists);
    EXPECT_EQ(s.record.moves.size(), 6u);
    EXPECT_EQ(s.record.moves.front().player, PlayerTag::Forall);
    Rng rng(5);
    for (int i = 0; i < 20; ++i)
        EXPECT_EQ(run(universal_det(), PlayerTag::Forall, random_script(rng, "A", 5)).record.winner, PlayerTag::Exists);
}

TEST(BanachMazur, OnlyZerosMachineForallWins) {
    auto s = run(only_zeros(), PlayerTag::Exists, fixture("bm/only-zeros.txt"));
    EXPECT_FALSE(s.record.comeager);
    EXPECT_EQ(s.record.winner, PlayerTag::Forall);
    ASSERT_FALSE(s.record.moves.empty());
    EXPECT_TRUE(s.record.moves.front().machine);
    EXPECT_EQ(s.record.moves.front().player, PlayerTag::Forall);
    // The machine cannot lose even when the human only appends 0s.
    EXPECT_EQ(run(only_zeros(), PlayerTag::Exists, "E: 0\nE: 0 0\n").record.winner, PlayerTag::Forall);
}

TEST(BanachMazur, InfOnesMachineAppendsOne) {
    auto a = inf_ones();
    auto s = run(a, PlayerTag::Forall, fixture("bm/inf-ones.txt"));
    EXPECT_TRUE(s.record.comeager);
    EXPECT_EQ(s.record.winner, PlayerTag::Exists);
    EXPECT_TRUE(a.condition.accepts(s.record.inf_set));
    for (const auto& m : s.record.moves)
        if (m.machine) EXPECT_NE(std::find(m.letters.begin(), m.letters.end(), 1u), m.letters.end());
    Rng rng(9);
    for (int i = 0; i < 20; ++i)
        EXPECT_EQ(run(a, PlayerTag::Forall, random_script(rng, "A", 4)).record.winner, PlayerTag::Exists);
}

TEST(BanachMazur, ReplayIsByteIdentical) {
    for (const auto& [a, seat, file] :
         std::vector<std::tuple<DetMuller, PlayerTag, std::string>>{{universal_det(), PlayerTag::Forall, "bm/full-language.txt"},
                                                                     {only_zeros(), PlayerTag::Exists, "bm/only-zeros.txt"},
                                                                     {inf_ones(), PlayerTag::Forall, "bm/inf-ones.txt"}}) {
        auto first = run(a, seat, fixture(file));
        auto second = run(a, seat, fixture(file));
        EXPECT_EQ(first.transcript, second.transcript);
        auto replay = run(a, seat, first.transcript);
        EXPECT_EQ(replay.transcript, first.transcript);
    }
}

TEST(BanachMazur, RejectsBadMovesAndStopsAtRounds) {
    auto s = run(inf_ones(), PlayerTag::Forall, "A:\nA: 2\nB: 0\nA: 0\nA: 1\nA: 0\n", 2);
    EXPECT_NE(s.transcript.find("# rejected: a move must append at least one letter"), std::string::npos);
    EXPECT_NE(s.transcript.find("# rejected: unknown letter '2'"), std::string::npos);
    EXPECT_NE(s.transcript.find("# rejected: unknown seat 'B'"), std::string::npos);
    EXPECT_TRUE(s.record.complete);
    EXPECT_EQ(s.record.moves.size(), 4u);
    auto partial = run(inf_ones(), PlayerTag::Forall, "A: 0\n", 3);
    EXPECT_FALSE(partial.record.complete);
    EXPECT_NE(partial.transcript.find("# input ended after 1 moves"), std::string::npos);
}

TEST(BanachMazur, WinnerMatchesComeagerOnRandomAutomata) {
    Rng rng(21);
    for (int i = 0; i < 40; ++i) {
        auto a = random_detmuller(rng, bits1(), 4);
        bool comeager = decide_comeager(a).comeager;
        PlayerTag machine = comeager ? PlayerTag::Exists : PlayerTag::Forall;
        auto s = run(a, opponent(machine), random_script(rng, player_name(opponent(machine)), 4));
        EXPECT_EQ(s.record.winner, machine) << write_oaut(a);
    }
}
