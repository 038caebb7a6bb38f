#pragma once

#include <iosfwd>

#include "baire/category.hpp"

namespace baire {

// Banach-Mazur game on words for L(a): players alternately append nonempty
// words, Forall first; Exists wins iff the limit lies in L(a). The machine
// plays the other seat with the strategy of the B-construction game.
struct BmMove {
    PlayerTag player = PlayerTag::Forall;
    bool machine = false;
    std::vector<LetterId> letters;
};

struct BmRecord {
    PlayerTag human = PlayerTag::Forall;
    bool comeager = false;
    std::vector<BmMove> moves;
    std::vector<LetterId> word;
    bool complete = false;  // false if the input ended before the round limit
    // Continuation with the human seat always appending the first letter.
    LassoWord limit;
    StateSet inf_set;  // states of a visited infinitely often on the limit
    PlayerTag winner = PlayerTag::Forall;
};

struct BmOptions {
    std::size_t rounds = 0;           // human moves to read, 0 = until end of input
    std::ostream* prompt = nullptr;   // receives "<seat>> " before each human move
};

// Script lines: `E: 1 0 1`, `A: 0` or bare letters for the human seat; lines
// for the machine seat and `#` comments are skipped. The transcript written to
// `out` is itself a valid script and replays to identical output.
BmRecord bm_play(const DetMuller& a, PlayerTag human, std::istream& in, std::ostream& out,
                 const BmOptions& opts = {});

}  // namespace baire
