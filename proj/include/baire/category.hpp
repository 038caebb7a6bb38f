#pragma once

#include <memory>

#include "baire/automata.hpp"
#include "baire/game.hpp"

namespace baire {

// B state (q, r) has index 2q + r with r = 0 for Exists and 1 for Forall.
inline StateId b_state(StateId q, PlayerTag r) { return 2 * q + static_cast<StateId>(r); }
inline StateId b_origin(StateId s) { return s / 2; }
inline PlayerTag b_tag(StateId s) { return s % 2 == 0 ? PlayerTag::Exists : PlayerTag::Forall; }

// Alternating automaton over the parameter tracks accepting exactly the words
// whose section of L(a) is comeager. The quantified tracks are the trailing
// `split.gamma` tracks of a's alphabet.
AltMuller build_b_word(const DetMuller& a, const TrackSplit& split);
AltMuller build_b_word(const DetMuller& a, const std::vector<std::string>& quantified);

// Closed case: all tracks quantified, the parameter alphabet is unary.
struct ComeagerResult {
    bool comeager = false;
    std::shared_ptr<const AltMuller> b;
    WordArena game;  // acceptance game of b on the unique word
    GameSolution solution;
};
ComeagerResult decide_comeager(const DetMuller& a);

struct DealternationStats {
    std::size_t profiles = 0;       // transition profiles of finite words
    std::size_t idempotents = 0;
    std::size_t visit_classes = 0;  // classes of visited state sets
    std::size_t nba_states = 0;     // after trimming
};
NBA dealternate(const AltMuller& b, std::size_t budget = default_budget(), DealternationStats* stats = nullptr);

// Automaton over the quantified letters accepting the section of L(a) at the
// parameter word w: run a on w paired with the quantified word.
DetMuller section_automaton(const DetMuller& a, const TrackSplit& split, const LassoWord& w);

NBA eliminate_category(const DetMuller& a, const std::vector<std::string>& quantified,
                       std::size_t budget = default_budget());

}  // namespace baire
