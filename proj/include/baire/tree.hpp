#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>

#include "baire/automata.hpp"
#include "baire/game.hpp"

namespace baire {

// Alternating Muller tree automaton; atoms carry a direction.
struct AltTree {
    Alphabet alphabet;
    std::size_t states = 0;
    StateId initial = 0;
    std::vector<std::vector<Expr>> delta;  // [state][letter]
    MullerCondition condition;

    void validate() const;
};

// Every transition is (L, left) op (R, right) with op And or Or.
struct GameTransition {
    Expr::Kind op = Expr::Kind::And;
    StateId left = 0;
    StateId right = 0;
    bool operator==(const GameTransition&) const = default;
};

struct GameAutomaton {
    Alphabet alphabet;
    std::size_t states = 0;
    StateId initial = 0;
    std::vector<std::vector<GameTransition>> delta;  // [state][letter]
    MullerCondition condition;

    void validate() const;
    bool deterministic() const;  // all transitions are conjunctions
    AltTree to_alternating() const;
};

// Recognizes game form in an alternating tree automaton.
std::optional<GameAutomaton> as_game_automaton(const AltTree& a);

// Finite graph whose unfolding from node 0 is the tree.
struct RegularTree {
    Alphabet alphabet;
    std::vector<LetterId> label;
    std::vector<std::uint32_t> left;
    std::vector<std::uint32_t> right;
    std::vector<std::string> names;  // node ids, for serialization

    std::size_t size() const { return label.size(); }
    std::uint32_t add(LetterId a, std::string name = {});
    void validate() const;
};

RegularTree constant_tree(const Alphabet& a, LetterId letter);

// Finite prefix: node (word over L/R) -> letter.
struct TreePrefix {
    std::map<std::string, LetterId> label;

    // Prefix-closed, nonempty, every node has zero or two children.
    bool valid() const;
    std::vector<std::string> leaves() const;
};

// `t` extends `s`: same labels on dom(s) and every leaf of s is internal in t.
bool extends(const TreePrefix& s, const TreePrefix& t);

// Acceptance game on the product of a and t.
struct TreeArena {
    Arena arena;
    std::vector<std::pair<std::uint32_t, StateId>> state_of;  // per position; node = -1 for expression nodes
};
TreeArena acceptance_arena_tree(const AltTree& a, const RegularTree& t);
bool tree_membership(const AltTree& a, const RegularTree& t);
bool tree_membership(const GameAutomaton& a, const RegularTree& t);

AltTree build_b_tree(const GameAutomaton& a, const TrackSplit& split);
AltTree build_b_tree(const GameAutomaton& a, const std::vector<std::string>& quantified);

struct TreeComeagerResult {
    bool comeager = false;
    std::shared_ptr<const AltTree> b;
    TreeArena game;
    GameSolution solution;
};
TreeComeagerResult decide_comeager_tree(const GameAutomaton& a);

// Direction alphabet {L,R} and labels {0,1} on track X.
Alphabet direction_alphabet();
Alphabet label_alphabet();

// The path Y with: left child in Y iff the current node is labelled 1.
LassoWord f_transducer(const RegularTree& x);
// A regular tree mapped by f_transducer to the given direction lasso.
RegularTree f_preimage_tree(const LassoWord& directions);
// Measure of the trees mapped into the cylinder of the finite direction word.
mpq_class f_cylinder_preimage_measure(const std::vector<LetterId>& directions);
// Measure of the trees whose leftmost branch carries the given finite word.
mpq_class leftmost_cylinder_preimage_measure(const std::vector<bool>& bits);

struct WitnessU1 {
    std::vector<unsigned> growth;          // f(0..n)
    TreePrefix prefix;                     // depths 0..f(n)
    mpq_class partial_sum;                 // sum over k < n of 2^-(f(k+1)-f(k))
    std::vector<mpq_class> hit_probability;  // per block: a random path meets a 1 there
    bool forest_marked = false;            // every tree of every block forest holds a 1
    bool lower_blocks_see_one = false;     // nodes outside the last block have a 1 below in the prefix
};
WitnessU1 witness_u1_tree(unsigned blocks);
unsigned minimal_growth(unsigned n);

// A random path a.s. meets infinitely many 1s: every bottom SCC holds a 1.
bool regular_tree_infinitely_ones(const RegularTree& t);
// Every node reaches a 1-labelled node.
bool regular_tree_every_node_sees_one(const RegularTree& t);

// Trees in which every node has a descendant labelled 1 (3-state, alternating).
AltTree one_below_everywhere();
// Game automaton: Exists steers at 0-labelled nodes, Forall at 1-labelled
// nodes, infinitely many 1s wins. Its language contains one_below_everywhere.
GameAutomaton dense_ones_game();
GameAutomaton root_one_game();
GameAutomaton full_tree_game(const Alphabet& a = label_alphabet());

}  // namespace baire
