#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <string>
#include <vector>

#include "baire/automata.hpp"
#include "baire/muller.hpp"

namespace baire {

using Position = std::uint32_t;

// Finite arena. The winning condition is either parity priorities on all
// positions or a Muller condition on the colors of the relevant positions
// (color -1 marks an irrelevant position).
struct Arena {
    std::vector<PlayerTag> owner;
    std::vector<std::vector<Position>> succ;
    Position initial = 0;
    std::optional<std::vector<unsigned>> priority;
    std::vector<std::int64_t> color;
    std::optional<MullerCondition> muller;
    std::vector<std::string> label;  // optional, for diagnostics

    std::size_t size() const { return owner.size(); }
    Position add(PlayerTag who, std::int64_t color = -1, std::string name = {});
    void validate() const;
};

// Finite-memory strategy. Memory is updated on entering a position; the
// choice at a position owned by the strategy's player reads the memory
// already updated with that position.
struct Strategy {
    PlayerTag player = PlayerTag::Exists;
    std::uint32_t memory_size = 1;
    std::uint32_t initial_memory = 0;
    std::function<std::uint32_t(std::uint32_t, Position)> update_fn;  // empty = memoryless
    std::unordered_map<std::uint64_t, Position> choices;              // key = memory * 2^32 + position

    std::uint32_t update(std::uint32_t m, Position p) const { return update_fn ? update_fn(m, p) : 0; }
    std::optional<Position> choice(std::uint32_t m, Position p) const;
    void set_choice(std::uint32_t m, Position p, Position to);
};

struct GameSolution {
    std::vector<PlayerTag> winner;  // per position
    Strategy exists_strategy;
    Strategy forall_strategy;

    const Strategy& strategy(PlayerTag p) const { return p == PlayerTag::Exists ? exists_strategy : forall_strategy; }
};

GameSolution solve_parity(const Arena& ar);
GameSolution solve_muller(const Arena& ar);
GameSolution solve(const Arena& ar);  // dispatches on the condition

// Exact model check of a strategy from `start` (defaults to the arena's
// initial position): every cycle reachable in arena x memory restricted by the
// strategy must satisfy (Exists) or violate (Forall) the condition. `steps`
// caps the explored product graph.
bool check_strategy(const Arena& ar, const Strategy& s, PlayerTag player, std::size_t steps,
                    std::optional<Position> start = std::nullopt);

// Condition evaluation on a set of positions visited infinitely often.
bool arena_accepts(const Arena& ar, const StateSet& inf_positions);

// Swap owners and complement the condition.
Arena dual(const Arena& ar);

// Acceptance game of an alternating word automaton on a lasso. Positions
// carry labels "i:q" for state positions and "i:q/path" for expression nodes.
struct WordArena {
    Arena arena;
    struct Info {
        std::size_t index = 0;     // lasso position
        StateId state = 0;         // automaton state owning the expression
        bool is_state = true;
        const Expr* node = nullptr;  // expression node (non-state positions)
    };
    std::vector<Info> info;
};
WordArena acceptance_arena_word(const AltMuller& a, const LassoWord& w);
Arena acceptance_arena(const AltMuller& a, const LassoWord& w);

}  // namespace baire
