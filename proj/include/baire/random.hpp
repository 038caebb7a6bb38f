#pragma once

#include <random>

#include "baire/automata.hpp"
#include "baire/game.hpp"

namespace baire {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive bounds

// Random explicit Muller family over states 0..n-1; each nonempty subset is
// included with probability 1/2.
MullerCondition random_family(Rng& rng, std::size_t n);

DetMuller random_detmuller(Rng& rng, const Alphabet& a, std::size_t max_states);
NBA random_nba(Rng& rng, const Alphabet& a, std::size_t max_states);
AltMuller random_altmuller(Rng& rng, const Alphabet& a, std::size_t max_states);
Expr random_expr(Rng& rng, std::size_t states, std::size_t depth, bool tree);

LassoWord random_lasso(Rng& rng, std::size_t letters, std::size_t max_len);

// Random arena; `parity` selects priorities, otherwise an explicit Muller
// family over all positions.
Arena random_arena(Rng& rng, std::size_t max_positions, bool parity);

}  // namespace baire
