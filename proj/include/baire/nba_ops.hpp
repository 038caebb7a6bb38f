#pragma once

#include <optional>

#include "baire/automata.hpp"

namespace baire {

// Keeps states reachable from the initial set and co-reachable to an
// accepting cycle. An empty language yields a single non-accepting state.
NBA trim(const NBA& a);

// Accepted lasso, if the language is nonempty.
std::optional<LassoWord> find_accepted(const NBA& a);
inline bool is_empty(const NBA& a) { return !find_accepted(a).has_value(); }

NBA nba_union(const NBA& a, const NBA& b);
NBA nba_intersection(const NBA& a, const NBA& b);

// Reinterprets `a` over the larger track alphabet `to` (extra tracks are free).
NBA cylindrify(const NBA& a, const Alphabet& to);
// Existential projection onto the tracks of `to`.
NBA project(const NBA& a, const Alphabet& to);

NBA universal_nba(const Alphabet& a);
NBA empty_nba(const Alphabet& a);

}  // namespace baire
