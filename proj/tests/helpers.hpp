#pragma once

#include "baire/automata.hpp"

namespace baire::testing {

inline Alphabet bits1() { return Alphabet::tracks({"X"}); }

// Two-state deterministic automaton tracking the last letter on track X.
inline DetMuller last_letter(const Alphabet& a = bits1()) {
    DetMuller d;
    d.alphabet = a;
    d.states = 2;
    d.initial = 0;
    d.delta.assign(2, std::vector<StateId>(a.size()));
    for (StateId q = 0; q < 2; ++q)
        for (LetterId l = 0; l < a.size(); ++l) d.delta[q][l] = a.bit(l, 0) ? 1 : 0;
    return d;
}

inline DetMuller inf_ones(const Alphabet& a = bits1()) {
    auto d = last_letter(a);
    d.condition = MullerCondition::explicit_family({{1}, {0, 1}});
    return d;
}

inline DetMuller fin_ones(const Alphabet& a = bits1()) {
    auto d = last_letter(a);
    d.condition = MullerCondition::explicit_family({{0}});
    return d;
}

inline DetMuller inf_zeros(const Alphabet& a = bits1()) {
    auto d = last_letter(a);
    d.condition = MullerCondition::explicit_family({{0}, {0, 1}});
    return d;
}

inline DetMuller universal_det(const Alphabet& a = bits1()) {
    DetMuller d;
    d.alphabet = a;
    d.states = 1;
    d.delta.assign(1, std::vector<StateId>(a.size(), 0));
    d.condition = MullerCondition::explicit_family({{0}});
    return d;
}

// Only the letter 0 forever: state 1 is a rejecting sink.
inline DetMuller only_zeros(const Alphabet& a = bits1()) {
    DetMuller d;
    d.alphabet = a;
    d.states = 2;
    d.delta = {{0, 1}, {1, 1}};
    d.condition = MullerCondition::explicit_family({{0}});
    return d;
}

// First letter 1: states start, good, bad.
inline DetMuller first_one(const Alphabet& a = bits1()) {
    DetMuller d;
    d.alphabet = a;
    d.states = 3;
    d.delta = {{2, 1}, {1, 1}, {2, 2}};
    d.condition = MullerCondition::explicit_family({{1}});
    return d;
}

inline NBA inf_ones_nba(const Alphabet& a = bits1()) {
    NBA n(a, 2);
    n.initial = {0};
    n.accepting[1] = true;
    for (StateId q = 0; q < 2; ++q) {
        n.add_edge(q, 0, 0);
        n.add_edge(q, 1, 1);
    }
    return n;
}

// Guess the last 1, then read only zeros.
inline NBA fin_ones_nba(const Alphabet& a = bits1()) {
    NBA n(a, 2);
    n.initial = {0};
    n.accepting[1] = true;
    n.add_edge(0, 0, 0);
    n.add_edge(0, 1, 0);
    n.add_edge(0, 0, 1);
    n.add_edge(0, 1, 1);
    n.add_edge(1, 0, 1);
    return n;
}

inline LassoWord lasso(std::vector<LetterId> u, std::vector<LetterId> v) { return LassoWord{std::move(u), std::move(v)}; }

}  // namespace baire::testing
