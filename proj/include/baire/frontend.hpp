#pragma once

#include <optional>

#include <gmpxx.h>

#include "baire/formula.hpp"
#include "baire/nba_ops.hpp"

namespace baire {

// NBA over the track alphabet of the free variables in sorted order. Free
// first-order variables are constrained to singletons.
struct CompiledLanguage {
    NBA nba;
    std::vector<std::string> tracks;
    std::vector<std::string> notes;  // eliminations applied, in order
};

CompiledLanguage compile(const Formula& f, std::size_t budget = default_budget());

// Fixed automata for the atoms and the singleton guard.
NBA atom_nba(const Formula& atom);
NBA singleton_nba(const std::string& x);

struct SentenceVerdict {
    bool value = false;
    std::string root;                  // "cat", "meas1" or empty
    std::optional<bool> comeager;      // game verdict on the root body
    std::optional<mpq_class> measure;  // measure of the root body
    bool oracles_agree = true;         // value, comeager and measure = 1 coincide
    std::size_t nba_states = 0;
    std::vector<std::string> notes;
};

SentenceVerdict decide_sentence(const Formula& f, std::size_t budget = default_budget());

// Sentence of the form meas1 X. phi with phi free of meas1.
bool decide_forall1_sentence(const Formula& f, std::size_t budget = default_budget());

}  // namespace baire
