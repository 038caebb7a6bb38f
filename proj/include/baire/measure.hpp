#pragma once

#include <gmpxx.h>

#include "baire/automata.hpp"

namespace baire {

struct MeasureReport {
    mpq_class measure;
    std::vector<StateSet> recurrent_classes;  // bottom SCCs reachable from the initial state
    std::vector<bool> accepting;              // per class
    std::vector<mpq_class> absorption;        // per class, from the initial state
};

// Uniform letter distribution; the run is a finite Markov chain.
MeasureReport language_measure(const DetMuller& a);
MeasureReport language_measure(const DPA& a);
bool decide_measure_one(const DetMuller& a);
bool decide_measure_one(const DPA& a);
// Via determinization.
mpq_class nba_measure(const NBA& a, std::size_t budget = default_budget());

struct StaigerReport {
    mpq_class measure;
    bool measure_one = false;
    bool comeager = false;
    bool agree() const { return measure_one == comeager; }
};
StaigerReport staiger_crosscheck(const DetMuller& a);

std::string format_rational(const mpq_class& q);  // "p/q (= 0.xxx)" helpers
std::string decimal(const mpq_class& q, int digits = 12);

}  // namespace baire
