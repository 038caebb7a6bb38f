#pragma once

#include <functional>
#include <vector>

#include "baire/alphabet.hpp"
#include "baire/expr.hpp"
#include "baire/muller.hpp"

namespace baire {

struct LassoWord {
    std::vector<LetterId> prefix;
    std::vector<LetterId> cycle;

    std::size_t length() const { return prefix.size() + cycle.size(); }
    std::size_t next(std::size_t i) const { return i + 1 < length() ? i + 1 : prefix.size(); }
    LetterId at(std::size_t i) const { return i < prefix.size() ? prefix[i] : cycle[i - prefix.size()]; }
    bool operator==(const LassoWord&) const = default;
};

void validate(const LassoWord& w, const Alphabet& a);
// Same word with a primitive cycle and the prefix rolled back into the cycle.
LassoWord canonical(const LassoWord& w);

struct NBA {
    Alphabet alphabet;
    std::size_t states = 0;
    StateSet initial;
    std::vector<std::vector<StateSet>> delta;  // [state][letter] -> successors
    std::vector<bool> accepting;

    NBA() = default;
    NBA(Alphabet a, std::size_t n);
    void add_edge(StateId from, LetterId a, StateId to);
    void validate() const;
};

struct DetMuller {
    Alphabet alphabet;
    std::size_t states = 0;
    StateId initial = 0;
    std::vector<std::vector<StateId>> delta;  // [state][letter]
    MullerCondition condition;

    void validate() const;
};

struct DPA {
    Alphabet alphabet;
    std::size_t states = 0;
    StateId initial = 0;
    std::vector<std::vector<StateId>> delta;
    std::vector<unsigned> priority;

    void validate() const;
};

struct AltMuller {
    Alphabet alphabet;
    std::size_t states = 0;
    StateId initial = 0;
    std::vector<std::vector<Expr>> delta;  // [state][letter]
    MullerCondition condition;

    void validate() const;
};

// Word membership.
bool lasso_membership_nba(const NBA& a, const LassoWord& w);
bool lasso_membership(const DetMuller& a, const LassoWord& w);
bool lasso_membership(const DPA& a, const LassoWord& w);
bool lasso_membership(const AltMuller& a, const LassoWord& w);  // via the acceptance game
// States visited infinitely often by the run of a deterministic automaton.
StateSet run_inf_set(const std::vector<std::vector<StateId>>& delta, StateId init, const LassoWord& w);

NBA complete(const NBA& a);
DetMuller complete(const DetMuller& a);
DPA complete(const DPA& a);

// Inf-set combinator for products: receives the two projected inf-sets.
using PairCombinator = std::function<bool(const DetMuller&, const StateSet&, const DetMuller&, const StateSet&)>;
PairCombinator intersection_preset();
PairCombinator union_preset();
DetMuller product_det(const DetMuller& a, const DetMuller& b, const PairCombinator& combine);

// Latest appearance record reduction. Record i of the result corresponds to
// lar_records()[i] = (permutation, hit position).
struct LarRecord {
    std::vector<StateId> perm;  // most recent first
    std::uint32_t hit = 0;
    auto operator<=>(const LarRecord&) const = default;
};
struct LarDPA {
    DPA dpa;
    std::vector<LarRecord> records;
};
struct LarAlt {
    AltMuller automaton;  // condition is Parity
    std::vector<LarRecord> records;
};
LarDPA lar_transform(const DetMuller& a);
LarAlt lar_transform(const AltMuller& a);

// Embeddings between classes.
DetMuller to_det_muller(const DPA& d);
AltMuller to_alternating(const DetMuller& a);
AltMuller to_alternating(const NBA& a);
// Complement by swapping And/Or and complementing the condition.
AltMuller dual(const AltMuller& a);  // requires a single initial state and total transitions

// Enumerates lassos with |u|+|v| <= max_len, v nonempty.
std::vector<LassoWord> all_lassos(std::size_t letters, std::size_t max_len);

}  // namespace baire
