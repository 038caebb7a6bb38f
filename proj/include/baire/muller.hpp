#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "baire/common.hpp"

namespace baire {

// Acceptance condition on inf-sets. Explicit families are the default; parity,
// projected and B-tagged forms are kept symbolic so that conditions derived
// from large automata are never enumerated.
class MullerCondition {
public:
    enum class Kind { Explicit, Parity, Projected, CategoryB, Complement };

    MullerCondition();  // empty explicit family
    static MullerCondition explicit_family(std::vector<StateSet> family);
    static MullerCondition parity(std::vector<unsigned> priority);
    // Accepts S iff inner accepts { color[s] : s in S }.
    static MullerCondition projected(std::vector<StateId> color, MullerCondition inner);
    // States carry (A-state, player tag); accepts S iff all tags are Forall, or
    // both tags occur and the A-projection is accepted by inner.
    static MullerCondition category_b(std::vector<StateId> a_state, std::vector<PlayerTag> tag,
                                      MullerCondition inner);
    static MullerCondition complement(MullerCondition inner);

    Kind kind() const;
    bool accepts(const StateSet& s) const;

    const std::vector<StateSet>* family() const;          // Explicit only
    const std::vector<unsigned>* priorities() const;      // Parity only
    const MullerCondition* inner() const;                 // Projected/CategoryB/Complement
    const std::vector<StateId>* colors() const;           // Projected/CategoryB
    const std::vector<PlayerTag>* tags() const;           // CategoryB

    // Family over states 0..n-1, enumerated if needed (n must be small).
    std::vector<StateSet> enumerate(std::size_t n) const;
    // Largest state id referenced plus one (0 if unconstrained).
    std::size_t referenced_states() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

// Zielonka tree of a condition restricted to a domain of states.
class ZielonkaTree {
public:
    struct Node {
        StateSet label;
        bool accepting = false;
        unsigned depth = 0;
        int parent = -1;
        std::vector<int> children;
    };

    ZielonkaTree(const MullerCondition& cond, StateSet domain, std::size_t budget = 1u << 22);

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<int>& leaves() const { return leaves_; }
    unsigned height() const { return height_; }

private:
    std::vector<Node> nodes_;
    std::vector<int> leaves_;
    unsigned height_ = 0;
};

// Deterministic parity automaton over the alphabet of condition states whose
// parity verdict (max priority seen infinitely often even) on any infinite
// state sequence matches the condition on its inf-set. Memory = tree leaves.
class ZielonkaAutomaton {
public:
    explicit ZielonkaAutomaton(const MullerCondition& cond, StateSet domain);

    std::size_t memory_size() const { return tree_.leaves().size(); }
    std::uint32_t initial() const { return 0; }
    struct Step {
        std::uint32_t memory;
        unsigned priority;
    };
    // Priorities of steps on domain states are >= 2; steps on states outside
    // the domain leave memory unchanged and emit the neutral priority, which
    // is 0 if the empty set is accepted and 1 otherwise.
    Step step(std::uint32_t memory, StateId s) const;
    unsigned neutral_priority() const { return empty_accepted_ ? 0u : 1u; }
    unsigned max_priority() const;
    const ZielonkaTree& tree() const { return tree_; }

private:
    ZielonkaTree tree_;
    std::vector<int> leaf_index_;        // node -> leaf index or -1
    std::vector<std::vector<bool>> in_;  // node -> membership over domain positions
    std::vector<int> dom_pos_;           // state -> position in domain or -1
    unsigned base_ = 0;
    bool empty_accepted_ = false;

    int leftmost_leaf(int node) const;
};

}  // namespace baire
