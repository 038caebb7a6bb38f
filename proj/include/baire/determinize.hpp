#pragma once

#include <functional>
#include <vector>

#include "baire/automata.hpp"

namespace baire {

// Safra tree with compact names 1..k. Nodes are stored in preorder; children
// are ordered oldest first. The empty tree (no nodes) is the rejecting sink.
struct SafraTree {
    struct Node {
        std::uint32_t name = 0;
        int parent = -1;
        StateSet label;
    };
    std::vector<Node> nodes;

    bool empty() const { return nodes.empty(); }
    std::vector<std::uint32_t> encode() const;
    std::string to_string() const;
    bool operator==(const SafraTree&) const = default;
};

SafraTree safra_initial(const StateSet& init);

struct SafraStep {
    SafraTree tree;
    unsigned priority = 1;  // max-parity; even = some branch accepted
};

// One determinization step. `succ` maps a state to its successors under the
// current letter; `n` bounds the number of states that can occur in labels.
SafraStep safra_step(const SafraTree& t, const std::function<const StateSet&(StateId)>& succ,
                     const std::vector<bool>& accepting, std::size_t n);

// Largest priority emitted by safra_step for `n` states.
inline unsigned safra_max_priority(std::size_t n) { return static_cast<unsigned>(2 * n + 1); }

DPA determinize(const NBA& a, std::size_t budget = default_budget());
NBA complement_nba(const NBA& a, std::size_t budget = default_budget());
DetMuller dpa_to_detmuller(const DPA& d);

// Same language with priorities recomputed along the SCC hierarchy (states
// off every cycle get 0) and states merged by Moore minimization.
DPA minimize_dpa(const DPA& d);
NBA dpa_to_nba(const DPA& d);

}  // namespace baire
