#pragma once

#include <cstdint>
#include <vector>

namespace baire {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

// Strongly connected components restricted to nodes with keep[v] != 0.
// Returns component id per node (-1 for dropped nodes) and the component count.
struct SccResult {
    std::vector<int> comp;
    int count = 0;
};
SccResult strongly_connected(const Adjacency& g, const std::vector<char>& keep);
SccResult strongly_connected(const Adjacency& g);

// Component has a cycle: more than one node or a self-loop.
std::vector<char> nontrivial_components(const Adjacency& g, const SccResult& scc);

// Components without edges leaving them (within kept nodes).
std::vector<char> bottom_components(const Adjacency& g, const SccResult& scc);

std::vector<char> reachable_from(const Adjacency& g, const std::vector<std::uint32_t>& roots);

}  // namespace baire
