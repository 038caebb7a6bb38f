#include "baire/graph.hpp"

#include <algorithm>

namespace baire {

SccResult strongly_connected(const Adjacency& g, const std::vector<char>& keep) {
    const std::size_t n = g.size();
    SccResult r;
    r.comp.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<std::uint32_t> stack;
    struct Frame {
        std::uint32_t v;
        std::size_t edge;
    };
    std::vector<Frame> call;
    int counter = 0;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (!keep[root] || index[root] >= 0) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& f = call.back();
            const auto& out = g[f.v];
            if (f.edge < out.size()) {
                std::uint32_t w = out[f.edge++];
                if (!keep[w]) continue;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            std::uint32_t v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                while (true) {
                    std::uint32_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    r.comp[w] = r.count;
                    if (w == v) break;
                }
                ++r.count;
            }
        }
    }
    return r;
}

SccResult strongly_connected(const Adjacency& g) { return strongly_connected(g, std::vector<char>(g.size(), 1)); }

std::vector<char> nontrivial_components(const Adjacency& g, const SccResult& scc) {
    std::vector<int> size(scc.count, 0);
    std::vector<char> out(scc.count, 0);
    for (std::size_t v = 0; v < g.size(); ++v)
        if (scc.comp[v] >= 0) ++size[scc.comp[v]];
    for (std::size_t v = 0; v < g.size(); ++v) {
        int c = scc.comp[v];
        if (c < 0) continue;
        if (size[c] > 1) out[c] = 1;
        for (auto w : g[v])
            if (w == v) out[c] = 1;
    }
    return out;
}

std::vector<char> bottom_components(const Adjacency& g, const SccResult& scc) {
    std::vector<char> out(scc.count, 1);
    for (std::size_t v = 0; v < g.size(); ++v) {
        int c = scc.comp[v];
        if (c < 0) continue;
        for (auto w : g[v])
            if (scc.comp[w] >= 0 && scc.comp[w] != c) out[c] = 0;
    }
    return out;
}

std::vector<char> reachable_from(const Adjacency& g, const std::vector<std::uint32_t>& roots) {
    std::vector<char> seen(g.size(), 0);
    std::vector<std::uint32_t> stack;
    for (auto r : roots)
        if (!seen[r]) {
            seen[r] = 1;
            stack.push_back(r);
        }
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : g[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return seen;
}

}  // namespace baire
