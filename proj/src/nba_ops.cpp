#include "baire/nba_ops.hpp"

#include <algorithm>
#include <map>

#include "baire/graph.hpp"

namespace baire {

namespace {

Adjacency nba_graph(const NBA& a) {
    Adjacency g(a.states);
    for (std::size_t q = 0; q < a.states; ++q) {
        for (const auto& s : a.delta[q]) g[q].insert(g[q].end(), s.begin(), s.end());
        normalize(g[q]);
    }
    return g;
}

}  // namespace

NBA trim(const NBA& a) {
    a.validate();
    Adjacency g = nba_graph(a);
    auto reach = reachable_from(g, a.initial);
    auto scc = strongly_connected(g, reach);
    auto cyc = nontrivial_components(g, scc);
    Adjacency rev(a.states);
    for (std::uint32_t q = 0; q < a.states; ++q)
        for (auto r : g[q]) rev[r].push_back(q);
    std::vector<std::uint32_t> good;
    for (std::uint32_t q = 0; q < a.states; ++q)
        if (reach[q] && a.accepting[q] && cyc[scc.comp[q]]) good.push_back(q);
    auto useful = reachable_from(rev, good);
    std::vector<StateId> map(a.states, ~StateId{0});
    StateId n = 0;
    for (std::uint32_t q = 0; q < a.states; ++q)
        if (reach[q] && useful[q]) map[q] = n++;
    if (n == 0) return empty_nba(a.alphabet);
    NBA out(a.alphabet, n);
    for (auto q : a.initial)
        if (map[q] != ~StateId{0}) out.initial.push_back(map[q]);
    for (std::uint32_t q = 0; q < a.states; ++q) {
        if (map[q] == ~StateId{0}) continue;
        out.accepting[map[q]] = a.accepting[q];
        for (LetterId l = 0; l < a.alphabet.size(); ++l)
            for (auto r : a.delta[q][l])
                if (map[r] != ~StateId{0}) out.delta[map[q]][l].push_back(map[r]);
    }
    return out;
}

std::optional<LassoWord> find_accepted(const NBA& a) {
    a.validate();
    const std::size_t k = a.alphabet.size();
    // BFS tree from the initial states for the prefix.
    std::vector<std::int64_t> parent(a.states, -2);
    std::vector<LetterId> via(a.states, 0);
    std::vector<StateId> queue;
    for (auto q : a.initial)
        if (parent[q] == -2) {
            parent[q] = -1;
            queue.push_back(q);
        }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        StateId q = queue[h];
        for (LetterId l = 0; l < k; ++l)
            for (auto r : a.delta[q][l])
                if (parent[r] == -2) {
                    parent[r] = q;
                    via[r] = l;
                    queue.push_back(r);
                }
    }
    Adjacency g = nba_graph(a);
    std::vector<char> reach(a.states);
    for (std::size_t q = 0; q < a.states; ++q) reach[q] = parent[q] != -2;
    auto scc = strongly_connected(g, reach);
    auto cyc = nontrivial_components(g, scc);
    for (StateId f = 0; f < a.states; ++f) {
        if (!reach[f] || !a.accepting[f] || !cyc[scc.comp[f]]) continue;
        LassoWord w;
        for (StateId q = f; parent[q] >= 0; q = static_cast<StateId>(parent[q])) w.prefix.push_back(via[q]);
        std::reverse(w.prefix.begin(), w.prefix.end());
        // BFS inside the component from f back to f.
        std::map<StateId, std::pair<StateId, LetterId>> back;
        std::vector<StateId> q2{f};
        bool done = false;
        for (std::size_t h = 0; h < q2.size() && !done; ++h) {
            StateId q = q2[h];
            for (LetterId l = 0; l < k && !done; ++l)
                for (auto r : a.delta[q][l]) {
                    if (scc.comp[r] != scc.comp[f]) continue;
                    if (r == f) {
                        std::vector<LetterId> cyc_letters{l};
                        for (StateId x = q; x != f; x = back[x].first) cyc_letters.push_back(back[x].second);
                        std::reverse(cyc_letters.begin(), cyc_letters.end());
                        w.cycle = std::move(cyc_letters);
                        done = true;
                        break;
                    }
                    if (!back.count(r)) {
                        back[r] = {q, l};
                        q2.push_back(r);
                    }
                }
        }
        return w;
    }
    return std::nullopt;
}

NBA nba_union(const NBA& a, const NBA& b) {
    if (!(a.alphabet == b.alphabet)) throw Error("union of automata over different alphabets");
    NBA out(a.alphabet, a.states + b.states);
    auto off = static_cast<StateId>(a.states);
    out.initial = a.initial;
    for (auto q : b.initial) out.initial.push_back(q + off);
    for (StateId q = 0; q < a.states; ++q) {
        out.accepting[q] = a.accepting[q];
        out.delta[q] = a.delta[q];
    }
    for (StateId q = 0; q < b.states; ++q) {
        out.accepting[q + off] = b.accepting[q];
        for (LetterId l = 0; l < b.alphabet.size(); ++l)
            for (auto r : b.delta[q][l]) out.delta[q + off][l].push_back(r + off);
    }
    return out;
}

NBA nba_intersection(const NBA& a, const NBA& b) {
    if (!(a.alphabet == b.alphabet)) throw Error("intersection of automata over different alphabets");
    // States (p, q, flag): flag 0 waits for an accepting state of a, flag 1 for b.
    std::map<std::tuple<StateId, StateId, int>, StateId> index;
    std::vector<std::tuple<StateId, StateId, int>> states;
    auto get = [&](StateId p, StateId q, int f) {
        auto [it, fresh] = index.emplace(std::make_tuple(p, q, f), static_cast<StateId>(states.size()));
        if (fresh) states.emplace_back(p, q, f);
        return it->second;
    };
    StateSet init;
    for (auto p : a.initial)
        for (auto q : b.initial) init.push_back(get(p, q, 0));
    std::vector<std::vector<StateSet>> delta;
    for (std::size_t i = 0; i < states.size(); ++i) {
        auto [p, q, f] = states[i];
        int nf = f == 0 ? (a.accepting[p] ? 1 : 0) : (b.accepting[q] ? 0 : 1);
        std::vector<StateSet> row(a.alphabet.size());
        for (LetterId l = 0; l < a.alphabet.size(); ++l) {
            for (auto p2 : a.delta[p][l])
                for (auto q2 : b.delta[q][l]) row[l].push_back(get(p2, q2, nf));
            normalize(row[l]);
        }
        delta.push_back(std::move(row));
    }
    NBA out(a.alphabet, states.size());
    out.initial = init;
    normalize(out.initial);
    out.delta = std::move(delta);
    for (std::size_t i = 0; i < states.size(); ++i) {
        auto [p, q, f] = states[i];
        out.accepting[i] = f == 1 && b.accepting[q];
    }
    return trim(out);
}

NBA cylindrify(const NBA& a, const Alphabet& to) {
    auto map = restrict_letters(to, a.alphabet);
    NBA out(to, a.states);
    out.initial = a.initial;
    out.accepting = a.accepting;
    for (StateId q = 0; q < a.states; ++q)
        for (LetterId l = 0; l < to.size(); ++l) out.delta[q][l] = a.delta[q][map[l]];
    return out;
}

NBA project(const NBA& a, const Alphabet& to) {
    auto map = restrict_letters(a.alphabet, to);
    NBA out(to, a.states);
    out.initial = a.initial;
    out.accepting = a.accepting;
    for (StateId q = 0; q < a.states; ++q)
        for (LetterId l = 0; l < a.alphabet.size(); ++l) {
            auto& dst = out.delta[q][map[l]];
            dst.insert(dst.end(), a.delta[q][l].begin(), a.delta[q][l].end());
            normalize(dst);
        }
    return out;
}

NBA universal_nba(const Alphabet& a) {
    NBA out(a, 1);
    out.initial = {0};
    out.accepting[0] = true;
    for (LetterId l = 0; l < a.size(); ++l) out.delta[0][l] = {0};
    return out;
}

NBA empty_nba(const Alphabet& a) {
    NBA out(a, 1);
    out.initial = {0};
    return out;
}

}  // namespace baire
