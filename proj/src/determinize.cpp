#include "baire/determinize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "baire/graph.hpp"
#include "baire/nba_ops.hpp"

namespace baire {

std::vector<std::uint32_t> SafraTree::encode() const {
    std::vector<std::uint32_t> out;
    for (const auto& n : nodes) {
        out.push_back(n.name);
        out.push_back(n.parent < 0 ? 0 : nodes[static_cast<std::size_t>(n.parent)].name);
        out.push_back(static_cast<std::uint32_t>(n.label.size()));
        out.insert(out.end(), n.label.begin(), n.label.end());
    }
    return out;
}

std::string SafraTree::to_string() const {
    if (nodes.empty()) return "()";
    std::vector<std::vector<int>> kids(nodes.size());
    for (std::size_t i = 1; i < nodes.size(); ++i) kids[static_cast<std::size_t>(nodes[i].parent)].push_back(int(i));
    std::ostringstream os;
    auto rec = [&](auto&& self, int v) -> void {
        os << nodes[v].name << ":" << baire::to_string(nodes[v].label);
        if (kids[v].empty()) return;
        os << "(";
        for (std::size_t k = 0; k < kids[v].size(); ++k) {
            if (k) os << " ";
            self(self, kids[v][k]);
        }
        os << ")";
    };
    rec(rec, 0);
    return os.str();
}

SafraTree safra_initial(const StateSet& init) {
    SafraTree t;
    if (!init.empty()) t.nodes.push_back({1, -1, init});
    return t;
}

namespace {

struct WorkNode {
    StateSet label;
    std::uint32_t name = 0;
    bool fresh = false;
    std::vector<int> kids;
};

StateSet set_minus(const StateSet& a, const StateSet& b) {
    StateSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

SafraStep safra_step(const SafraTree& t, const std::function<const StateSet&(StateId)>& succ,
                     const std::vector<bool>& accepting, std::size_t n) {
    SafraStep out;
    if (t.empty()) return out;
    std::vector<WorkNode> w(t.nodes.size());
    std::uint32_t max_name = 0;
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        w[i].name = t.nodes[i].name;
        max_name = std::max(max_name, w[i].name);
        if (i > 0) w[static_cast<std::size_t>(t.nodes[i].parent)].kids.push_back(int(i));
        StateSet next;
        for (auto q : t.nodes[i].label) {
            const auto& s = succ(q);
            next.insert(next.end(), s.begin(), s.end());
        }
        normalize(next);
        w[i].label = std::move(next);
    }
    const std::size_t old = w.size();
    for (std::size_t i = 0; i < old; ++i) {
        StateSet acc;
        for (auto q : w[i].label)
            if (accepting[q]) acc.push_back(q);
        if (acc.empty()) continue;
        WorkNode child;
        child.label = std::move(acc);
        child.name = ++max_name;
        child.fresh = true;
        w.push_back(std::move(child));
        w[i].kids.push_back(int(w.size() - 1));
    }
    auto prune = [&](auto&& self, int v, const StateSet& forbidden) -> void {
        if (!forbidden.empty()) w[v].label = set_minus(w[v].label, forbidden);
        StateSet acc = forbidden;
        for (int c : w[v].kids) {
            self(self, c, acc);
            acc = set_union(acc, w[c].label);
        }
    };
    prune(prune, 0, {});

    std::uint32_t red = 0;
    auto mark_red = [&](std::uint32_t name, bool fresh) {
        if (!fresh && (red == 0 || name < red)) red = name;
    };
    auto drop_subtree = [&](auto&& self, int v) -> void {
        mark_red(w[v].name, w[v].fresh);
        for (int c : w[v].kids) self(self, c);
        w[v].kids.clear();
    };
    std::vector<char> alive(w.size(), 1);
    auto remove_empty = [&](auto&& self, int v) -> void {
        std::vector<int> keep;
        for (int c : w[v].kids) {
            if (w[c].label.empty()) {
                drop_subtree(drop_subtree, c);
                alive[c] = 0;
                continue;
            }
            self(self, c);
            keep.push_back(c);
        }
        w[v].kids = std::move(keep);
    };
    if (w[0].label.empty()) return out;
    remove_empty(remove_empty, 0);

    std::uint32_t green = 0;
    auto vertical = [&](auto&& self, int v) -> void {
        if (w[v].kids.empty()) return;
        StateSet u;
        for (int c : w[v].kids) u = set_union(u, w[c].label);
        if (u == w[v].label) {
            for (int c : w[v].kids) drop_subtree(drop_subtree, c);
            w[v].kids.clear();
            if (!w[v].fresh && (green == 0 || w[v].name < green)) green = w[v].name;
            return;
        }
        for (int c : w[v].kids) self(self, c);
    };
    vertical(vertical, 0);

    std::vector<std::uint32_t> names;
    auto collect = [&](auto&& self, int v) -> void {
        names.push_back(w[v].name);
        for (int c : w[v].kids) self(self, c);
    };
    collect(collect, 0);
    std::sort(names.begin(), names.end());
    auto rename = [&](std::uint32_t x) {
        return static_cast<std::uint32_t>(std::lower_bound(names.begin(), names.end(), x) - names.begin() + 1);
    };
    auto emit = [&](auto&& self, int v, int parent) -> void {
        int idx = static_cast<int>(out.tree.nodes.size());
        out.tree.nodes.push_back({rename(w[v].name), parent, w[v].label});
        for (int c : w[v].kids) self(self, c, idx);
    };
    emit(emit, 0, -1);

    const unsigned nn = static_cast<unsigned>(n);
    if (green != 0 && (red == 0 || green < red))
        out.priority = 2 * (nn + 1 - green);
    else if (red != 0)
        out.priority = 2 * (nn + 1 - red) + 1;
    else
        out.priority = 1;
    return out;
}

DPA determinize(const NBA& in, std::size_t budget) {
    in.validate();
    const NBA a = complete(in);
    const std::size_t k = a.alphabet.size();
    DPA d;
    d.alphabet = a.alphabet;
    std::map<std::pair<std::vector<std::uint32_t>, unsigned>, StateId> index;
    std::vector<std::pair<SafraTree, unsigned>> states;
    auto get = [&](SafraTree t, unsigned prio) {
        auto key = std::make_pair(t.encode(), prio);
        auto [it, fresh] = index.emplace(std::move(key), static_cast<StateId>(states.size()));
        if (fresh) {
            if (states.size() >= budget) throw BudgetError("determinization exceeded the state budget");
            states.emplace_back(std::move(t), prio);
        }
        return it->second;
    };
    d.initial = get(safra_initial(a.initial), 1);
    for (std::size_t i = 0; i < states.size(); ++i) {
        std::vector<StateId> row(k);
        for (LetterId l = 0; l < k; ++l) {
            auto succ = [&](StateId q) -> const StateSet& { return a.delta[q][l]; };
            auto st = safra_step(states[i].first, succ, a.accepting, a.states);
            row[l] = get(std::move(st.tree), st.priority);
        }
        d.delta.push_back(std::move(row));
    }
    d.states = states.size();
    for (const auto& s : states) d.priority.push_back(s.second);
    return d;
}

DetMuller dpa_to_detmuller(const DPA& d) { return to_det_muller(d); }

namespace {

void normalize_priorities(const Adjacency& g, const std::vector<unsigned>& old, std::vector<char> keep,
                          std::vector<unsigned>& out) {
    auto scc = strongly_connected(g, keep);
    auto cyclic = nontrivial_components(g, scc);
    std::vector<std::vector<std::uint32_t>> members(static_cast<std::size_t>(scc.count));
    for (std::uint32_t v = 0; v < g.size(); ++v)
        if (scc.comp[v] >= 0) members[static_cast<std::size_t>(scc.comp[v])].push_back(v);
    for (int c = 0; c < scc.count; ++c) {
        const auto& m = members[static_cast<std::size_t>(c)];
        if (!cyclic[static_cast<std::size_t>(c)]) {
            for (auto v : m) out[v] = 0;
            continue;
        }
        unsigned top = 0;
        for (auto v : m) top = std::max(top, old[v]);
        std::vector<char> sub(g.size(), 0);
        for (auto v : m)
            if (old[v] != top) sub[v] = 1;
        normalize_priorities(g, old, sub, out);
        unsigned below = 0;
        bool any = false;
        for (auto v : m)
            if (sub[v]) {
                below = std::max(below, out[v]);
                any = true;
            }
        unsigned p = any ? below : 0;
        if (p % 2 != top % 2) ++p;
        for (auto v : m)
            if (!sub[v]) out[v] = p;
    }
}

}  // namespace

DPA minimize_dpa(const DPA& in) {
    in.validate();
    const std::size_t n = in.states, k = in.alphabet.size();
    Adjacency g(n);
    for (StateId q = 0; q < n; ++q)
        for (LetterId l = 0; l < k; ++l) g[q].push_back(in.delta[q][l]);
    auto reach = reachable_from(g, {in.initial});
    std::vector<unsigned> prio(n, 0);
    normalize_priorities(g, in.priority, reach, prio);
    std::vector<std::size_t> block(n, 0);
    std::size_t count = 0;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> next(n, 0);
        for (StateId q = 0; q < n; ++q) {
            if (!reach[q]) continue;
            std::vector<std::size_t> sig{prio[q], block[q]};
            for (LetterId l = 0; l < k; ++l) sig.push_back(block[in.delta[q][l]]);
            next[q] = ids.emplace(std::move(sig), ids.size()).first->second;
        }
        block = std::move(next);
        if (ids.size() == count) break;
        count = ids.size();
    }
    DPA out;
    out.alphabet = in.alphabet;
    out.states = count;
    out.initial = static_cast<StateId>(block[in.initial]);
    out.delta.assign(count, std::vector<StateId>(k, 0));
    out.priority.assign(count, 0);
    for (StateId q = 0; q < n; ++q) {
        if (!reach[q]) continue;
        out.priority[block[q]] = prio[q];
        for (LetterId l = 0; l < k; ++l) out.delta[block[q]][l] = static_cast<StateId>(block[in.delta[q][l]]);
    }
    return out;
}

NBA dpa_to_nba(const DPA& in) {
    in.validate();
    std::vector<unsigned> evens;
    for (auto p : in.priority)
        if (p % 2 == 0) evens.push_back(p);
    std::sort(evens.begin(), evens.end());
    evens.erase(std::unique(evens.begin(), evens.end()), evens.end());
    // State (q, mode): mode 0 = waiting, mode i+1 = committed to evens[i].
    const std::size_t modes = evens.size() + 1;
    const std::size_t nq = in.states;
    NBA out(in.alphabet, nq * modes);
    auto id = [&](StateId q, std::size_t m) { return static_cast<StateId>(q * modes + m); };
    out.initial = {id(in.initial, 0)};
    for (StateId q = 0; q < nq; ++q) {
        for (std::size_t m = 1; m < modes; ++m)
            out.accepting[id(q, m)] = in.priority[q] == evens[m - 1];
        for (LetterId l = 0; l < in.alphabet.size(); ++l) {
            StateId r = in.delta[q][l];
            out.add_edge(id(q, 0), l, id(r, 0));
            for (std::size_t m = 1; m < modes; ++m) {
                if (in.priority[r] > evens[m - 1]) continue;
                out.add_edge(id(q, 0), l, id(r, m));
                if (in.priority[q] <= evens[m - 1]) out.add_edge(id(q, m), l, id(r, m));
            }
        }
    }
    return trim(out);
}

NBA complement_nba(const NBA& a, std::size_t budget) {
    DPA d = determinize(a, budget);
    for (auto& p : d.priority) ++p;
    return dpa_to_nba(d);
}

}  // namespace baire
