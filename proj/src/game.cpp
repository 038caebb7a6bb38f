#include "baire/game.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

#include "baire/graph.hpp"

namespace baire {

Position Arena::add(PlayerTag who, std::int64_t c, std::string name) {
    owner.push_back(who);
    succ.emplace_back();
    color.push_back(c);
    label.push_back(std::move(name));
    return static_cast<Position>(owner.size() - 1);
}

void Arena::validate() const {
    const std::size_t n = owner.size();
    if (n == 0) throw Error("arena without positions");
    if (succ.size() != n) throw Error("arena edge table size mismatch");
    if (initial >= n) throw Error("arena initial position out of range");
    for (const auto& s : succ) {
        if (s.empty()) throw Error("arena position without outgoing edge");
        for (auto q : s)
            if (q >= n) throw Error("arena edge to unknown position");
    }
    if (priority.has_value() == muller.has_value()) throw Error("arena needs exactly one of parity or Muller condition");
    if (priority && priority->size() != n) throw Error("arena priority table size mismatch");
    if (muller && color.size() != n) throw Error("arena color table size mismatch");
}

std::optional<Position> Strategy::choice(std::uint32_t m, Position p) const {
    auto it = choices.find((std::uint64_t{m} << 32) | p);
    if (it == choices.end()) return std::nullopt;
    return it->second;
}

void Strategy::set_choice(std::uint32_t m, Position p, Position to) { choices[(std::uint64_t{m} << 32) | p] = to; }

namespace {

struct ParitySolver {
    const std::vector<std::vector<Position>>& succ;
    std::vector<std::vector<Position>> pred;
    const std::vector<PlayerTag>& owner;
    const std::vector<unsigned>& prio;
    std::vector<PlayerTag> win;
    std::vector<std::int64_t> strat;

    ParitySolver(const std::vector<std::vector<Position>>& s, const std::vector<PlayerTag>& o,
                 const std::vector<unsigned>& p)
        : succ(s), pred(s.size()), owner(o), prio(p), win(s.size(), PlayerTag::Exists), strat(s.size(), -1) {
        for (Position v = 0; v < s.size(); ++v)
            for (auto w : s[v]) pred[w].push_back(v);
    }

    // Attractor of `target` for player i inside the subgame `in`; writes
    // attractor moves for i into strat.
    std::vector<Position> attractor(PlayerTag i, const std::vector<Position>& target, const std::vector<char>& in,
                                    std::vector<char>& attr) {
        std::vector<Position> out = target;
        std::map<Position, int> count;
        std::vector<Position> queue = target;
        for (auto v : target) attr[v] = 1;
        std::size_t head = 0;
        while (head < queue.size()) {
            Position w = queue[head++];
            for (auto v : pred[w]) {
                if (!in[v] || attr[v]) continue;
                if (owner[v] == i) {
                    attr[v] = 1;
                    strat[v] = w;
                    queue.push_back(v);
                    out.push_back(v);
                } else {
                    auto it = count.find(v);
                    if (it == count.end()) {
                        int c = 0;
                        for (auto x : succ[v])
                            if (in[x]) ++c;
                        it = count.emplace(v, c).first;
                    }
                    if (--it->second == 0) {
                        attr[v] = 1;
                        queue.push_back(v);
                        out.push_back(v);
                    }
                }
            }
        }
        return out;
    }

    void solve(const std::vector<Position>& game) {
        if (game.empty()) return;
        const std::size_t n = succ.size();
        std::vector<char> in(n, 0);
        unsigned d = 0;
        for (auto v : game) {
            in[v] = 1;
            d = std::max(d, prio[v]);
        }
        PlayerTag i = d % 2 == 0 ? PlayerTag::Exists : PlayerTag::Forall;
        std::vector<Position> top;
        for (auto v : game)
            if (prio[v] == d) top.push_back(v);
        std::vector<char> attr(n, 0);
        auto a = attractor(i, top, in, attr);
        std::vector<Position> rest;
        for (auto v : game)
            if (!attr[v]) rest.push_back(v);
        solve(rest);
        std::vector<Position> lost;
        for (auto v : rest)
            if (win[v] != i) lost.push_back(v);
        if (lost.empty()) {
            for (auto v : top)
                if (owner[v] == i)
                    for (auto w : succ[v])
                        if (in[w]) {
                            strat[v] = w;
                            break;
                        }
            for (auto v : game) win[v] = i;
            return;
        }
        std::vector<char> battr(n, 0);
        auto b = attractor(opponent(i), lost, in, battr);
        std::vector<Position> remain;
        for (auto v : game)
            if (!battr[v]) remain.push_back(v);
        solve(remain);
        for (auto v : b) win[v] = opponent(i);
    }
};

Strategy positional(const ParitySolver& s, PlayerTag player) {
    Strategy st;
    st.player = player;
    for (Position v = 0; v < s.succ.size(); ++v)
        if (s.owner[v] == player && s.win[v] == player && s.strat[v] >= 0)
            st.set_choice(0, v, static_cast<Position>(s.strat[v]));
    return st;
}

}  // namespace

GameSolution solve_parity(const Arena& ar) {
    ar.validate();
    if (!ar.priority) throw Error("solve_parity needs a parity arena");
    ParitySolver s(ar.succ, ar.owner, *ar.priority);
    std::vector<Position> all(ar.size());
    for (Position v = 0; v < all.size(); ++v) all[v] = v;
    s.solve(all);
    GameSolution out;
    out.winner = s.win;
    out.exists_strategy = positional(s, PlayerTag::Exists);
    out.forall_strategy = positional(s, PlayerTag::Forall);
    return out;
}

namespace {

StateSet arena_colors(const Arena& ar) {
    StateSet dom;
    for (auto c : ar.color)
        if (c >= 0) dom.push_back(static_cast<StateId>(c));
    normalize(dom);
    return dom;
}

// Memory of the Muller reduction: (Zielonka leaf, last emitted priority).
struct MullerMemory {
    std::shared_ptr<const ZielonkaAutomaton> za;
    std::vector<std::int64_t> color;
    std::uint32_t width = 1;

    std::uint32_t update(std::uint32_t m, Position p) const {
        std::uint32_t leaf = m / width;
        auto c = color[p];
        auto st = c >= 0 ? za->step(leaf, static_cast<StateId>(c)) : ZielonkaAutomaton::Step{leaf, za->neutral_priority()};
        return st.memory * width + st.priority;
    }
    unsigned priority(std::uint32_t m) const { return m % width; }
};

MullerMemory muller_memory(const Arena& ar) {
    MullerMemory mm;
    mm.za = std::make_shared<ZielonkaAutomaton>(*ar.muller, arena_colors(ar));
    mm.color = ar.color;
    mm.width = mm.za->max_priority() + 1;
    return mm;
}

}  // namespace

GameSolution solve_muller(const Arena& ar) {
    ar.validate();
    if (!ar.muller) throw Error("solve_muller needs a Muller arena");
    MullerMemory mm = muller_memory(ar);
    const std::size_t budget = std::max<std::size_t>(default_budget() * 40, 2000000);
    // Product positions (p, memory).
    std::map<std::pair<Position, std::uint32_t>, Position> index;
    std::vector<std::pair<Position, std::uint32_t>> nodes;
    auto get = [&](Position p, std::uint32_t m) {
        auto [it, fresh] = index.emplace(std::make_pair(p, m), static_cast<Position>(nodes.size()));
        if (fresh) {
            if (nodes.size() >= budget) throw BudgetError("Muller game product exceeded the state budget");
            nodes.emplace_back(p, m);
        }
        return it->second;
    };
    std::vector<Position> start(ar.size());
    for (Position p = 0; p < ar.size(); ++p) start[p] = get(p, mm.update(mm.za->initial() * mm.width, p));
    std::vector<std::vector<Position>> succ;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto [p, m] = nodes[i];
        std::vector<Position> out;
        for (auto q : ar.succ[p]) out.push_back(get(q, mm.update(m, q)));
        succ.push_back(std::move(out));
    }
    std::vector<PlayerTag> owner;
    std::vector<unsigned> prio;
    for (auto [p, m] : nodes) {
        owner.push_back(ar.owner[p]);
        prio.push_back(mm.priority(m));
    }
    ParitySolver s(succ, owner, prio);
    std::vector<Position> all(nodes.size());
    for (Position v = 0; v < all.size(); ++v) all[v] = v;
    s.solve(all);
    GameSolution out;
    out.winner.resize(ar.size());
    for (Position p = 0; p < ar.size(); ++p) out.winner[p] = s.win[start[p]];
    for (PlayerTag player : {PlayerTag::Exists, PlayerTag::Forall}) {
        Strategy st;
        st.player = player;
        st.memory_size = static_cast<std::uint32_t>(mm.za->memory_size() * mm.width);
        st.initial_memory = mm.za->initial() * mm.width;
        st.update_fn = [mm](std::uint32_t m, Position p) { return mm.update(m, p); };
        for (Position v = 0; v < nodes.size(); ++v)
            if (owner[v] == player && s.win[v] == player && s.strat[v] >= 0)
                st.set_choice(nodes[v].second, nodes[v].first, nodes[static_cast<std::size_t>(s.strat[v])].first);
        (player == PlayerTag::Exists ? out.exists_strategy : out.forall_strategy) = std::move(st);
    }
    return out;
}

GameSolution solve(const Arena& ar) { return ar.priority ? solve_parity(ar) : solve_muller(ar); }

bool arena_accepts(const Arena& ar, const StateSet& inf_positions) {
    if (ar.priority) {
        unsigned best = 0;
        for (auto p : inf_positions) best = std::max(best, (*ar.priority)[p]);
        return !inf_positions.empty() && best % 2 == 0;
    }
    StateSet colors;
    for (auto p : inf_positions)
        if (ar.color[p] >= 0) colors.push_back(static_cast<StateId>(ar.color[p]));
    normalize(colors);
    return ar.muller->accepts(colors);
}

Arena dual(const Arena& ar) {
    Arena d = ar;
    for (auto& o : d.owner) o = opponent(o);
    if (d.priority)
        for (auto& p : *d.priority) ++p;
    if (d.muller) d.muller = MullerCondition::complement(*ar.muller);
    return d;
}

bool check_strategy(const Arena& ar, const Strategy& s, PlayerTag player, std::size_t steps,
                    std::optional<Position> start) {
    ar.validate();
    if (s.player != player) throw Error("strategy belongs to the other player");
    std::optional<MullerMemory> mm;
    if (ar.muller) mm = muller_memory(ar);
    // Node: (position, strategy memory, condition memory).
    std::map<std::tuple<Position, std::uint32_t, std::uint32_t>, std::uint32_t> index;
    std::vector<std::tuple<Position, std::uint32_t, std::uint32_t>> nodes;
    auto get = [&](Position p, std::uint32_t m, std::uint32_t c) {
        auto key = std::make_tuple(p, m, c);
        auto [it, fresh] = index.emplace(key, static_cast<std::uint32_t>(nodes.size()));
        if (fresh) {
            if (nodes.size() >= steps) throw BudgetError("strategy check exceeded its exploration bound");
            nodes.push_back(key);
        }
        return it->second;
    };
    auto cond_update = [&](std::uint32_t c, Position p) -> std::uint32_t { return mm ? mm->update(c, p) : 0; };
    Position p0 = start.value_or(ar.initial);
    get(p0, s.update(s.initial_memory, p0), cond_update(mm ? mm->za->initial() * mm->width : 0, p0));
    Adjacency g;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto [p, m, c] = nodes[i];
        std::vector<std::uint32_t> out;
        if (ar.owner[p] == player) {
            auto q = s.choice(m, p);
            if (!q) throw Error("strategy undefined at position " + std::to_string(p));
            if (std::find(ar.succ[p].begin(), ar.succ[p].end(), *q) == ar.succ[p].end())
                throw Error("illegal strategy edge " + std::to_string(p) + " -> " + std::to_string(*q));
            out.push_back(get(*q, s.update(m, *q), cond_update(c, *q)));
        } else {
            for (auto q : ar.succ[p]) out.push_back(get(q, s.update(m, q), cond_update(c, q)));
        }
        g.push_back(std::move(out));
    }
    std::vector<unsigned> prio(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto [p, m, c] = nodes[i];
        prio[i] = mm ? mm->priority(c) : (*ar.priority)[p];
    }
    const unsigned bad_parity = player == PlayerTag::Exists ? 1 : 0;
    std::set<unsigned> levels;
    for (auto p : prio)
        if (p % 2 == bad_parity) levels.insert(p);
    for (auto k : levels) {
        std::vector<char> keep(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) keep[i] = prio[i] <= k;
        auto scc = strongly_connected(g, keep);
        auto cyc = nontrivial_components(g, scc);
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (keep[i] && prio[i] == k && cyc[scc.comp[i]]) return false;
    }
    return true;
}

WordArena acceptance_arena_word(const AltMuller& a, const LassoWord& w) {
    a.validate();
    validate(w, a.alphabet);
    WordArena out;
    Arena& ar = out.arena;
    std::map<std::pair<std::size_t, StateId>, Position> state_pos;
    std::vector<std::pair<std::size_t, StateId>> todo;
    auto state_node = [&](std::size_t i, StateId q) {
        auto [it, fresh] = state_pos.emplace(std::make_pair(i, q), 0);
        if (fresh) {
            it->second = ar.add(PlayerTag::Exists, q, std::to_string(i) + ":q" + std::to_string(q));
            out.info.push_back({i, q, true, nullptr});
            todo.emplace_back(i, q);
        }
        return it->second;
    };
    ar.initial = state_node(0, a.initial);
    while (!todo.empty()) {
        auto [i, q] = todo.back();
        todo.pop_back();
        Position sp = state_pos[{i, q}];
        const Expr& root = a.delta[q][w.at(i)];
        std::size_t nxt = w.next(i);
        // Expression nodes, built recursively.
        auto build = [&](auto&& self, const Expr& e, const std::string& path) -> Position {
            PlayerTag who = e.kind == Expr::Kind::And ? PlayerTag::Forall : PlayerTag::Exists;
            Position v = ar.add(who, -1, std::to_string(i) + ":q" + std::to_string(q) + "/" + path);
            out.info.push_back({i, q, false, &e});
            if (e.kind == Expr::Kind::Atom) {
                Position t = state_node(nxt, e.atom.state);
                ar.succ[v].push_back(t);
            } else {
                for (std::size_t k = 0; k < e.kids.size(); ++k) {
                    Position c = self(self, e.kids[k], path + std::to_string(k));
                    ar.succ[v].push_back(c);
                }
            }
            return v;
        };
        Position r = build(build, root, "");
        ar.succ[sp].push_back(r);
    }
    ar.muller = a.condition;
    return out;
}

Arena acceptance_arena(const AltMuller& a, const LassoWord& w) { return acceptance_arena_word(a, w).arena; }

bool lasso_membership(const AltMuller& a, const LassoWord& w) {
    auto ar = acceptance_arena(a, w);
    return solve_muller(ar).winner[ar.initial] == PlayerTag::Exists;
}

}  // namespace baire
