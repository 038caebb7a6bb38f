#include "baire/tree.hpp"

#include <algorithm>
#include <set>

#include "baire/category.hpp"
#include "baire/graph.hpp"

namespace baire {

void AltTree::validate() const {
    if (states == 0) throw Error("tree automaton without states");
    if (initial >= states) throw Error("initial state out of range");
    if (delta.size() != states) throw Error("transition table has wrong number of states");
    for (const auto& row : delta) {
        if (row.size() != alphabet.size()) throw Error("transition table is not total");
        for (const auto& e : row) baire::validate(e, states, true);
    }
    if (condition.referenced_states() > states) throw Error("acceptance condition refers to unknown states");
}

void GameAutomaton::validate() const {
    if (states == 0) throw Error("game automaton without states");
    if (initial >= states) throw Error("initial state out of range");
    if (delta.size() != states) throw Error("transition table has wrong number of states");
    for (const auto& row : delta) {
        if (row.size() != alphabet.size()) throw Error("transition table is not total");
        for (const auto& t : row) {
            if (t.op == Expr::Kind::Atom) throw Error("game transition needs an operator");
            if (t.left >= states || t.right >= states) throw Error("game transition refers to unknown state");
        }
    }
    if (condition.referenced_states() > states) throw Error("acceptance condition refers to unknown states");
}

bool GameAutomaton::deterministic() const {
    for (const auto& row : delta)
        for (const auto& t : row)
            if (t.op != Expr::Kind::And) return false;
    return true;
}

AltTree GameAutomaton::to_alternating() const {
    validate();
    AltTree a;
    a.alphabet = alphabet;
    a.states = states;
    a.initial = initial;
    a.condition = condition;
    a.delta.assign(states, std::vector<Expr>(alphabet.size()));
    for (StateId q = 0; q < states; ++q)
        for (LetterId x = 0; x < alphabet.size(); ++x) {
            const auto& t = delta[q][x];
            Expr e;
            e.kind = t.op;
            e.kids = {Expr::make_atom(t.left, Dir::L), Expr::make_atom(t.right, Dir::R)};
            a.delta[q][x] = std::move(e);
        }
    return a;
}

std::optional<GameAutomaton> as_game_automaton(const AltTree& a) {
    a.validate();
    GameAutomaton g;
    g.alphabet = a.alphabet;
    g.states = a.states;
    g.initial = a.initial;
    g.condition = a.condition;
    g.delta.assign(a.states, std::vector<GameTransition>(a.alphabet.size()));
    for (StateId q = 0; q < a.states; ++q)
        for (LetterId x = 0; x < a.alphabet.size(); ++x) {
            const Expr& e = a.delta[q][x];
            if (e.kind == Expr::Kind::Atom || e.kids.size() != 2) return std::nullopt;
            const Expr& l = e.kids[0];
            const Expr& r = e.kids[1];
            if (l.kind != Expr::Kind::Atom || r.kind != Expr::Kind::Atom) return std::nullopt;
            if (l.atom.dir != Dir::L || r.atom.dir != Dir::R) return std::nullopt;
            g.delta[q][x] = GameTransition{e.kind, l.atom.state, r.atom.state};
        }
    return g;
}

std::uint32_t RegularTree::add(LetterId a, std::string name) {
    auto id = static_cast<std::uint32_t>(label.size());
    label.push_back(a);
    left.push_back(id);
    right.push_back(id);
    names.push_back(name.empty() ? std::to_string(id) : std::move(name));
    return id;
}

void RegularTree::validate() const {
    if (label.empty()) throw Error("regular tree without nodes");
    if (left.size() != label.size() || right.size() != label.size()) throw Error("regular tree children are not total");
    for (std::size_t v = 0; v < label.size(); ++v) {
        alphabet.check_letter(label[v]);
        if (left[v] >= label.size() || right[v] >= label.size()) throw Error("regular tree child out of range");
    }
}

RegularTree constant_tree(const Alphabet& a, LetterId letter) {
    RegularTree t;
    t.alphabet = a;
    t.add(letter);
    t.validate();
    return t;
}

bool TreePrefix::valid() const {
    if (!label.count("")) return false;
    for (const auto& [v, a] : label) {
        if (!v.empty() && !label.count(v.substr(0, v.size() - 1))) return false;
        for (char c : v)
            if (c != 'L' && c != 'R') return false;
        if (label.count(v + "L") != label.count(v + "R")) return false;
    }
    return true;
}

std::vector<std::string> TreePrefix::leaves() const {
    std::vector<std::string> out;
    for (const auto& [v, a] : label)
        if (!label.count(v + "L")) out.push_back(v);
    return out;
}

bool extends(const TreePrefix& s, const TreePrefix& t) {
    for (const auto& [v, a] : s.label) {
        auto it = t.label.find(v);
        if (it == t.label.end() || it->second != a) return false;
    }
    for (const auto& leaf : s.leaves())
        if (!t.label.count(leaf + "L")) return false;
    return true;
}

TreeArena acceptance_arena_tree(const AltTree& a, const RegularTree& t) {
    a.validate();
    t.validate();
    if (!(a.alphabet == t.alphabet)) throw Error("tree labels do not match the automaton alphabet");
    TreeArena out;
    Arena& ar = out.arena;
    std::map<std::pair<std::uint32_t, StateId>, Position> state_pos;
    std::vector<std::pair<std::uint32_t, StateId>> todo;
    auto state_node = [&](std::uint32_t v, StateId q) {
        auto [it, fresh] = state_pos.emplace(std::make_pair(v, q), 0);
        if (fresh) {
            it->second = ar.add(PlayerTag::Exists, q, t.names[v] + ":q" + std::to_string(q));
            out.state_of.emplace_back(v, q);
            todo.emplace_back(v, q);
        }
        return it->second;
    };
    ar.initial = state_node(0, a.initial);
    while (!todo.empty()) {
        auto [v, q] = todo.back();
        todo.pop_back();
        Position sp = state_pos[{v, q}];
        auto build = [&](auto&& self, const Expr& e) -> Position {
            PlayerTag who = e.kind == Expr::Kind::And ? PlayerTag::Forall : PlayerTag::Exists;
            Position p = ar.add(who);
            out.state_of.emplace_back(static_cast<std::uint32_t>(-1), q);
            if (e.kind == Expr::Kind::Atom) {
                std::uint32_t child = e.atom.dir == Dir::L ? t.left[v] : t.right[v];
                Position target = state_node(child, e.atom.state);
                ar.succ[p].push_back(target);
            } else {
                for (const auto& k : e.kids) {
                    Position c = self(self, k);
                    ar.succ[p].push_back(c);
                }
            }
            return p;
        };
        Position r = build(build, a.delta[q][t.label[v]]);
        ar.succ[sp].push_back(r);
    }
    ar.muller = a.condition;
    return out;
}

bool tree_membership(const AltTree& a, const RegularTree& t) {
    auto g = acceptance_arena_tree(a, t);
    return solve_muller(g.arena).winner[g.arena.initial] == PlayerTag::Exists;
}

bool tree_membership(const GameAutomaton& a, const RegularTree& t) { return tree_membership(a.to_alternating(), t); }

AltTree build_b_tree(const GameAutomaton& a, const TrackSplit& split) {
    a.validate();
    if (split.sigma.size() * split.gamma.size() != a.alphabet.size())
        throw Error("alphabet not factorable into parameter and quantified letters");
    AltTree b;
    b.alphabet = split.sigma;
    b.states = 2 * a.states;
    b.initial = b_state(a.initial, PlayerTag::Forall);
    b.delta.assign(b.states, std::vector<Expr>(split.sigma.size()));
    std::vector<StateId> origin(b.states);
    std::vector<PlayerTag> tag(b.states);
    for (StateId q = 0; q < a.states; ++q)
        for (PlayerTag r : {PlayerTag::Exists, PlayerTag::Forall}) {
            StateId s = b_state(q, r);
            origin[s] = q;
            tag[s] = r;
            const auto kind = r == PlayerTag::Exists ? Expr::Kind::Or : Expr::Kind::And;
            for (LetterId x = 0; x < split.sigma.size(); ++x) {
                std::vector<Expr> outer;
                for (LetterId y = 0; y < split.gamma.size(); ++y) {
                    const auto& tr = a.delta[q][split.combine(x, y)];
                    std::vector<Expr> inner;
                    for (PlayerTag r2 : {PlayerTag::Exists, PlayerTag::Forall}) {
                        Expr e;
                        e.kind = tr.op;
                        e.kids = {Expr::make_atom(b_state(tr.left, r2), Dir::L),
                                  Expr::make_atom(b_state(tr.right, r2), Dir::R)};
                        inner.push_back(std::move(e));
                    }
                    outer.push_back(Expr::make(kind, std::move(inner)));
                }
                b.delta[s][x] = Expr::make(kind, std::move(outer));
            }
        }
    b.condition = MullerCondition::category_b(std::move(origin), std::move(tag), a.condition);
    return b;
}

AltTree build_b_tree(const GameAutomaton& a, const std::vector<std::string>& quantified) {
    return build_b_tree(a, split_tracks(a.alphabet, quantified));
}

TreeComeagerResult decide_comeager_tree(const GameAutomaton& a) {
    a.validate();
    if (a.alphabet.symbolic()) throw Error("comeager decision needs a track alphabet");
    TrackSplit split;
    split.sigma = Alphabet::tracks({});
    split.gamma = a.alphabet;
    split.gamma_bits = 0;
    TreeComeagerResult r;
    auto b = std::make_shared<AltTree>(build_b_tree(a, split));
    r.b = b;
    r.game = acceptance_arena_tree(*b, constant_tree(b->alphabet, 0));
    r.solution = solve_muller(r.game.arena);
    r.comeager = r.solution.winner[r.game.arena.initial] == PlayerTag::Exists;
    return r;
}

Alphabet direction_alphabet() { return Alphabet::symbols({"L", "R"}); }
Alphabet label_alphabet() { return Alphabet::tracks({"X"}); }

LassoWord f_transducer(const RegularTree& x) {
    x.validate();
    if (x.alphabet.track_count() != 1 || x.alphabet.symbolic()) throw Error("f expects a tree over one track");
    std::vector<int> seen(x.size(), -1);
    std::vector<LetterId> dirs;
    std::uint32_t v = 0;
    while (seen[v] < 0) {
        seen[v] = static_cast<int>(dirs.size());
        bool one = x.label[v] == 1;
        dirs.push_back(one ? 0 : 1);
        v = one ? x.left[v] : x.right[v];
    }
    auto start = static_cast<std::size_t>(seen[v]);
    LassoWord w{{dirs.begin(), dirs.begin() + static_cast<std::ptrdiff_t>(start)},
                {dirs.begin() + static_cast<std::ptrdiff_t>(start), dirs.end()}};
    return canonical(w);
}

RegularTree f_preimage_tree(const LassoWord& directions) {
    validate(directions, direction_alphabet());
    RegularTree t;
    t.alphabet = label_alphabet();
    const std::size_t n = directions.length();
    for (std::size_t i = 0; i < n; ++i) t.add(directions.at(i) == 0 ? 1 : 0);
    std::uint32_t sink = t.add(0);
    for (std::size_t i = 0; i < n; ++i) {
        auto next = static_cast<std::uint32_t>(directions.next(i));
        if (directions.at(i) == 0) {
            t.left[i] = next;
            t.right[i] = sink;
        } else {
            t.left[i] = sink;
            t.right[i] = next;
        }
    }
    t.validate();
    return t;
}

namespace {

// Probability that independent fair labels satisfy all node constraints.
mpq_class constraint_measure(const std::vector<std::pair<std::string, bool>>& constraints) {
    std::map<std::string, bool> fixed;
    for (const auto& [node, one] : constraints) {
        auto [it, fresh] = fixed.emplace(node, one);
        if (!fresh && it->second != one) return 0;
    }
    mpz_class den = 1;
    den <<= static_cast<mp_bitcnt_t>(fixed.size());
    return mpq_class(1, den);
}

}  // namespace

mpq_class f_cylinder_preimage_measure(const std::vector<LetterId>& directions) {
    std::vector<std::pair<std::string, bool>> constraints;
    std::string node;
    for (auto d : directions) {
        if (d > 1) throw Error("direction letter out of range");
        constraints.emplace_back(node, d == 0);
        node += d == 0 ? 'L' : 'R';
    }
    return constraint_measure(constraints);
}

mpq_class leftmost_cylinder_preimage_measure(const std::vector<bool>& bits) {
    std::vector<std::pair<std::string, bool>> constraints;
    for (std::size_t i = 0; i < bits.size(); ++i) constraints.emplace_back(std::string(i, 'L'), bits[i]);
    return constraint_measure(constraints);
}

unsigned minimal_growth(unsigned n) {
    unsigned sum = 0;
    unsigned f = 0;
    for (unsigned k = 1; k <= n; ++k) {
        sum += f;
        f = k + sum + 1;
    }
    return f;
}

WitnessU1 witness_u1_tree(unsigned blocks) {
    if (blocks == 0) throw Error("witness needs at least one block");
    WitnessU1 w;
    for (unsigned k = 0; k <= blocks; ++k) w.growth.push_back(minimal_growth(k));
    const unsigned depth = w.growth.back();
    if (depth > 16) throw BudgetError("witness prefix deeper than 16 levels");
    auto block_of = [&](std::size_t d) {
        unsigned k = 0;
        while (k + 1 < w.growth.size() && w.growth[k + 1] <= d) ++k;
        return k;
    };
    // Leftmost vertex of the block tree containing v: v truncated to the
    // block start, then left turns down to the last level of the block.
    auto marked = [&](const std::string& v) {
        unsigned k = block_of(v.size());
        if (k >= blocks) return false;
        std::size_t start = w.growth[k], last = w.growth[k + 1] - 1;
        if (v.size() != last) return false;
        return std::all_of(v.begin() + static_cast<std::ptrdiff_t>(start), v.end(), [](char c) { return c == 'L'; });
    };
    std::vector<std::string> level{""};
    for (unsigned d = 0; d <= depth; ++d) {
        std::vector<std::string> next;
        for (const auto& v : level) {
            w.prefix.label[v] = marked(v) ? 1 : 0;
            if (d < depth) {
                next.push_back(v + "L");
                next.push_back(v + "R");
            }
        }
        level = std::move(next);
    }
    w.partial_sum = 0;
    for (unsigned k = 0; k < blocks; ++k) {
        mpz_class den = 1;
        den <<= w.growth[k + 1] - w.growth[k];
        w.partial_sum += mpq_class(1, den);
    }
    // Hit probability of block k and 1-below checks, bottom-up.
    std::map<std::string, mpq_class> hit;
    std::map<std::string, bool> one_below;
    std::vector<std::string> order;
    for (const auto& [v, a] : w.prefix.label) order.push_back(v);
    std::sort(order.begin(), order.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    for (const auto& v : order) {
        bool one = w.prefix.label[v] == 1;
        bool internal = w.prefix.label.count(v + "L") > 0;
        one_below[v] = one || (internal && (one_below[v + "L"] || one_below[v + "R"]));
        unsigned k = block_of(v.size());
        bool last_level = v.size() + 1 == (k < blocks ? w.growth[k + 1] : depth + 1);
        if (one)
            hit[v] = 1;
        else if (!internal || last_level)
            hit[v] = 0;
        else
            hit[v] = (hit[v + "L"] + hit[v + "R"]) / 2;
    }
    w.forest_marked = true;
    w.lower_blocks_see_one = true;
    for (unsigned k = 0; k < blocks; ++k) {
        mpq_class p = 0;
        mpz_class den = 1;
        den <<= w.growth[k];
        for (const auto& v : order) {
            if (v.size() != w.growth[k]) continue;
            p += hit[v] / den;
            if (hit[v] == 0) w.forest_marked = false;
        }
        w.hit_probability.push_back(p);
    }
    for (const auto& v : order)
        if (block_of(v.size()) + 1 < blocks && !one_below[v]) w.lower_blocks_see_one = false;
    return w;
}

namespace {

Adjacency tree_graph(const RegularTree& t) {
    Adjacency g(t.size());
    for (std::size_t v = 0; v < t.size(); ++v) {
        g[v] = {t.left[v], t.right[v]};
        std::sort(g[v].begin(), g[v].end());
        g[v].erase(std::unique(g[v].begin(), g[v].end()), g[v].end());
    }
    return g;
}

bool is_one(const RegularTree& t, std::uint32_t v) {
    if (t.alphabet.symbolic() || t.alphabet.track_count() != 1) throw Error("expected a tree over one track");
    return t.label[v] == 1;
}

}  // namespace

bool regular_tree_infinitely_ones(const RegularTree& t) {
    t.validate();
    auto g = tree_graph(t);
    auto reach = reachable_from(g, {0});
    auto scc = strongly_connected(g, reach);
    auto bottom = bottom_components(g, scc);
    std::vector<char> has_one(static_cast<std::size_t>(scc.count), 0);
    for (std::uint32_t v = 0; v < t.size(); ++v)
        if (reach[v] && is_one(t, v)) has_one[static_cast<std::size_t>(scc.comp[v])] = 1;
    for (int c = 0; c < scc.count; ++c)
        if (bottom[c] && !has_one[c]) return false;
    return true;
}

bool regular_tree_every_node_sees_one(const RegularTree& t) {
    t.validate();
    auto g = tree_graph(t);
    auto reach = reachable_from(g, {0});
    for (std::uint32_t v = 0; v < t.size(); ++v) {
        if (!reach[v]) continue;
        auto below = reachable_from(g, {v});
        bool found = false;
        for (std::uint32_t u = 0; u < t.size() && !found; ++u) found = below[u] && is_one(t, u);
        if (!found) return false;
    }
    return true;
}

AltTree one_below_everywhere() {
    // 0: check every node, 1: search for a 1, 2: satisfied.
    AltTree a;
    a.alphabet = label_alphabet();
    a.states = 3;
    a.initial = 0;
    auto both = [](StateId q) { return Expr::make_and({Expr::make_atom(q, Dir::L), Expr::make_atom(q, Dir::R)}); };
    auto either = [](StateId q) { return Expr::make_or({Expr::make_atom(q, Dir::L), Expr::make_atom(q, Dir::R)}); };
    a.delta = {{Expr::make_and({both(0), either(1)}), both(0)}, {either(1), both(2)}, {both(2), both(2)}};
    a.condition = MullerCondition::explicit_family({{0}, {2}});
    a.validate();
    return a;
}

GameAutomaton dense_ones_game() {
    GameAutomaton g;
    g.alphabet = label_alphabet();
    g.states = 2;
    g.initial = 0;
    GameTransition zero{Expr::Kind::Or, 0, 0}, one{Expr::Kind::And, 1, 1};
    g.delta = {{zero, one}, {zero, one}};
    g.condition = MullerCondition::explicit_family({{1}, {0, 1}});
    g.validate();
    return g;
}

GameAutomaton root_one_game() {
    GameAutomaton g;
    g.alphabet = label_alphabet();
    g.states = 3;
    g.initial = 0;
    GameTransition good{Expr::Kind::And, 1, 1}, bad{Expr::Kind::And, 2, 2};
    g.delta = {{bad, good}, {good, good}, {bad, bad}};
    g.condition = MullerCondition::explicit_family({{1}});
    g.validate();
    return g;
}

GameAutomaton full_tree_game(const Alphabet& a) {
    GameAutomaton g;
    g.alphabet = a;
    g.states = 1;
    g.delta.assign(1, std::vector<GameTransition>(a.size(), GameTransition{Expr::Kind::And, 0, 0}));
    g.condition = MullerCondition::explicit_family({{0}});
    g.validate();
    return g;
}

}  // namespace baire
