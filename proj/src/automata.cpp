#include "baire/automata.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "baire/graph.hpp"

namespace baire {

void validate(const LassoWord& w, const Alphabet& a) {
    if (w.cycle.empty()) throw Error("lasso cycle must be nonempty");
    for (auto x : w.prefix) a.check_letter(x);
    for (auto x : w.cycle) a.check_letter(x);
}

LassoWord canonical(const LassoWord& w) {
    if (w.cycle.empty()) throw Error("lasso cycle must be nonempty");
    LassoWord c = w;
    const std::size_t n = c.cycle.size();
    for (std::size_t p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i) periodic = c.cycle[i] == c.cycle[i - p];
        if (periodic) {
            c.cycle.resize(p);
            break;
        }
    }
    while (!c.prefix.empty() && c.prefix.back() == c.cycle.back()) {
        c.prefix.pop_back();
        std::rotate(c.cycle.rbegin(), c.cycle.rbegin() + 1, c.cycle.rend());
    }
    return c;
}

NBA::NBA(Alphabet a, std::size_t n) : alphabet(std::move(a)), states(n) {
    delta.assign(n, std::vector<StateSet>(alphabet.size()));
    accepting.assign(n, false);
}

void NBA::add_edge(StateId from, LetterId a, StateId to) {
    auto& v = delta.at(from).at(a);
    auto it = std::lower_bound(v.begin(), v.end(), to);
    if (it == v.end() || *it != to) v.insert(it, to);
}

void NBA::validate() const {
    if (initial.empty()) throw Error("NBA needs an initial state");
    if (delta.size() != states || accepting.size() != states) throw Error("NBA tables do not match state count");
    for (auto q : initial)
        if (q >= states) throw Error("initial state out of range");
    for (const auto& row : delta) {
        if (row.size() != alphabet.size()) throw Error("NBA transition row does not match alphabet");
        for (const auto& succ : row)
            for (auto q : succ)
                if (q >= states) throw Error("NBA successor out of range");
    }
}

namespace {

void validate_det(const Alphabet& alphabet, std::size_t states, StateId initial,
                  const std::vector<std::vector<StateId>>& delta) {
    if (states == 0) throw Error("automaton needs at least one state");
    if (initial >= states) throw Error("initial state out of range");
    if (delta.size() != states) throw Error("transition table does not match state count");
    for (const auto& row : delta) {
        if (row.size() != alphabet.size()) throw Error("deterministic automaton must be total");
        for (auto q : row)
            if (q >= states) throw Error("successor out of range");
    }
}

void validate_condition(const MullerCondition& c, std::size_t states) {
    if (c.referenced_states() > states) throw Error("acceptance condition refers to unknown states");
    if (const auto* fam = c.family())
        for (const auto& s : *fam)
            if (s.empty()) throw Error("Muller family members must be nonempty");
}

}  // namespace

void DetMuller::validate() const {
    validate_det(alphabet, states, initial, delta);
    validate_condition(condition, states);
}

void DPA::validate() const {
    validate_det(alphabet, states, initial, delta);
    if (priority.size() != states) throw Error("priority table does not match state count");
}

void AltMuller::validate() const {
    if (states == 0) throw Error("automaton needs at least one state");
    if (initial >= states) throw Error("initial state out of range");
    if (delta.size() != states) throw Error("transition table does not match state count");
    for (const auto& row : delta) {
        if (row.size() != alphabet.size()) throw Error("every state-letter pair needs an expression");
        for (const auto& e : row) baire::validate(e, states, false);
    }
    validate_condition(condition, states);
}

bool lasso_membership_nba(const NBA& a, const LassoWord& w) {
    validate(w, a.alphabet);
    const std::size_t n = w.length();
    const std::size_t total = a.states * n;
    auto id = [&](StateId q, std::size_t i) { return q * n + i; };
    // Reachable product nodes.
    std::vector<char> reach(total, 0);
    std::vector<std::size_t> stack;
    for (auto q : a.initial) {
        reach[id(q, 0)] = 1;
        stack.push_back(id(q, 0));
    }
    auto succs = [&](std::size_t v, auto&& f) {
        StateId q = static_cast<StateId>(v / n);
        std::size_t i = v % n;
        for (auto r : a.delta[q][w.at(i)]) f(id(r, w.next(i)));
    };
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        succs(v, [&](std::size_t u) {
            if (!reach[u]) {
                reach[u] = 1;
                stack.push_back(u);
            }
        });
    }
    Adjacency g(total);
    for (std::size_t v = 0; v < total; ++v)
        if (reach[v]) succs(v, [&](std::size_t u) { g[v].push_back(static_cast<std::uint32_t>(u)); });
    auto scc = strongly_connected(g, reach);
    auto cyc = nontrivial_components(g, scc);
    for (std::size_t v = 0; v < total; ++v)
        if (reach[v] && a.accepting[v / n] && cyc[scc.comp[v]]) return true;
    return false;
}

StateSet run_inf_set(const std::vector<std::vector<StateId>>& delta, StateId init, const LassoWord& w) {
    std::map<std::pair<StateId, std::size_t>, std::size_t> seen;
    std::vector<StateId> trace;
    StateId q = init;
    std::size_t i = 0;
    while (true) {
        auto key = std::make_pair(q, i);
        auto it = seen.find(key);
        if (it != seen.end() && i >= w.prefix.size()) {
            StateSet s(trace.begin() + static_cast<std::ptrdiff_t>(it->second), trace.end());
            normalize(s);
            return s;
        }
        seen[key] = trace.size();
        trace.push_back(q);
        q = delta[q][w.at(i)];
        i = w.next(i);
    }
}

bool lasso_membership(const DetMuller& a, const LassoWord& w) {
    validate(w, a.alphabet);
    return a.condition.accepts(run_inf_set(a.delta, a.initial, w));
}

bool lasso_membership(const DPA& a, const LassoWord& w) {
    validate(w, a.alphabet);
    unsigned best = 0;
    for (auto q : run_inf_set(a.delta, a.initial, w)) best = std::max(best, a.priority[q]);
    return best % 2 == 0;
}

NBA complete(const NBA& a) {
    a.validate();
    bool total = true;
    for (const auto& row : a.delta)
        for (const auto& s : row)
            if (s.empty()) total = false;
    if (total) return a;
    NBA out = a;
    StateId sink = static_cast<StateId>(a.states);
    out.states = a.states + 1;
    out.delta.push_back(std::vector<StateSet>(a.alphabet.size()));
    out.accepting.push_back(false);
    for (std::size_t q = 0; q < out.states; ++q)
        for (auto& s : out.delta[q])
            if (s.empty()) s.push_back(sink);
    return out;
}

DetMuller complete(const DetMuller& a) {
    a.validate();
    return a;
}

DPA complete(const DPA& a) {
    a.validate();
    return a;
}

PairCombinator intersection_preset() {
    return [](const DetMuller& a, const StateSet& sa, const DetMuller& b, const StateSet& sb) {
        return a.condition.accepts(sa) && b.condition.accepts(sb);
    };
}

PairCombinator union_preset() {
    return [](const DetMuller& a, const StateSet& sa, const DetMuller& b, const StateSet& sb) {
        return a.condition.accepts(sa) || b.condition.accepts(sb);
    };
}

DetMuller product_det(const DetMuller& a, const DetMuller& b, const PairCombinator& combine) {
    a.validate();
    b.validate();
    if (!(a.alphabet == b.alphabet)) throw Error("product of automata over different alphabets");
    std::map<std::pair<StateId, StateId>, StateId> index;
    std::vector<std::pair<StateId, StateId>> pairs;
    auto get = [&](StateId p, StateId q) {
        auto [it, fresh] = index.emplace(std::make_pair(p, q), static_cast<StateId>(pairs.size()));
        if (fresh) pairs.emplace_back(p, q);
        return it->second;
    };
    DetMuller out;
    out.alphabet = a.alphabet;
    out.initial = get(a.initial, b.initial);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        std::vector<StateId> row;
        for (LetterId x = 0; x < a.alphabet.size(); ++x)
            row.push_back(get(a.delta[pairs[i].first][x], b.delta[pairs[i].second][x]));
        out.delta.push_back(std::move(row));
    }
    out.states = pairs.size();
    if (out.states > 20) throw BudgetError("product too large for an explicit Muller family");
    std::vector<StateSet> fam;
    for (std::uint32_t mask = 1; mask < (1u << out.states); ++mask) {
        StateSet sa, sb;
        for (std::size_t i = 0; i < out.states; ++i)
            if (mask >> i & 1u) {
                sa.push_back(pairs[i].first);
                sb.push_back(pairs[i].second);
            }
        normalize(sa);
        normalize(sb);
        if (combine(a, sa, b, sb)) {
            StateSet s;
            for (std::size_t i = 0; i < out.states; ++i)
                if (mask >> i & 1u) s.push_back(static_cast<StateId>(i));
            fam.push_back(std::move(s));
        }
    }
    out.condition = MullerCondition::explicit_family(std::move(fam));
    return out;
}

namespace {

LarRecord lar_update(const LarRecord& r, StateId q) {
    LarRecord out;
    auto it = std::find(r.perm.begin(), r.perm.end(), q);
    out.hit = static_cast<std::uint32_t>(it - r.perm.begin());
    out.perm.reserve(r.perm.size());
    out.perm.push_back(q);
    for (auto x : r.perm)
        if (x != q) out.perm.push_back(x);
    return out;
}

unsigned lar_priority(const LarRecord& r, const MullerCondition& c) {
    StateSet s(r.perm.begin(), r.perm.begin() + r.hit + 1);
    normalize(s);
    return 2 * r.hit + (c.accepts(s) ? 2 : 1);
}

LarRecord lar_initial(std::size_t n, StateId q0) {
    LarRecord r;
    r.perm.push_back(q0);
    for (StateId q = 0; q < n; ++q)
        if (q != q0) r.perm.push_back(q);
    r.hit = 0;
    return r;
}

}  // namespace

LarDPA lar_transform(const DetMuller& a) {
    a.validate();
    const std::size_t budget = default_budget();
    LarDPA out;
    std::map<LarRecord, StateId> index;
    auto get = [&](const LarRecord& r) {
        auto [it, fresh] = index.emplace(r, static_cast<StateId>(out.records.size()));
        if (fresh) {
            if (out.records.size() >= budget) throw BudgetError("LAR construction exceeded the state budget");
            out.records.push_back(r);
        }
        return it->second;
    };
    out.dpa.alphabet = a.alphabet;
    out.dpa.initial = get(lar_initial(a.states, a.initial));
    for (std::size_t i = 0; i < out.records.size(); ++i) {
        std::vector<StateId> row;
        for (LetterId x = 0; x < a.alphabet.size(); ++x) {
            StateId q = out.records[i].perm.front();
            row.push_back(get(lar_update(out.records[i], a.delta[q][x])));
        }
        out.dpa.delta.push_back(std::move(row));
    }
    out.dpa.states = out.records.size();
    for (const auto& r : out.records) out.dpa.priority.push_back(lar_priority(r, a.condition));
    return out;
}

LarAlt lar_transform(const AltMuller& a) {
    a.validate();
    const std::size_t budget = default_budget();
    LarAlt out;
    std::map<LarRecord, StateId> index;
    auto get = [&](const LarRecord& r) {
        auto [it, fresh] = index.emplace(r, static_cast<StateId>(out.records.size()));
        if (fresh) {
            if (out.records.size() >= budget) throw BudgetError("LAR construction exceeded the state budget");
            out.records.push_back(r);
        }
        return it->second;
    };
    auto& b = out.automaton;
    b.alphabet = a.alphabet;
    b.initial = get(lar_initial(a.states, a.initial));
    for (std::size_t i = 0; i < out.records.size(); ++i) {
        std::vector<Expr> row;
        for (LetterId x = 0; x < a.alphabet.size(); ++x) {
            LarRecord r = out.records[i];
            StateId q = r.perm.front();
            row.push_back(map_atoms(a.delta[q][x], [&](const Atom& at) {
                return Atom{Dir::None, get(lar_update(r, at.state))};
            }));
        }
        b.delta.push_back(std::move(row));
    }
    b.states = out.records.size();
    std::vector<unsigned> prio;
    for (const auto& r : out.records) prio.push_back(lar_priority(r, a.condition));
    b.condition = MullerCondition::parity(std::move(prio));
    return out;
}

DetMuller to_det_muller(const DPA& d) {
    d.validate();
    DetMuller m;
    m.alphabet = d.alphabet;
    m.states = d.states;
    m.initial = d.initial;
    m.delta = d.delta;
    m.condition = MullerCondition::parity(d.priority);
    return m;
}

AltMuller to_alternating(const DetMuller& a) {
    a.validate();
    AltMuller b;
    b.alphabet = a.alphabet;
    b.states = a.states;
    b.initial = a.initial;
    b.condition = a.condition;
    for (std::size_t q = 0; q < a.states; ++q) {
        std::vector<Expr> row;
        for (auto r : a.delta[q]) row.push_back(Expr::make_atom(r));
        b.delta.push_back(std::move(row));
    }
    return b;
}

AltMuller to_alternating(const NBA& in) {
    NBA a = complete(in);
    AltMuller b;
    b.alphabet = a.alphabet;
    const bool fresh = a.initial.size() > 1;
    b.states = a.states + (fresh ? 1 : 0);
    b.initial = fresh ? static_cast<StateId>(a.states) : a.initial.front();
    auto disj = [](const StateSet& s) {
        std::vector<Expr> kids;
        for (auto r : s) kids.push_back(Expr::make_atom(r));
        return Expr::make_or(std::move(kids));
    };
    for (std::size_t q = 0; q < a.states; ++q) {
        std::vector<Expr> row;
        for (const auto& s : a.delta[q]) row.push_back(disj(s));
        b.delta.push_back(std::move(row));
    }
    std::vector<unsigned> prio;
    for (std::size_t q = 0; q < a.states; ++q) prio.push_back(a.accepting[q] ? 2 : 1);
    if (fresh) {
        std::vector<Expr> row;
        for (LetterId x = 0; x < a.alphabet.size(); ++x) {
            StateSet s;
            for (auto i : a.initial) s = set_union(s, a.delta[i][x]);
            row.push_back(disj(s));
        }
        b.delta.push_back(std::move(row));
        prio.push_back(1);
    }
    b.condition = MullerCondition::parity(std::move(prio));
    return b;
}

std::vector<LassoWord> all_lassos(std::size_t letters, std::size_t max_len) {
    std::vector<LassoWord> out;
    std::vector<std::vector<std::vector<LetterId>>> by_len{{{}}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<LetterId>> next;
        for (const auto& w : by_len.back())
            for (LetterId x = 0; x < letters; ++x) {
                auto v = w;
                v.push_back(x);
                next.push_back(std::move(v));
            }
        by_len.push_back(std::move(next));
    }
    for (std::size_t lu = 0; lu < max_len; ++lu)
        for (std::size_t lv = 1; lu + lv <= max_len; ++lv)
            for (const auto& u : by_len[lu])
                for (const auto& v : by_len[lv]) out.push_back(LassoWord{u, v});
    return out;
}

namespace {

Expr dual_expr(const Expr& e) {
    if (e.kind == Expr::Kind::Atom) return e;
    std::vector<Expr> kids;
    for (const auto& k : e.kids) kids.push_back(dual_expr(k));
    return Expr::make(e.kind == Expr::Kind::And ? Expr::Kind::Or : Expr::Kind::And, std::move(kids));
}

}  // namespace

AltMuller dual(const AltMuller& a) {
    AltMuller d = a;
    for (auto& row : d.delta)
        for (auto& e : row) e = dual_expr(e);
    d.condition = MullerCondition::complement(a.condition);
    return d;
}

}  // namespace baire
