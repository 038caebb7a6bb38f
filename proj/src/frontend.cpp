#include "baire/frontend.hpp"

#include <algorithm>
#include <map>

#include "baire/category.hpp"
#include "baire/determinize.hpp"
#include "baire/measure.hpp"

namespace baire {

using K = Formula::Kind;

namespace {

LetterId letter(const Alphabet& a, const std::map<std::string, bool>& bits) {
    std::vector<bool> v(a.track_count(), false);
    for (const auto& [name, b] : bits) v[*a.track_index(name)] = b;
    return a.from_bits(v);
}

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Quotient by the coarsest bisimulation that respects acceptance.
NBA reduce(const NBA& in) {
    NBA a = trim(in);
    std::vector<std::size_t> block(a.states);
    for (StateId q = 0; q < a.states; ++q) block[q] = a.accepting[q] ? 1 : 0;
    std::size_t count = 0;
    for (;;) {
        std::map<std::pair<std::size_t, std::vector<std::vector<std::size_t>>>, std::size_t> ids;
        std::vector<std::size_t> next(a.states);
        for (StateId q = 0; q < a.states; ++q) {
            std::vector<std::vector<std::size_t>> sig(a.alphabet.size());
            for (LetterId l = 0; l < a.alphabet.size(); ++l) {
                for (StateId r : a.delta[q][l]) sig[l].push_back(block[r]);
                std::sort(sig[l].begin(), sig[l].end());
                sig[l].erase(std::unique(sig[l].begin(), sig[l].end()), sig[l].end());
            }
            auto key = std::make_pair(block[q], std::move(sig));
            auto it = ids.emplace(std::move(key), ids.size()).first;
            next[q] = it->second;
        }
        block = std::move(next);
        if (ids.size() == count) break;
        count = ids.size();
    }
    NBA out(a.alphabet, count);
    for (StateId q = 0; q < a.states; ++q) {
        out.accepting[block[q]] = a.accepting[q];
        for (LetterId l = 0; l < a.alphabet.size(); ++l)
            for (StateId r : a.delta[q][l]) out.delta[block[q]][l].push_back(static_cast<StateId>(block[r]));
    }
    for (auto& row : out.delta)
        for (auto& s : row) normalize(s);
    for (StateId q : a.initial) out.initial.push_back(static_cast<StateId>(block[q]));
    normalize(out.initial);
    return out;
}

struct Lang {
    NBA nba;
    std::vector<std::string> tracks;  // sorted
    std::optional<AltMuller> alt = std::nullopt;  // equivalent alternating automaton, when known
};

std::string describe_node(const Formula& f) {
    std::string s = std::string(kind_name(f.kind));
    if (!f.vars.empty()) s += " " + f.vars[0];
    s += " at " + std::to_string(f.span.begin) + ".." + std::to_string(f.span.end);
    return s;
}

class Compiler {
public:
    Compiler(std::size_t budget, std::set<std::string> used) : budget_(budget), used_(std::move(used)) {}

    std::vector<std::string> notes;

    Lang run(const Formula& f) {
        switch (f.kind) {
            case K::True:
            case K::False: {
                auto al = Alphabet::tracks({});
                return {f.kind == K::True ? universal_nba(al) : empty_nba(al), {}};
            }
            case K::Less:
            case K::Equal:
            case K::In: {
                NBA a = atom_nba(f);
                return {a, a.alphabet.track_names()};
            }
            case K::UPred:
                throw Error("undecidable fragment: " + describe_node(f) +
                            " rewrites to a formula with a nested meas1; run the U rewriter for the syntax only");
            case K::SuccL:
            case K::SuccR:
            case K::U1Pred:
            case K::CatPath:
            case K::Meas1Path:
                throw Error("tree formula: " + describe_node(f) + " is not compiled to word automata");
            case K::Not:
                return negate(run(f.kids[0]));
            case K::And:
                return conjoin(run(f.kids[0]), run(f.kids[1]));
            case K::Or:
                return disjoin(run(f.kids[0]), run(f.kids[1]));
            case K::Implies:
                return disjoin(negate(run(f.kids[0])), run(f.kids[1]));
            case K::Iff: {
                Lang a = run(f.kids[0]);
                Lang b = run(f.kids[1]);
                Lang both = conjoin(a, b);
                Lang neither = conjoin(negate(a), negate(b));
                return disjoin(both, neither);
            }
            case K::ExistsFO:
                return exists_fo(f.vars[0], run(f.kids[0]));
            case K::ForallFO:
                return negate(exists_fo(f.vars[0], negate(run(f.kids[0]))));
            case K::ExistsSO:
                return exists_so(f.vars[0], run(f.kids[0]));
            case K::ForallSO:
                return negate(exists_so(f.vars[0], negate(run(f.kids[0]))));
            case K::InfMany: {
                std::string y = fresh_name(used_, "y");
                used_.insert(y);
                const std::string& x = f.vars[0];
                return run(fm::all1(y, fm::ex1(x, fm::conj({fm::less(y, x), f.kids[0]}))));
            }
            case K::Cat:
                return category(f);
            case K::Meas1:
                return measure_one(f);
        }
        throw Error("unknown formula node");
    }

    Lang align(const Lang& l, const std::vector<std::string>& tracks) {
        if (l.tracks == tracks) return l;
        return {cylindrify(l.nba, Alphabet::tracks(tracks)), tracks};
    }

    Lang conjoin(const Lang& a, const Lang& b) {
        auto t = merged(a.tracks, b.tracks);
        return check({reduce(nba_intersection(align(a, t).nba, align(b, t).nba)), t});
    }

    Lang disjoin(const Lang& a, const Lang& b) {
        auto t = merged(a.tracks, b.tracks);
        return check({reduce(nba_union(align(a, t).nba, align(b, t).nba)), t});
    }

    Lang negate(const Lang& a) {
        if (a.nba.alphabet.size() == 1) {
            auto al = a.nba.alphabet;
            return {is_empty(a.nba) ? universal_nba(al) : empty_nba(al), a.tracks};
        }
        if (a.alt) {
            AltMuller d = dual(*a.alt);
            try {
                return check({reduce(dealternate(d, budget_)), a.tracks, d});
            } catch (const BudgetError&) {
                notes.push_back("dual dealternation over budget, complementing the NBA instead");
            }
        }
        return check({reduce(complement_nba(a.nba, budget_)), a.tracks});
    }

    Lang exists_fo(const std::string& x, const Lang& body) {
        if (!has(body.tracks, x)) return body;
        return exists_so(x, conjoin(body, {singleton_nba(x), {x}}));
    }

    Lang exists_so(const std::string& X, const Lang& body) {
        if (!has(body.tracks, X)) return body;
        std::vector<std::string> rest;
        for (const auto& t : body.tracks)
            if (t != X) rest.push_back(t);
        return check({reduce(project(body.nba, Alphabet::tracks(rest))), rest});
    }

    Lang category(const Formula& f) {
        const std::string& X = f.vars[0];
        Lang body = run(f.kids[0]);
        if (!has(body.tracks, X)) return body;
        std::vector<std::string> rest, order;
        for (const auto& t : body.tracks)
            if (t != X) rest.push_back(t);
        order = rest;
        order.push_back(X);
        NBA a = cylindrify(body.nba, Alphabet::tracks(order));
        DetMuller d = dpa_to_detmuller(minimize_dpa(determinize(a, budget_)));
        AltMuller b = build_b_word(d, std::vector<std::string>{X});
        NBA out = dealternate(b, budget_);
        notes.push_back("eliminated cat " + X + " (" + std::to_string(d.states) + " deterministic states, " +
                        std::to_string(out.states) + " NBA states)");
        return check({reduce(out), rest, b});
    }

    Lang measure_one(const Formula& f) {
        if (count_kind(f.kids[0], K::Meas1) > 0)
            throw Error("undecidable fragment: nested meas1 below " + describe_node(f));
        if (!free_variables(f).empty())
            throw Error("undecidable fragment: " + describe_node(f) + " has free variables; meas1 is decided only on closed subformulas");
        const std::string& X = f.vars[0];
        Lang body = align(run(f.kids[0]), {X});
        mpq_class mu = nba_measure(body.nba, budget_);
        notes.push_back("decided meas1 " + X + " (measure " + mu.get_str() + ")");
        auto al = Alphabet::tracks({});
        return {mu == 1 ? universal_nba(al) : empty_nba(al), {}};
    }

private:
    static bool has(const std::vector<std::string>& v, const std::string& x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    }
    static std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
        std::vector<std::string> t = a;
        t.insert(t.end(), b.begin(), b.end());
        return sorted_unique(std::move(t));
    }
    Lang check(Lang l) {
        if (l.nba.states > budget_)
            throw BudgetError("compiled automaton has " + std::to_string(l.nba.states) + " states, budget " +
                              std::to_string(budget_));
        return l;
    }

    std::size_t budget_;
    std::set<std::string> used_;
};

void check_fragment(const Formula& f) {
    if (f.kind == K::UPred)
        throw Error("undecidable fragment: " + describe_node(f) +
                    " rewrites to a formula with a nested meas1; run the U rewriter for the syntax only");
    if (f.kind == K::Meas1) {
        if (count_kind(f.kids[0], K::Meas1) > 0)
            throw Error("undecidable fragment: nested meas1 below " + describe_node(f));
        if (!free_variables(f).empty())
            throw Error("undecidable fragment: " + describe_node(f) +
                        " has free variables; meas1 is decided only on closed subformulas");
    }
    for (const auto& k : f.kids) check_fragment(k);
}

}  // namespace

NBA singleton_nba(const std::string& x) {
    auto al = Alphabet::tracks({x});
    NBA a(al, 2);
    a.initial = {0};
    a.accepting = {false, true};
    a.add_edge(0, letter(al, {{x, false}}), 0);
    a.add_edge(0, letter(al, {{x, true}}), 1);
    a.add_edge(1, letter(al, {{x, false}}), 1);
    return a;
}

NBA atom_nba(const Formula& f) {
    if (f.kind == K::Less || f.kind == K::Equal) {
        const std::string& x = f.vars[0];
        const std::string& y = f.vars[1];
        if (x == y) {
            auto al = Alphabet::tracks({x});
            return f.kind == K::Equal ? universal_nba(al) : empty_nba(al);
        }
        auto al = Alphabet::tracks(sorted_unique({x, y}));
        if (f.kind == K::Equal) {
            NBA a(al, 1);
            a.initial = {0};
            a.accepting = {true};
            a.add_edge(0, letter(al, {{x, false}, {y, false}}), 0);
            a.add_edge(0, letter(al, {{x, true}, {y, true}}), 0);
            return a;
        }
        NBA a(al, 3);
        a.initial = {0};
        a.accepting = {false, false, true};
        a.add_edge(0, letter(al, {{x, false}, {y, false}}), 0);
        a.add_edge(0, letter(al, {{x, true}, {y, false}}), 1);
        a.add_edge(1, letter(al, {{x, false}, {y, false}}), 1);
        a.add_edge(1, letter(al, {{x, false}, {y, true}}), 2);
        a.add_edge(2, letter(al, {{x, false}, {y, false}}), 2);
        return a;
    }
    if (f.kind == K::In) {
        const std::string& x = f.vars[0];
        const std::string& X = f.vars[1];
        auto al = Alphabet::tracks(sorted_unique({x, X}));
        NBA a(al, 2);
        a.initial = {0};
        a.accepting = {false, true};
        for (bool b : {false, true}) {
            a.add_edge(0, letter(al, {{x, false}, {X, b}}), 0);
            a.add_edge(1, letter(al, {{x, false}, {X, b}}), 1);
        }
        a.add_edge(0, letter(al, {{x, true}, {X, true}}), 1);
        return a;
    }
    throw Error(std::string("not an atom: ") + kind_name(f.kind));
}

CompiledLanguage compile(const Formula& f, std::size_t budget) {
    if (has_tree_atoms(f)) throw Error("tree formula: word compilation needs a formula without tree atoms");
    check_fragment(f);
    Compiler c(budget, all_names(f));
    Lang l = c.run(f);
    for (const auto& v : free_variables(f)) {
        if (!v.first_order) continue;
        l = c.conjoin(l, {singleton_nba(v.name), {v.name}});
    }
    std::vector<std::string> tracks;
    for (const auto& v : free_variables(f)) tracks.push_back(v.name);
    l = c.align(l, tracks);
    return {l.nba, l.tracks, c.notes};
}

SentenceVerdict decide_sentence(const Formula& f, std::size_t budget) {
    auto fv = free_variables(f);
    if (!fv.empty()) throw Error("not a sentence: free variable '" + fv[0].name + "'");
    SentenceVerdict v;
    CompiledLanguage l = compile(f, budget);
    v.value = !is_empty(l.nba);
    v.nba_states = l.nba.states;
    v.notes = l.notes;
    if (f.kind == K::Cat || f.kind == K::Meas1) {
        v.root = kind_name(f.kind);
        const std::string& X = f.vars[0];
        Formula body = f.kids[0];
        CompiledLanguage inner = compile(body, budget);
        NBA a = cylindrify(inner.nba, Alphabet::tracks({X}));
        DetMuller d = dpa_to_detmuller(minimize_dpa(determinize(a, budget)));
        StaigerReport s = staiger_crosscheck(d);
        v.comeager = s.comeager;
        v.measure = s.measure;
        bool root_value = f.kind == K::Cat ? s.comeager : s.measure_one;
        v.oracles_agree = s.agree() && root_value == v.value;
    }
    return v;
}

bool decide_forall1_sentence(const Formula& f, std::size_t budget) {
    if (f.kind != K::Meas1) throw Error("expected a sentence of the form meas1 X. phi");
    return decide_sentence(f, budget).value;
}

}  // namespace baire
