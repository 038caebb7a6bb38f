#include "baire/category.hpp"

#include <algorithm>
#include <map>

#include "baire/nba_ops.hpp"

namespace baire {

AltMuller build_b_word(const DetMuller& a, const TrackSplit& split) {
    a.validate();
    if (split.sigma.size() * split.gamma.size() != a.alphabet.size())
        throw Error("alphabet not factorable into parameter and quantified letters");
    AltMuller b;
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
                std::vector<Expr> kids;
                for (LetterId y = 0; y < split.gamma.size(); ++y) {
                    StateId t = a.delta[q][split.combine(x, y)];
                    kids.push_back(Expr::make(kind, {Expr::make_atom(b_state(t, PlayerTag::Exists)),
                                                     Expr::make_atom(b_state(t, PlayerTag::Forall))}));
                }
                b.delta[s][x] = Expr::make(kind, std::move(kids));
            }
        }
    b.condition = MullerCondition::category_b(std::move(origin), std::move(tag), a.condition);
    return b;
}

AltMuller build_b_word(const DetMuller& a, const std::vector<std::string>& quantified) {
    return build_b_word(a, split_tracks(a.alphabet, quantified));
}

namespace {

TrackSplit closed_split(const Alphabet& a) {
    TrackSplit s;
    s.sigma = Alphabet::tracks({});
    s.gamma = a;
    s.gamma_bits = 0;
    return s;
}

}  // namespace

ComeagerResult decide_comeager(const DetMuller& a) {
    ComeagerResult r;
    auto b = std::make_shared<AltMuller>(build_b_word(a, closed_split(a.alphabet)));
    r.b = b;
    r.game = acceptance_arena_word(*b, LassoWord{{}, {0}});
    r.solution = solve_muller(r.game.arena);
    r.comeager = r.solution.winner[r.game.arena.initial] == PlayerTag::Exists;
    return r;
}

namespace {

// Abstraction of the set of states visited along a finite segment. Classes
// are compatible with union and determine acceptance of unions.
class VisitClasses {
public:
    VisitClasses(const MullerCondition& cond, std::size_t n) : cond_(cond), n_(n) {
        const auto* inner = cond.inner();
        if (cond.kind() == MullerCondition::Kind::Parity) {
            mode_ = Mode::Parity;
        } else if ((cond.kind() == MullerCondition::Kind::CategoryB || cond.kind() == MullerCondition::Kind::Projected) &&
                   inner->kind() == MullerCondition::Kind::Parity) {
            mode_ = Mode::ProjectedParity;
        } else if (n <= 12) {
            mode_ = Mode::Congruence;
            build_congruence();
        } else if (n <= 64) {
            mode_ = Mode::Raw;
        } else {
            throw BudgetError("dealternation supports at most 64 states for this acceptance condition");
        }
    }

    int of_state(StateId q) { return intern({q}); }

    int join(int a, int b) {
        if (a == b) return a;
        auto key = std::minmax(a, b);
        auto it = joins_.find(key);
        if (it != joins_.end()) return it->second;
        int c = intern(set_union(witness_[static_cast<std::size_t>(a)], witness_[static_cast<std::size_t>(b)]));
        joins_.emplace(key, c);
        return c;
    }

    const StateSet& witness(int c) const { return witness_[static_cast<std::size_t>(c)]; }
    std::size_t size() const { return witness_.size(); }

private:
    enum class Mode { Parity, ProjectedParity, Congruence, Raw };

    std::uint64_t key(const StateSet& s) const {
        switch (mode_) {
            case Mode::Parity: {
                unsigned best = 0;
                for (auto q : s) best = std::max(best, (*cond_.priorities())[q] + 1);
                return best;
            }
            case Mode::ProjectedParity: {
                const auto& color = *cond_.colors();
                const auto& prio = *cond_.inner()->priorities();
                unsigned best = 0;
                std::uint64_t tags = 0;
                for (auto q : s) {
                    best = std::max(best, prio[color[q]] + 1);
                    if (const auto* t = cond_.tags()) tags |= 1u << static_cast<unsigned>((*t)[q]);
                }
                return (std::uint64_t{best} << 2) | tags;
            }
            case Mode::Congruence:
                return static_cast<std::uint64_t>(congruence_[mask(s)]);
            case Mode::Raw:
                return mask(s);
        }
        return 0;
    }

    static std::uint64_t mask(const StateSet& s) {
        std::uint64_t m = 0;
        for (auto q : s) m |= std::uint64_t{1} << q;
        return m;
    }

    void build_congruence() {
        const std::uint32_t full = 1u << n_;
        std::vector<bool> acc(full);
        for (std::uint32_t m = 0; m < full; ++m) {
            StateSet s;
            for (StateId q = 0; q < n_; ++q)
                if (m >> q & 1u) s.push_back(q);
            acc[m] = cond_.accepts(s);
        }
        std::map<std::vector<bool>, int> index;
        congruence_.resize(full);
        for (std::uint32_t v = 0; v < full; ++v) {
            std::vector<bool> sig(full);
            for (std::uint32_t w = 0; w < full; ++w) sig[w] = acc[v | w];
            congruence_[v] = index.emplace(std::move(sig), static_cast<int>(index.size())).first->second;
        }
    }

    int intern(StateSet s) {
        auto [it, fresh] = classes_.emplace(key(s), static_cast<int>(witness_.size()));
        if (fresh) witness_.push_back(std::move(s));
        return it->second;
    }

    const MullerCondition& cond_;
    std::size_t n_;
    Mode mode_ = Mode::Raw;
    std::vector<int> congruence_;
    std::map<std::uint64_t, int> classes_;
    std::vector<StateSet> witness_;
    std::map<std::pair<int, int>, int> joins_;
};

// Transition profile of a finite word: per start state, the minimal sets of
// outcomes (end state, visit class) that Exists can force.
using Outcome = std::pair<StateId, int>;
using Model = std::vector<Outcome>;
using Profile = std::vector<std::vector<Model>>;

void reduce_models(std::vector<Model>& ms) {
    std::sort(ms.begin(), ms.end(), [](const Model& a, const Model& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Model> out;
    for (auto& m : ms) {
        bool dominated = false;
        for (const auto& o : out)
            if (std::includes(m.begin(), m.end(), o.begin(), o.end())) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    ms = std::move(out);
}

class ProfileSemigroup {
public:
    ProfileSemigroup(const AltMuller& b, VisitClasses& vc, std::size_t budget) : b_(b), vc_(vc), budget_(budget) {
        const std::size_t n = b.states;
        for (LetterId x = 0; x < b.alphabet.size(); ++x) {
            Profile p(n);
            for (StateId q = 0; q < n; ++q) {
                for (const auto& m : minimal_models(b.delta[q][x])) {
                    Model mm;
                    for (const auto& at : m) mm.emplace_back(at.state, vc.of_state(at.state));
                    std::sort(mm.begin(), mm.end());
                    mm.erase(std::unique(mm.begin(), mm.end()), mm.end());
                    p[q].push_back(std::move(mm));
                }
                reduce_models(p[q]);
            }
            gens_.push_back(std::move(p));
        }
        for (LetterId x = 0; x < gens_.size(); ++x) letter_elem_.push_back(intern(gens_[x], -1, x));
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            std::vector<std::uint32_t> row;
            for (LetterId x = 0; x < gens_.size(); ++x) {
                Profile r = compose(elems_[i], gens_[x]);
                row.push_back(intern(std::move(r), static_cast<std::int64_t>(i), x));
            }
            right_.push_back(std::move(row));
        }
    }

    std::size_t size() const { return elems_.size(); }
    const Profile& at(std::uint32_t i) const { return elems_[i]; }
    std::uint32_t letter(LetterId x) const { return letter_elem_[x]; }
    std::uint32_t right(std::uint32_t i, LetterId x) const { return right_[i][x]; }

    std::uint32_t multiply(std::uint32_t s, std::uint32_t t) const {
        std::vector<LetterId> word;
        for (std::int64_t e = t; e >= 0; e = parent_[static_cast<std::size_t>(e)]) word.push_back(via_[static_cast<std::size_t>(e)]);
        std::reverse(word.begin(), word.end());
        for (auto x : word) s = right_[s][x];
        return s;
    }

private:
    Profile compose(const Profile& s, const Profile& g) {
        const std::size_t n = s.size();
        Profile r(n);
        for (StateId q = 0; q < n; ++q) {
            std::vector<Model> acc;
            for (const auto& m : s[q]) {
                std::vector<Model> cur{{}};
                for (const auto& [q2, c] : m) {
                    std::vector<Model> next;
                    for (const auto& m2 : g[q2]) {
                        Model ext;
                        for (const auto& [q3, c3] : m2) ext.emplace_back(q3, vc_.join(c, c3));
                        std::sort(ext.begin(), ext.end());
                        work_ += cur.size();
                        if (work_ > 200 * budget_) throw BudgetError("dealternation exceeded the work budget");
                        for (const auto& base : cur) {
                            Model u;
                            std::set_union(base.begin(), base.end(), ext.begin(), ext.end(), std::back_inserter(u));
                            next.push_back(std::move(u));
                        }
                    }
                    reduce_models(next);
                    if (next.size() > budget_) throw BudgetError("dealternation exceeded the state budget");
                    cur = std::move(next);
                }
                acc.insert(acc.end(), cur.begin(), cur.end());
            }
            reduce_models(acc);
            r[q] = std::move(acc);
        }
        return r;
    }

    std::uint32_t intern(Profile p, std::int64_t parent, LetterId x) {
        auto [it, fresh] = index_.emplace(p, static_cast<std::uint32_t>(elems_.size()));
        if (fresh) {
            if (elems_.size() >= budget_) throw BudgetError("dealternation exceeded the state budget");
            elems_.push_back(std::move(p));
            parent_.push_back(parent);
            via_.push_back(x);
        }
        return it->second;
    }

    const AltMuller& b_;
    VisitClasses& vc_;
    std::size_t budget_;
    std::size_t work_ = 0;
    std::vector<Profile> gens_;
    std::vector<Profile> elems_;
    std::map<Profile, std::uint32_t> index_;
    std::vector<std::int64_t> parent_;
    std::vector<LetterId> via_;
    std::vector<std::uint32_t> letter_elem_;
    std::vector<std::vector<std::uint32_t>> right_;
};

// States from which Exists wins the game that repeats profile e forever.
std::vector<bool> loop_winners(const AltMuller& b, const VisitClasses& vc, const Profile& e) {
    Arena ar;
    const std::size_t n = b.states;
    for (StateId q = 0; q < n; ++q) ar.add(PlayerTag::Exists);
    std::map<Outcome, Position> chains;
    auto chain = [&](const Outcome& o) {
        auto it = chains.find(o);
        if (it != chains.end()) return it->second;
        const auto& w = vc.witness(o.second);
        Position head = 0, prev = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            Position v = ar.add(PlayerTag::Exists, w[k]);
            if (k == 0)
                head = v;
            else
                ar.succ[prev].push_back(v);
            prev = v;
        }
        ar.succ[prev].push_back(o.first);
        chains.emplace(o, head);
        return head;
    };
    for (StateId q = 0; q < n; ++q)
        for (const auto& m : e[q]) {
            Position v = ar.add(PlayerTag::Forall);
            ar.succ[q].push_back(v);
            for (const auto& o : m) {
                Position h = chain(o);
                ar.succ[v].push_back(h);
            }
        }
    ar.muller = b.condition;
    auto sol = solve_muller(ar);
    std::vector<bool> win(n);
    for (StateId q = 0; q < n; ++q) win[q] = sol.winner[q] == PlayerTag::Exists;
    return win;
}

}  // namespace

NBA dealternate(const AltMuller& b, std::size_t budget, DealternationStats* stats) {
    b.validate();
    VisitClasses vc(b.condition, b.states);
    ProfileSemigroup sg(b, vc, budget);
    const std::size_t ns = sg.size();
    const std::size_t letters = b.alphabet.size();
    // Accepting loops: idempotent profiles with their Exists-winning states.
    std::vector<std::uint32_t> loops;
    std::vector<std::vector<bool>> loop_win;
    std::size_t idempotents = 0;
    for (std::uint32_t e = 0; e < ns; ++e) {
        if (sg.multiply(e, e) != e) continue;
        ++idempotents;
        auto win = loop_winners(b, vc, sg.at(e));
        if (std::find(win.begin(), win.end(), true) == win.end()) continue;
        loops.push_back(e);
        loop_win.push_back(std::move(win));
    }
    auto pair_accepts = [&](std::uint32_t s, std::size_t j) {
        for (const auto& m : sg.at(s)[b.initial]) {
            bool ok = true;
            for (const auto& o : m)
                if (!loop_win[j][o.first]) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
        return false;
    };
    // State layout: 0 = start, 1 + t = prefix with profile t, then per loop j
    // a block-start state followed by one in-block state per profile.
    const std::size_t base = 1 + ns;
    const std::size_t total = base + loops.size() * (1 + ns);
    if (total > 8 * budget) throw BudgetError("dealternation exceeded the state budget");
    NBA out(b.alphabet, total);
    out.initial = {0};
    auto top = [&](std::size_t j) { return static_cast<StateId>(base + j * (1 + ns)); };
    auto inner = [&](std::size_t j, std::uint32_t t) { return static_cast<StateId>(base + j * (1 + ns) + 1 + t); };
    std::vector<std::vector<std::size_t>> switch_to(ns);
    for (std::uint32_t s = 0; s < ns; ++s)
        for (std::size_t j = 0; j < loops.size(); ++j)
            if (pair_accepts(s, j)) switch_to[s].push_back(j);
    auto enter_prefix = [&](StateId from, LetterId x, std::uint32_t s) {
        out.add_edge(from, x, static_cast<StateId>(1 + s));
        for (auto j : switch_to[s]) out.add_edge(from, x, top(j));
    };
    for (LetterId x = 0; x < letters; ++x) {
        enter_prefix(0, x, sg.letter(x));
        for (std::uint32_t t = 0; t < ns; ++t) enter_prefix(static_cast<StateId>(1 + t), x, sg.right(t, x));
    }
    for (std::size_t j = 0; j < loops.size(); ++j) {
        out.accepting[top(j)] = true;
        for (LetterId x = 0; x < letters; ++x) {
            std::uint32_t g = sg.letter(x);
            out.add_edge(top(j), x, inner(j, g));
            if (g == loops[j]) out.add_edge(top(j), x, top(j));
            for (std::uint32_t t = 0; t < ns; ++t) {
                std::uint32_t r = sg.right(t, x);
                out.add_edge(inner(j, t), x, inner(j, r));
                if (r == loops[j]) out.add_edge(inner(j, t), x, top(j));
            }
        }
    }
    NBA result = trim(out);
    if (result.states > budget) throw BudgetError("dealternation exceeded the state budget");
    if (stats) {
        stats->profiles = ns;
        stats->idempotents = idempotents;
        stats->visit_classes = vc.size();
        stats->nba_states = result.states;
    }
    return result;
}

DetMuller section_automaton(const DetMuller& a, const TrackSplit& split, const LassoWord& w) {
    a.validate();
    validate(w, split.sigma);
    DetMuller s;
    s.alphabet = split.gamma;
    std::map<std::pair<StateId, std::size_t>, StateId> index;
    std::vector<std::pair<StateId, std::size_t>> pairs;
    auto get = [&](StateId q, std::size_t i) {
        auto [it, fresh] = index.emplace(std::make_pair(q, i), static_cast<StateId>(pairs.size()));
        if (fresh) pairs.emplace_back(q, i);
        return it->second;
    };
    s.initial = get(a.initial, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto [q, i] = pairs[k];
        std::vector<StateId> row;
        for (LetterId y = 0; y < split.gamma.size(); ++y) row.push_back(get(a.delta[q][split.combine(w.at(i), y)], w.next(i)));
        s.delta.push_back(std::move(row));
    }
    s.states = pairs.size();
    std::vector<StateId> color;
    for (const auto& pr : pairs) color.push_back(pr.first);
    s.condition = MullerCondition::projected(std::move(color), a.condition);
    return s;
}

NBA eliminate_category(const DetMuller& a, const std::vector<std::string>& quantified, std::size_t budget) {
    return dealternate(build_b_word(a, quantified), budget);
}

}  // namespace baire
