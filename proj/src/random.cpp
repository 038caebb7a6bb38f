#include "baire/random.hpp"

namespace baire {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

MullerCondition random_family(Rng& rng, std::size_t n) {
    std::vector<StateSet> fam;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (rng() & 1) continue;
        StateSet s;
        for (StateId q = 0; q < n; ++q)
            if (mask & (1u << q)) s.push_back(q);
        fam.push_back(std::move(s));
    }
    return MullerCondition::explicit_family(std::move(fam));
}

DetMuller random_detmuller(Rng& rng, const Alphabet& a, std::size_t max_states) {
    DetMuller d;
    d.alphabet = a;
    d.states = uniform(rng, 1, max_states);
    d.initial = 0;
    d.delta.assign(d.states, std::vector<StateId>(a.size()));
    for (auto& row : d.delta)
        for (auto& q : row) q = static_cast<StateId>(uniform(rng, 0, d.states - 1));
    d.condition = random_family(rng, d.states);
    return d;
}

NBA random_nba(Rng& rng, const Alphabet& a, std::size_t max_states) {
    NBA n(a, uniform(rng, 1, max_states));
    n.initial = {0};
    if (n.states > 1 && rng() % 4 == 0) n.initial.push_back(static_cast<StateId>(uniform(rng, 1, n.states - 1)));
    for (StateId q = 0; q < n.states; ++q) {
        n.accepting[q] = rng() % 3 == 0;
        for (LetterId l = 0; l < a.size(); ++l) {
            std::size_t k = uniform(rng, 0, 2);
            for (std::size_t i = 0; i < k; ++i) n.add_edge(q, l, static_cast<StateId>(uniform(rng, 0, n.states - 1)));
        }
    }
    return n;
}

Expr random_expr(Rng& rng, std::size_t states, std::size_t depth, bool tree) {
    auto atom = [&] {
        Dir d = tree ? (rng() & 1 ? Dir::L : Dir::R) : Dir::None;
        return Expr::make_atom(static_cast<StateId>(uniform(rng, 0, states - 1)), d);
    };
    if (depth == 0 || rng() % 3 == 0) return atom();
    std::vector<Expr> kids;
    std::size_t k = uniform(rng, 2, 3);
    for (std::size_t i = 0; i < k; ++i) kids.push_back(random_expr(rng, states, depth - 1, tree));
    return rng() & 1 ? Expr::make_and(std::move(kids)) : Expr::make_or(std::move(kids));
}

AltMuller random_altmuller(Rng& rng, const Alphabet& a, std::size_t max_states) {
    AltMuller m;
    m.alphabet = a;
    m.states = uniform(rng, 1, max_states);
    m.initial = 0;
    m.delta.assign(m.states, std::vector<Expr>(a.size()));
    for (auto& row : m.delta)
        for (auto& e : row) e = random_expr(rng, m.states, 2, false);
    m.condition = random_family(rng, m.states);
    return m;
}

LassoWord random_lasso(Rng& rng, std::size_t letters, std::size_t max_len) {
    LassoWord w;
    std::size_t total = uniform(rng, 1, max_len);
    std::size_t cyc = uniform(rng, 1, total);
    for (std::size_t i = 0; i < total - cyc; ++i) w.prefix.push_back(static_cast<LetterId>(uniform(rng, 0, letters - 1)));
    for (std::size_t i = 0; i < cyc; ++i) w.cycle.push_back(static_cast<LetterId>(uniform(rng, 0, letters - 1)));
    return w;
}

Arena random_arena(Rng& rng, std::size_t max_positions, bool parity) {
    Arena ar;
    std::size_t n = uniform(rng, 1, max_positions);
    std::vector<unsigned> prio;
    for (std::size_t i = 0; i < n; ++i) {
        ar.add(rng() & 1 ? PlayerTag::Exists : PlayerTag::Forall, static_cast<std::int64_t>(i));
        prio.push_back(static_cast<unsigned>(uniform(rng, 0, 4)));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = uniform(rng, 1, 3);
        for (std::size_t j = 0; j < k; ++j) ar.succ[i].push_back(static_cast<Position>(uniform(rng, 0, n - 1)));
        normalize(ar.succ[i]);
    }
    if (parity)
        ar.priority = prio;
    else
        ar.muller = random_family(rng, n);
    return ar;
}

}  // namespace baire
