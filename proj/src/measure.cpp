#include "baire/measure.hpp"

#include <sstream>

#include "baire/category.hpp"
#include "baire/determinize.hpp"
#include "baire/graph.hpp"

namespace baire {

namespace {

MeasureReport chain_measure(const Alphabet& alphabet, std::size_t states, StateId initial,
                            const std::vector<std::vector<StateId>>& delta, const MullerCondition& cond) {
    const std::size_t k = alphabet.size();
    Adjacency g(states);
    for (std::size_t q = 0; q < states; ++q) {
        g[q] = delta[q];
        normalize(g[q]);
    }
    auto reach = reachable_from(g, {initial});
    auto scc = strongly_connected(g, reach);
    auto bottom = bottom_components(g, scc);
    MeasureReport rep;
    std::vector<int> class_of(static_cast<std::size_t>(scc.count), -1);
    for (int c = 0; c < scc.count; ++c)
        if (bottom[c]) {
            class_of[c] = static_cast<int>(rep.recurrent_classes.size());
            rep.recurrent_classes.emplace_back();
        }
    std::vector<int> transient_index(states, -1);
    std::vector<StateId> transient;
    for (StateId q = 0; q < states; ++q) {
        if (!reach[q]) continue;
        int c = class_of[scc.comp[q]];
        if (c >= 0)
            rep.recurrent_classes[c].push_back(q);
        else {
            transient_index[q] = static_cast<int>(transient.size());
            transient.push_back(q);
        }
    }
    const std::size_t nc = rep.recurrent_classes.size();
    for (const auto& c : rep.recurrent_classes) rep.accepting.push_back(cond.accepts(c));
    rep.absorption.assign(nc, 0);
    int init_class = class_of[scc.comp[initial]];
    if (init_class >= 0) {
        rep.absorption[init_class] = 1;
    } else {
        // (I - P_TT) X = P_TC, one column per class.
        const std::size_t t = transient.size();
        const mpq_class step(1, static_cast<unsigned long>(k));
        std::vector<std::vector<mpq_class>> m(t, std::vector<mpq_class>(t + nc, 0));
        for (std::size_t i = 0; i < t; ++i) {
            m[i][i] = 1;
            for (auto r : delta[transient[i]]) {
                if (transient_index[r] >= 0)
                    m[i][static_cast<std::size_t>(transient_index[r])] -= step;
                else
                    m[i][t + static_cast<std::size_t>(class_of[scc.comp[r]])] += step;
            }
        }
        for (std::size_t col = 0; col < t; ++col) {
            std::size_t piv = col;
            while (piv < t && sgn(m[piv][col]) == 0) ++piv;
            if (piv == t) throw Error("singular absorption system");
            std::swap(m[piv], m[col]);
            mpq_class inv = 1 / m[col][col];
            for (std::size_t j = col; j < t + nc; ++j)
                if (sgn(m[col][j]) != 0) m[col][j] *= inv;
            for (std::size_t i = 0; i < t; ++i) {
                if (i == col || sgn(m[i][col]) == 0) continue;
                mpq_class f = m[i][col];
                for (std::size_t j = col; j < t + nc; ++j)
                    if (sgn(m[col][j]) != 0) m[i][j] -= f * m[col][j];
            }
        }
        std::size_t row = static_cast<std::size_t>(transient_index[initial]);
        for (std::size_t c = 0; c < nc; ++c) rep.absorption[c] = m[row][t + c];
    }
    rep.measure = 0;
    for (std::size_t c = 0; c < nc; ++c)
        if (rep.accepting[c]) rep.measure += rep.absorption[c];
    return rep;
}

}  // namespace

MeasureReport language_measure(const DetMuller& a) {
    a.validate();
    return chain_measure(a.alphabet, a.states, a.initial, a.delta, a.condition);
}

MeasureReport language_measure(const DPA& a) {
    a.validate();
    return chain_measure(a.alphabet, a.states, a.initial, a.delta, MullerCondition::parity(a.priority));
}

bool decide_measure_one(const DetMuller& a) { return language_measure(a).measure == 1; }
bool decide_measure_one(const DPA& a) { return language_measure(a).measure == 1; }

mpq_class nba_measure(const NBA& a, std::size_t budget) { return language_measure(determinize(a, budget)).measure; }

StaigerReport staiger_crosscheck(const DetMuller& a) {
    StaigerReport r;
    r.measure = language_measure(a).measure;
    r.measure_one = r.measure == 1;
    r.comeager = decide_comeager(a).comeager;
    return r;
}

std::string decimal(const mpq_class& q, int digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled = q.get_num() * scale;
    mpz_class whole, frac;
    mpz_class n = scaled / q.get_den();
    whole = n / scale;
    frac = n % scale;
    if (frac == 0) return whole.get_str();
    std::string f = frac.get_str();
    f = std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    while (!f.empty() && f.back() == '0') f.pop_back();
    return whole.get_str() + "." + f;
}

std::string format_rational(const mpq_class& q) {
    std::ostringstream os;
    os << decimal(q) << " (= " << q.get_num().get_str() << "/" << q.get_den().get_str() << ")";
    return os.str();
}

}  // namespace baire
