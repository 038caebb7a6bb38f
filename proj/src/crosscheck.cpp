#include "baire/crosscheck.hpp"

#include <functional>

#include "baire/category.hpp"
#include "baire/io.hpp"
#include "baire/measure.hpp"
#include "baire/random.hpp"

namespace baire {

namespace {

Rng instance_rng(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    return Rng(seq);
}

CrosscheckInstance staiger_instance(Rng& rng, std::size_t) {
    CrosscheckInstance inst;
    auto a = random_detmuller(rng, Alphabet::tracks({"X"}), 5);
    auto r = staiger_crosscheck(a);
    inst.checks = 1;
    inst.agreed = r.agree() ? 1 : 0;
    if (!r.agree()) {
        inst.automaton = write_oaut(a);
        inst.detail = "measure " + format_rational(r.measure) + ", comeager " + (r.comeager ? "yes" : "no");
    }
    return inst;
}

CrosscheckInstance section_instance(Rng& rng, std::size_t budget) {
    CrosscheckInstance inst;
    auto xy = Alphabet::tracks({"X", "Y"});
    auto split = split_tracks(xy, 1);
    auto a = random_detmuller(rng, xy, 4);
    auto n = dealternate(build_b_word(a, split), budget);
    auto verdicts_differ = [&](const LassoWord& w) {
        return lasso_membership_nba(n, w) != decide_measure_one(section_automaton(a, split, w));
    };
    for (int j = 0; j < 10; ++j) {
        auto w = random_lasso(rng, 2, 4);
        ++inst.checks;
        if (!verdicts_differ(w)) ++inst.agreed;
    }
    if (!inst.pass()) {
        inst.automaton = write_oaut(a);
        for (const auto& w : all_lassos(2, 4))
            if (verdicts_differ(w)) {
                inst.lasso = lasso_to_string(w, split.sigma);
                break;
            }
        inst.detail = "section verdict differs from the eliminated automaton";
    }
    return inst;
}

CrosscheckInstance dealternation_instance(Rng& rng, std::size_t budget) {
    CrosscheckInstance inst;
    auto b = random_altmuller(rng, Alphabet::tracks({"X"}), 4);
    auto n = dealternate(b, budget);
    for (const auto& w : all_lassos(2, 5)) {
        ++inst.checks;
        if (lasso_membership_nba(n, w) == lasso_membership(b, w)) {
            ++inst.agreed;
        } else if (inst.lasso.empty()) {
            inst.lasso = lasso_to_string(w, b.alphabet);
        }
    }
    if (!inst.pass()) {
        inst.automaton = write_oaut(b);
        inst.detail = "NBA verdict differs from the acceptance game";
    }
    return inst;
}

}  // namespace

std::vector<std::string> crosscheck_suites() { return {"staiger", "section", "dealternation"}; }

CrosscheckReport run_crosscheck(const std::string& suite, std::size_t n, std::uint64_t seed, std::size_t budget) {
    std::function<CrosscheckInstance(Rng&, std::size_t)> one;
    if (suite == "staiger") one = staiger_instance;
    else if (suite == "section" || suite == "section-oracle") one = section_instance;
    else if (suite == "dealternation") one = dealternation_instance;
    else throw Error("unknown crosscheck suite '" + suite + "'");
    CrosscheckReport rep;
    rep.suite = suite == "section-oracle" ? "section" : suite;
    rep.n = n;
    rep.seed = seed;
    for (std::size_t i = 0; i < n; ++i) {
        Rng rng = instance_rng(seed, i);
        CrosscheckInstance inst;
        try {
            inst = one(rng, budget);
        } catch (const BudgetError& e) {
            inst.checks = 1;
            inst.detail = e.what();
        }
        inst.index = i;
        rep.checks += inst.checks;
        rep.agreed += inst.agreed;
        if (inst.pass()) ++rep.instances_passed;
        else rep.failures.push_back(std::move(inst));
    }
    return rep;
}

}  // namespace baire
