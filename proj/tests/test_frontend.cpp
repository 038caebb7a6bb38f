#include <gtest/gtest.h>

#include <functional>

#include "baire/frontend.hpp"
#include "baire/random.hpp"
#include "helpers.hpp"

using namespace baire;
using baire::testing::lasso;

namespace {

// Letter of a track alphabet from named bits.
LetterId bits(const Alphabet& a, std::initializer_list<std::pair<const char*, bool>> set) {
    std::vector<bool> v(a.track_count(), false);
    for (const auto& [n, b] : set) v[*a.track_index(n)] = b;
    return a.from_bits(v);
}

bool accepts(const CompiledLanguage& l, const LassoWord& w) { return lasso_membership_nba(l.nba, w); }

// Random formula with free set variables X, Y and first-order variables
// bound inside.
Formula random_formula(Rng& rng, int depth, std::vector<std::string>& fo) {
    std::size_t pick = uniform(rng, 0, depth <= 0 ? 1 : 5);
    const char* sets[] = {"X", "Y"};
    switch (pick) {
        case 0:
            if (!fo.empty()) return fm::in(fo[uniform(rng, 0, fo.size() - 1)], sets[uniform(rng, 0, 1)]);
            return fm::ex1("x", fm::in("x", sets[uniform(rng, 0, 1)]));
        case 1:
            if (fo.size() >= 2) return fm::less(fo[uniform(rng, 0, fo.size() - 1)], fo[uniform(rng, 0, fo.size() - 1)]);
            return fm::truth(uniform(rng, 0, 3) > 0);
        case 2:
            return fm::neg(random_formula(rng, depth - 1, fo));
        case 3:
            return fm::conj({random_formula(rng, depth - 1, fo), random_formula(rng, depth - 1, fo)});
        case 4:
            return fm::disj({random_formula(rng, depth - 1, fo), random_formula(rng, depth - 1, fo)});
        default: {
            std::string v = "x" + std::to_string(fo.size());
            fo.push_back(v);
            Formula body = random_formula(rng, depth - 1, fo);
            fo.pop_back();
            return uniform(rng, 0, 1) ? fm::ex1(v, body) : fm::all1(v, body);
        }
    }
}

}  // namespace

TEST(Parse, Examples) {
    auto f = parse_formula("ex2 X. all1 x. (x in X -> ex1 y. (x < y & y in X))");
    EXPECT_TRUE(free_variables(f).empty());
    EXPECT_EQ(f.kind, Formula::Kind::ExistsSO);
    auto g = parse_formula("x in X");
    auto fv = free_variables(g);
    ASSERT_EQ(fv.size(), 2u);
    EXPECT_EQ(fv[0].name, "X");
    EXPECT_FALSE(fv[0].first_order);
    EXPECT_EQ(fv[1].name, "x");
    EXPECT_TRUE(fv[1].first_order);
    auto h = parse_formula("cat X. meas1 X. ex1 x. x in X");
    EXPECT_TRUE(free_variables(h).empty());
    EXPECT_EQ(h.kids[0].kind, Formula::Kind::Meas1);
    EXPECT_TRUE(free_variables(h.kids[0]).empty());
    auto s = parse_formula("all1 x, y. x < y");
    EXPECT_EQ(s.kind, Formula::Kind::ForallFO);
    EXPECT_EQ(s.kids[0].kind, Formula::Kind::ForallFO);
    EXPECT_EQ(s.span.begin, 0u);
    EXPECT_EQ(s.span.end, 16u);
}

TEST(Parse, Precedence) {
    auto f = parse_formula("~x in X & true | false -> true <-> false");
    EXPECT_EQ(f.kind, Formula::Kind::Iff);
    EXPECT_EQ(f.kids[0].kind, Formula::Kind::Implies);
    EXPECT_EQ(f.kids[0].kids[0].kind, Formula::Kind::Or);
    EXPECT_EQ(f.kids[0].kids[0].kids[0].kind, Formula::Kind::And);
    EXPECT_EQ(f.kids[0].kids[0].kids[0].kids[0].kind, Formula::Kind::Not);
    auto r = parse_formula("true -> false -> true");
    EXPECT_EQ(r.kids[1].kind, Formula::Kind::Implies);
    auto q = parse_formula("ex1 x. x in X & x in Y");
    EXPECT_EQ(q.kind, Formula::Kind::ExistsFO);
    auto i = parse_formula("inf-many(x in X)");
    EXPECT_EQ(i.kind, Formula::Kind::InfMany);
    EXPECT_EQ(i.vars[0], "x");
}

TEST(Parse, Errors) {
    try {
        parse_formula("ex1 x.\n  x in");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 7u);
    }
    EXPECT_THROW(parse_formula("ex1 X. true"), ParseError);
    EXPECT_THROW(parse_formula("ex2 x. true"), ParseError);
    EXPECT_THROW(parse_formula("X in x"), ParseError);
    EXPECT_THROW(parse_formula("x < X"), ParseError);
    EXPECT_THROW(parse_formula("U(X,X)"), ParseError);
    EXPECT_THROW(parse_formula("U(A,B) & ex1 x. ex1 y. succL(x,y)"), ParseError);
    EXPECT_THROW(parse_formula("x in X", std::vector<std::string>{"X"}), ParseError);
    EXPECT_NO_THROW(parse_formula("x in X", std::vector<std::string>{"X", "x"}));
    EXPECT_THROW(parse_formula("inf-many(x < y)"), ParseError);
    EXPECT_THROW(parse_formula("(true"), ParseError);
    EXPECT_THROW(parse_formula("true $"), ParseError);
}

TEST(Parse, PrintRoundTrip) {
    for (std::string s : {"ex2 X. all1 x. (x in X -> ex1 y. (x < y & y in X))", "~(true | false) & x = y",
                          "(true -> false) -> true", "true -> false -> true", "(a < b <-> b < a) <-> true",
                          "cat X. meas1 Y. ex1 x. x in X | x in Y", "catpath P. ex1 x. (x in P & succL(x,y))",
                          "U(A,B) | ~U(B,A)", "inf-many x. x in X", "~~(x in X)", "(ex1 x. x in X) & true"}) {
        auto f = parse_formula(s);
        auto p = to_string(f);
        EXPECT_TRUE(parse_formula(p).same_as(f)) << s << " printed " << p;
    }
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::string> fo;
        auto f = random_formula(rng, 4, fo);
        EXPECT_TRUE(parse_formula(to_string(f)).same_as(f)) << to_string(f);
    }
}

TEST(Compile, Atoms) {
    auto l = compile(parse_formula("x < y"));
    ASSERT_EQ(l.tracks, (std::vector<std::string>{"x", "y"}));
    const auto& a = l.nba.alphabet;
    LetterId o = bits(a, {}), x = bits(a, {{"x", true}}), y = bits(a, {{"y", true}}), xy = bits(a, {{"x", true}, {"y", true}});
    EXPECT_TRUE(accepts(l, lasso({x, o, y}, {o})));
    EXPECT_FALSE(accepts(l, lasso({y, x}, {o})));
    EXPECT_FALSE(accepts(l, lasso({xy}, {o})));
    EXPECT_FALSE(accepts(l, lasso({x, y, y}, {o})));
    auto m = compile(parse_formula("x in X"));
    ASSERT_EQ(m.tracks, (std::vector<std::string>{"X", "x"}));
    const auto& b = m.nba.alphabet;
    LetterId in = bits(b, {{"X", true}, {"x", true}}), X = bits(b, {{"X", true}}), xo = bits(b, {{"x", true}}), z = bits(b, {});
    EXPECT_TRUE(accepts(m, lasso({X, in}, {X, z})));
    EXPECT_FALSE(accepts(m, lasso({X, xo}, {X})));
    EXPECT_FALSE(accepts(m, lasso({in}, {in})));
    auto e = compile(parse_formula("x = y"));
    EXPECT_TRUE(accepts(e, lasso({bits(e.nba.alphabet, {{"x", true}, {"y", true}})}, {0})));
    EXPECT_FALSE(accepts(e, lasso({bits(e.nba.alphabet, {{"x", true}})}, {bits(e.nba.alphabet, {{"y", true}})})));
}

TEST(Compile, Examples) {
    auto l = compile(parse_formula("ex1 x. x in X"));
    ASSERT_EQ(l.tracks, (std::vector<std::string>{"X"}));
    EXPECT_TRUE(accepts(l, lasso({0}, {1})));
    EXPECT_FALSE(accepts(l, lasso({}, {0})));
    EXPECT_TRUE(accepts(l, lasso({0, 0, 1}, {0})));
    auto all = compile(parse_formula("all1 x. x in X"));
    EXPECT_TRUE(accepts(all, lasso({}, {1})));
    EXPECT_FALSE(accepts(all, lasso({1}, {0})));
    EXPECT_FALSE(accepts(all, lasso({1, 0}, {1})));
    auto f = compile(parse_formula("ex2 X. ex1 x. (x in X & ~(x in X))"));
    EXPECT_TRUE(is_empty(f.nba));
    auto inf = compile(parse_formula("inf-many(x in X)"));
    EXPECT_TRUE(accepts(inf, lasso({0}, {0, 1})));
    EXPECT_FALSE(accepts(inf, lasso({1, 1}, {0})));
    auto unb = compile(parse_formula("all1 x. (x in X -> ex1 y. (x < y & y in X))"));
    EXPECT_TRUE(accepts(unb, lasso({}, {0})));
    EXPECT_TRUE(accepts(unb, lasso({1}, {1, 0})));
    EXPECT_FALSE(accepts(unb, lasso({0, 1}, {0})));
}

TEST(Compile, FreeFirstOrderIsSingleton) {
    auto l = compile(parse_formula("x in X | true"));
    const auto& a = l.nba.alphabet;
    LetterId x = bits(a, {{"x", true}});
    EXPECT_TRUE(accepts(l, lasso({x}, {0})));
    EXPECT_FALSE(accepts(l, lasso({x, x}, {0})));
    EXPECT_FALSE(accepts(l, lasso({}, {0})));
}

TEST(Compile, Shadowing) {
    auto l = compile(parse_formula("ex1 x. (x in X & ex1 x. ~(x in X))"));
    EXPECT_TRUE(accepts(l, lasso({1, 0}, {1})));
    EXPECT_FALSE(accepts(l, lasso({}, {1})));
    EXPECT_FALSE(accepts(l, lasso({}, {0})));
}

TEST(Compile, Fragment) {
    auto check = [](const std::string& s, const std::string& needle) {
        try {
            compile(parse_formula(s));
            ADD_FAILURE() << s;
        } catch (const Error& e) {
            EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
        }
    };
    check("meas1 X. meas1 Y. ex1 x. (x in X & x in Y)", "undecidable fragment");
    check("ex2 Y. meas1 X. ex1 x. (x in X & x in Y)", "undecidable fragment");
    check("U(A,B)", "undecidable fragment");
    check("ex1 x. ex1 y. succL(x,y)", "tree formula");
    EXPECT_NO_THROW(compile(parse_formula("(meas1 X. inf-many(x in X)) & ex1 y. y in Y")));
}

TEST(Compile, Budget) {
    EXPECT_THROW(compile(parse_formula("all1 x. ex1 y. (x < y & y in X)"), 2), BudgetError);
}

TEST(Compile, Compositional) {
    Rng rng(21);
    auto battery = all_lassos(4, 3);
    Alphabet xy = Alphabet::tracks({"X", "Y"});
    for (int i = 0; i < 40; ++i) {
        std::vector<std::string> fo;
        Formula f = random_formula(rng, 3, fo);
        std::vector<std::string> fo2;
        Formula g = random_formula(rng, 3, fo2);
        auto lf = compile(f), lg = compile(g), ln = compile(fm::neg(f)), lo = compile(fm::disj({f, g}));
        auto full = [&](const CompiledLanguage& l) { return cylindrify(l.nba, xy); };
        NBA af = full(lf), ag = full(lg), an = full(ln), ao = full(lo);
        for (const auto& w : battery) {
            bool in_f = lasso_membership_nba(af, w);
            EXPECT_NE(in_f, lasso_membership_nba(an, w)) << to_string(f);
            EXPECT_EQ(in_f || lasso_membership_nba(ag, w), lasso_membership_nba(ao, w)) << to_string(f) << " | " << to_string(g);
        }
    }
}

TEST(Compile, ProjectionSound) {
    Rng rng(22);
    const char* formulas[] = {"ex1 x. (x in X & x in Y)", "all1 x. (x in X <-> x in Y)",
                              "all1 x. (x in Y -> x in X) & ex1 x. x in Y",
                              "all1 x. ex1 y. (x < y & y in Y & ~(y in X))", "ex1 x. all1 y. (x < y -> (y in Y <-> ~(y in X)))"};
    Alphabet ax = Alphabet::tracks({"X"});
    Alphabet axy = Alphabet::tracks({"X", "Y"});
    for (const char* s : formulas) {
        Formula f = parse_formula(s);
        auto body = compile(f);
        auto proj = compile(fm::ex2("Y", f));
        NBA b = cylindrify(body.nba, axy);
        for (const auto& w : all_lassos(2, 3)) {
            bool found = false;
            for (std::size_t e = 0; e <= 1 && !found; ++e)
                for (std::size_t k = 1; k <= 4 && !found; ++k) {
                    LassoWord base;
                    for (std::size_t i = 0; i < w.prefix.size() + e * w.cycle.size(); ++i) base.prefix.push_back(w.at(i < w.prefix.size() ? i : w.prefix.size() + (i - w.prefix.size()) % w.cycle.size()));
                    for (std::size_t r = 0; r < k; ++r) base.cycle.insert(base.cycle.end(), w.cycle.begin(), w.cycle.end());
                    std::size_t n = base.length();
                    for (std::size_t mask = 0; mask < (std::size_t{1} << n) && !found; ++mask) {
                        LassoWord ext;
                        for (std::size_t i = 0; i < n; ++i) {
                            LetterId l = axy.from_bits({ax.bit(base.at(i), 0), ((mask >> i) & 1) != 0});
                            (i < base.prefix.size() ? ext.prefix : ext.cycle).push_back(l);
                        }
                        found = lasso_membership_nba(b, ext);
                    }
                }
            EXPECT_EQ(found, lasso_membership_nba(proj.nba, w)) << s;
        }
    }
}

TEST(Decide, Examples) {
    auto v = decide_sentence(parse_formula("cat X. (ex1 x. x in X)"));
    EXPECT_TRUE(v.value);
    EXPECT_EQ(v.root, "cat");
    EXPECT_TRUE(*v.comeager);
    EXPECT_EQ(*v.measure, 1);
    EXPECT_TRUE(v.oracles_agree);
    auto w = decide_sentence(parse_formula("cat X. (all1 x. x in X)"));
    EXPECT_FALSE(w.value);
    EXPECT_FALSE(*w.comeager);
    EXPECT_EQ(*w.measure, 0);
    EXPECT_TRUE(w.oracles_agree);
    auto m = decide_sentence(parse_formula("meas1 X. inf-many(x in X)"));
    EXPECT_TRUE(m.value);
    EXPECT_EQ(m.root, "meas1");
    EXPECT_TRUE(m.oracles_agree);
    EXPECT_TRUE(decide_forall1_sentence(parse_formula("meas1 X. inf-many(x in X)")));
    EXPECT_FALSE(decide_forall1_sentence(parse_formula("meas1 X. ex1 x. all1 y. (x < y -> y in X)")));
    EXPECT_THROW(decide_forall1_sentence(parse_formula("true")), Error);
    EXPECT_THROW(decide_sentence(parse_formula("x in X")), Error);
}

TEST(Decide, Sentences) {
    struct Case {
        const char* text;
        bool value;
    };
    Case cases[] = {
        {"ex2 X. all1 x. (x in X -> ex1 y. (x < y & y in X))", true},
        {"ex2 X. (ex1 x. x in X) & all1 x. (x in X -> ex1 y. (x < y & y in X))", true},
        {"all2 X. ex1 x. x in X", false},
        {"all1 x. ex1 y. x < y", true},
        {"ex1 x. all1 y. (x < y | x = y)", true},
        {"ex1 x. all1 y. (y < x | y = x)", false},
        {"all1 x. all1 y. (x < y | y < x | x = y)", true},
        {"cat X. inf-many(x in X)", true},
        {"cat X. ex1 x. all1 y. (x < y -> ~(y in X))", false},
        {"meas1 X. ex1 x. x in X", true},
        {"~meas1 X. ex1 x. all1 y. (x < y -> y in X)", true},
        {"all2 Y. (~cat X. all1 x. (x in Y -> x in X)) | all1 x. ~(x in Y)", true},
        {"all2 Y. ~cat X. all1 x. (x in Y -> x in X) | all1 x. ~(x in Y)", false},
        {"ex2 Y. ~cat X. ex1 x. (x in X & x in Y)", true},
        {"ex2 Y. (ex1 x. x in Y) & cat X. all1 x. (x in Y -> x in X)", false},
    };
    for (const auto& c : cases) {
        SCOPED_TRACE(c.text);
        auto v = decide_sentence(parse_formula(c.text));
        EXPECT_EQ(v.value, c.value) << c.text;
        EXPECT_TRUE(v.oracles_agree) << c.text;
    }
}
