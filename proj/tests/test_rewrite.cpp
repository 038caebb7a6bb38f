#include <gtest/gtest.h>

#include <functional>

#include "baire/msou.hpp"
#include "baire/rewrite.hpp"

using namespace baire;
using K = Formula::Kind;

namespace {

std::vector<std::string> names(const std::vector<FreeVar>& fv) {
    std::vector<std::string> out;
    for (const auto& v : fv) out.push_back(v.name);
    return out;
}

bool round_trips(const Formula& f) { return parse_formula(to_string(f)).same_as(f); }

}  // namespace

TEST(CategoryPath, Shape) {
    auto g = rewrite_category_path(parse_formula("catpath P. true"));
    EXPECT_EQ(g.kind, K::ExistsSO);
    EXPECT_EQ(g.vars[0], "X");
    EXPECT_EQ(count_kind(g, K::CatPath), 0u);
    EXPECT_EQ(count_kind(g, K::ForallSO), 1u);
    EXPECT_TRUE(free_variables(g).empty());
    EXPECT_TRUE(has_tree_atoms(g));
    EXPECT_TRUE(round_trips(g));
    auto left = rewrite_category_path(parse_formula("catpath P. ex1 r. ex1 c. (~(ex1 y. y < r) & succL(r,c) & c in P)"));
    EXPECT_TRUE(free_variables(left).empty());
    EXPECT_EQ(count_kind(left, K::SuccL), count_kind(g, K::SuccL) + 1);
}

TEST(CategoryPath, Homomorphic) {
    auto h = rewrite_category_path(parse_formula("~(catpath P. ex1 x. x in P) & catpath Q. ex1 x. x in Q"));
    EXPECT_EQ(h.kind, K::And);
    EXPECT_EQ(h.kids[0].kind, K::Not);
    EXPECT_EQ(h.kids[0].kids[0].kind, K::ExistsSO);
    EXPECT_EQ(count_kind(h, K::CatPath), 0u);
    EXPECT_NE(h.kids[0].kids[0].vars[0], h.kids[1].vars[0]);
    auto plain = parse_formula("ex1 x. ex1 y. succR(x,y)");
    EXPECT_TRUE(rewrite_category_path(plain).same_as(plain));
}

TEST(CategoryPath, CaptureAvoiding) {
    auto g = rewrite_category_path(parse_formula("catpath P. ex1 v. (v in P & v in X)"));
    EXPECT_EQ(names(free_variables(g)), (std::vector<std::string>{"X"}));
    EXPECT_EQ(g.vars[0], "X1");
}

TEST(MeasurePath, Shape) {
    auto plain = parse_formula("ex1 x. ex1 y. succL(x,y)");
    EXPECT_TRUE(rewrite_measure_path(plain).same_as(plain));
    auto g = rewrite_measure_path(parse_formula("meas1path Y. ex1 x. (x in Y & x in Z)"));
    EXPECT_EQ(g.kind, K::Meas1);
    EXPECT_EQ(g.kids[0].kind, K::ExistsSO);
    EXPECT_EQ(g.kids[0].vars[0], "Y");
    EXPECT_EQ(count_kind(g, K::Meas1), 1u);
    EXPECT_EQ(count_kind(g, K::Meas1Path), 0u);
    EXPECT_EQ(names(free_variables(g)), (std::vector<std::string>{"Z"}));
    EXPECT_GE(count_kind(g, K::Iff), 1u);
    EXPECT_TRUE(round_trips(g));
}

TEST(MeasurePath, NestedFreshVariables) {
    auto g = rewrite_measure_path(parse_formula("meas1path Y. meas1path W. ex1 x. (x in Y & x in W)"));
    EXPECT_EQ(count_kind(g, K::Meas1), 2u);
    ASSERT_EQ(g.kind, K::Meas1);
    const Formula* inner = &g;
    std::vector<std::string> bound;
    std::function<void(const Formula&)> walk = [&](const Formula& h) {
        if (h.kind == K::Meas1) bound.push_back(h.vars[0]);
        for (const auto& k : h.kids) walk(k);
    };
    walk(*inner);
    ASSERT_EQ(bound.size(), 2u);
    EXPECT_NE(bound[0], bound[1]);
    EXPECT_TRUE(free_variables(g).empty());
}

TEST(U1, Shape) {
    auto g = rewrite_u1(parse_formula("meas1path P. ex1 x. (x in P & x in Y)"));
    EXPECT_EQ(g.kind, K::ExistsSO);
    EXPECT_EQ(g.vars[0], "Y1");
    EXPECT_EQ(count_kind(g, K::U1Pred), 1u);
    EXPECT_EQ(count_kind(g, K::Meas1Path), 0u);
    EXPECT_EQ(count_kind(g, K::Meas1), 0u);
    EXPECT_EQ(names(free_variables(g)), (std::vector<std::string>{"Y"}));
    auto two = rewrite_u1(parse_formula("(meas1path P. true) | meas1path P. false"));
    EXPECT_EQ(count_kind(two, K::U1Pred), 2u);
    EXPECT_TRUE(round_trips(two));
    auto plain = parse_formula("true");
    EXPECT_TRUE(rewrite_u1(plain).same_as(plain));
}

TEST(Interpret, Atoms) {
    auto g = interpret_s1s_in_s2s(parse_formula("x < y"));
    EXPECT_EQ(g.kind, K::And);
    EXPECT_EQ(count_kind(g, K::Less), 1u + 2u * 1u);
    EXPECT_EQ(count_kind(g, K::SuccR), 2u);
    EXPECT_EQ(names(free_variables(g)), (std::vector<std::string>{"x", "y"}));
    auto closed = interpret_s1s_in_s2s(parse_formula("all1 x. ex1 y. x < y"));
    EXPECT_EQ(closed.kind, K::ForallFO);
    EXPECT_EQ(closed.kids[0].kind, K::Implies);
    EXPECT_EQ(count_kind(closed, K::SuccR), 2u);
}

TEST(Interpret, SecondOrder) {
    auto g = interpret_s1s_in_s2s(parse_formula("ex2 X. ex1 x. x in X"));
    EXPECT_EQ(g.kind, K::ExistsSO);
    EXPECT_EQ(g.kids[0].kind, K::And);
    EXPECT_EQ(g.kids[0].kids[0].kind, K::ForallFO);
    auto m = interpret_s1s_in_s2s(parse_formula("meas1 X. inf-many(x in X)"));
    EXPECT_EQ(m.kind, K::Meas1);
    EXPECT_EQ(count_kind(m, K::InfMany), 0u);
    EXPECT_TRUE(free_variables(m).empty());
    auto c = interpret_s1s_in_s2s(parse_formula("cat X. ex1 x. x in X"));
    EXPECT_EQ(c.kind, K::Cat);
    EXPECT_TRUE(round_trips(c));
    EXPECT_THROW(interpret_s1s_in_s2s(parse_formula("U(A,B)")), Error);
    EXPECT_THROW(interpret_s1s_in_s2s(parse_formula("ex1 x. ex1 y. succL(x,y)")), Error);
}

TEST(Interpret, PsiOutputIsTreeFormula) {
    auto g = interpret_s1s_in_s2s(rewrite_u_to_psi(parse_formula("U(A,B)")));
    EXPECT_EQ(count_kind(g, K::Meas1), 1u);
    EXPECT_EQ(names(free_variables(g)), (std::vector<std::string>{"A", "B"}));
}
