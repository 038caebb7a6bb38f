#include <gtest/gtest.h>

#include "baire/category.hpp"
#include "baire/graph.hpp"
#include "baire/random.hpp"
#include "baire/tree.hpp"
#include "helpers.hpp"

using namespace baire;

namespace {

RegularTree random_tree(Rng& rng, const Alphabet& a, std::size_t max_nodes) {
    RegularTree t;
    t.alphabet = a;
    std::size_t n = uniform(rng, 1, max_nodes);
    for (std::size_t v = 0; v < n; ++v) t.add(static_cast<LetterId>(uniform(rng, 0, a.size() - 1)));
    for (std::size_t v = 0; v < n; ++v) {
        t.left[v] = static_cast<std::uint32_t>(uniform(rng, 0, n - 1));
        t.right[v] = static_cast<std::uint32_t>(uniform(rng, 0, n - 1));
    }
    return t;
}

GameAutomaton random_game(Rng& rng, const Alphabet& a, std::size_t max_states, bool deterministic) {
    GameAutomaton g;
    g.alphabet = a;
    g.states = uniform(rng, 1, max_states);
    g.delta.assign(g.states, std::vector<GameTransition>(a.size()));
    for (auto& row : g.delta)
        for (auto& t : row) {
            t.op = deterministic || uniform(rng, 0, 1) ? Expr::Kind::And : Expr::Kind::Or;
            t.left = static_cast<StateId>(uniform(rng, 0, g.states - 1));
            t.right = static_cast<StateId>(uniform(rng, 0, g.states - 1));
        }
    g.condition = random_family(rng, g.states);
    return g;
}

// Deterministic automaton: every branch must satisfy the condition. The
// inf-sets of branches are the projections of the strongly connected node
// sets of the reachable product graph.
bool branchwise_membership(const GameAutomaton& a, const RegularTree& t) {
    std::map<std::pair<std::uint32_t, StateId>, std::uint32_t> id;
    std::vector<std::pair<std::uint32_t, StateId>> nodes;
    std::vector<std::pair<std::uint32_t, StateId>> todo{{0, a.initial}};
    id[{0, a.initial}] = 0;
    nodes.push_back({0, a.initial});
    Adjacency g(1);
    while (!todo.empty()) {
        auto [v, q] = todo.back();
        todo.pop_back();
        auto from = id[{v, q}];
        const auto& tr = a.delta[q][t.label[v]];
        for (auto next : {std::make_pair(t.left[v], tr.left), std::make_pair(t.right[v], tr.right)}) {
            auto [it, fresh] = id.emplace(next, static_cast<std::uint32_t>(nodes.size()));
            if (fresh) {
                nodes.push_back(next);
                g.emplace_back();
                todo.push_back(next);
            }
            g[from].push_back(it->second);
        }
    }
    const std::size_t n = nodes.size();
    EXPECT_LE(n, 16u);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<char> keep(n);
        for (std::size_t i = 0; i < n; ++i) keep[i] = mask >> i & 1u;
        auto scc = strongly_connected(g, keep);
        if (scc.count != 1) continue;
        auto cyc = nontrivial_components(g, scc);
        if (!cyc[0]) continue;
        StateSet inf;
        for (std::size_t i = 0; i < n; ++i)
            if (keep[i]) inf.push_back(nodes[i].second);
        normalize(inf);
        if (!a.condition.accepts(inf)) return false;
    }
    return true;
}

}  // namespace

TEST(TreeMembership, Examples) {
    auto one = constant_tree(label_alphabet(), 1);
    auto zero = constant_tree(label_alphabet(), 0);
    EXPECT_TRUE(tree_membership(root_one_game(), one));
    EXPECT_FALSE(tree_membership(root_one_game(), zero));
    // Some node labelled 1 on the leftmost branch; the 1 is only reachable to the right.
    GameAutomaton left_one;
    left_one.alphabet = label_alphabet();
    left_one.states = 3;
    GameTransition search{Expr::Kind::And, 0, 2}, found{Expr::Kind::And, 1, 1}, idle{Expr::Kind::And, 2, 2};
    left_one.delta = {{search, found}, {found, found}, {idle, idle}};
    left_one.condition = MullerCondition::explicit_family({{1}, {2}, {1, 2}});
    RegularTree t;
    t.alphabet = label_alphabet();
    t.add(0);
    t.add(1);
    t.left[0] = 0;
    t.right[0] = 1;
    EXPECT_FALSE(tree_membership(left_one, t));
    auto g = acceptance_arena_tree(left_one.to_alternating(), t);
    EXPECT_EQ(g.arena.size(), 8u);
}

TEST(TreeMembership, DeterministicAgreesWithBranches) {
    Rng rng(8);
    for (int i = 0; i < 150; ++i) {
        auto a = random_game(rng, label_alphabet(), 3, true);
        auto t = random_tree(rng, label_alphabet(), 4);
        ASSERT_EQ(tree_membership(a, t), branchwise_membership(a, t)) << i;
    }
}

TEST(TreeMembership, GameFormRoundTrip) {
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        auto a = random_game(rng, label_alphabet(), 3, false);
        auto back = as_game_automaton(a.to_alternating());
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(back->delta, a.delta);
    }
    EXPECT_FALSE(as_game_automaton(one_below_everywhere()).has_value());
}

TEST(BuildBTree, ShapeAndSize) {
    auto a = full_tree_game(Alphabet::tracks({"X", "Y"}));
    for (auto& row : a.delta)
        for (auto& t : row) t.op = Expr::Kind::Or;
    auto b = build_b_tree(a, std::vector<std::string>{"Y"});
    EXPECT_EQ(b.states, 2u);
    const Expr& e = b.delta[b_state(0, PlayerTag::Forall)][0];
    EXPECT_EQ(e.kind, Expr::Kind::And);
    ASSERT_EQ(e.kids.size(), 4u);
    for (const auto& k : e.kids) {
        EXPECT_EQ(k.kind, Expr::Kind::Or);
        EXPECT_EQ(k.kids.size(), 2u);
    }
    EXPECT_TRUE(b.condition.accepts({b_state(0, PlayerTag::Forall)}));
    EXPECT_FALSE(b.condition.accepts({b_state(0, PlayerTag::Exists)}));
    Rng rng(4);
    for (int i = 0; i < 20; ++i) {
        auto r = random_game(rng, Alphabet::tracks({"X", "Y"}), 5, false);
        auto br = build_b_tree(r, std::vector<std::string>{"Y"});
        EXPECT_EQ(br.states, 2 * r.states);
        auto bw = build_b_word(DetMuller{r.alphabet, r.states, 0, std::vector<std::vector<StateId>>(r.states, std::vector<StateId>(4, 0)), r.condition},
                               std::vector<std::string>{"Y"});
        for (std::uint32_t m = 0; m < (1u << br.states) && br.states <= 10; ++m) {
            StateSet s;
            for (StateId q = 0; q < br.states; ++q)
                if (m >> q & 1u) s.push_back(q);
            ASSERT_EQ(br.condition.accepts(s), bw.condition.accepts(s));
        }
    }
}

TEST(DecideComeagerTree, Fixtures) {
    EXPECT_TRUE(decide_comeager_tree(full_tree_game()).comeager);
    EXPECT_FALSE(decide_comeager_tree(root_one_game()).comeager);
    EXPECT_TRUE(decide_comeager_tree(dense_ones_game()).comeager);
}

TEST(DecideComeagerTree, DenseOnesContainsOneBelow) {
    Rng rng(21);
    auto exact = one_below_everywhere();
    auto game = dense_ones_game();
    int accepted = 0;
    for (int i = 0; i < 200; ++i) {
        auto t = random_tree(rng, label_alphabet(), 5);
        bool in = tree_membership(exact, t);
        EXPECT_EQ(in, regular_tree_every_node_sees_one(t)) << i;
        if (in) {
            ++accepted;
            EXPECT_TRUE(tree_membership(game, t)) << i;
        }
    }
    EXPECT_GT(accepted, 20);
}

TEST(DecideComeagerTree, WeakeningNeverLosesComeager) {
    Rng rng(9);
    for (int i = 0; i < 30; ++i) {
        auto a = random_game(rng, label_alphabet(), 3, false);
        auto fam = a.condition.enumerate(a.states);
        auto b = a;
        auto more = fam;
        for (const auto& s : random_family(rng, a.states).enumerate(a.states)) more.push_back(s);
        std::sort(more.begin(), more.end());
        more.erase(std::unique(more.begin(), more.end()), more.end());
        b.condition = MullerCondition::explicit_family(more);
        if (decide_comeager_tree(a).comeager) EXPECT_TRUE(decide_comeager_tree(b).comeager) << i;
    }
}

TEST(FTransducer, Pins) {
    auto dirs = direction_alphabet();
    EXPECT_EQ(f_transducer(constant_tree(label_alphabet(), 0)), (LassoWord{{}, {1}}));
    EXPECT_EQ(f_transducer(constant_tree(label_alphabet(), 1)), (LassoWord{{}, {0}}));
    RegularTree t;
    t.alphabet = label_alphabet();
    t.add(1);
    auto z = t.add(0);
    t.left[0] = t.right[0] = z;
    EXPECT_EQ(f_transducer(t), (LassoWord{{0}, {1}}));
    EXPECT_EQ(dirs.letter_name(0), "L");
}

TEST(FTransducer, SurjectiveOnSmallLassos) {
    for (const auto& w : all_lassos(2, 4)) {
        auto t = f_preimage_tree(w);
        EXPECT_EQ(f_transducer(t), canonical(w));
        auto out = f_transducer(t);
        EXPECT_LE(out.cycle.size(), 2 * t.size());
    }
}

TEST(FCylinder, MeasureMatchesEnumeration) {
    EXPECT_EQ(f_cylinder_preimage_measure({}), 1);
    EXPECT_EQ(f_cylinder_preimage_measure({0}), mpq_class(1, 2));
    EXPECT_EQ(f_cylinder_preimage_measure({0, 1}), mpq_class(1, 4));
    for (std::size_t len = 1; len <= 8; ++len)
        for (std::uint32_t m = 0; m < (1u << len); ++m) {
            std::vector<LetterId> v;
            for (std::size_t i = 0; i < len; ++i) v.push_back(m >> i & 1u);
            mpz_class den = 1;
            den <<= len;
            ASSERT_EQ(f_cylinder_preimage_measure(v), mpq_class(1, den));
        }
    // Brute force over labellings of the first three levels.
    for (std::size_t len = 1; len <= 3; ++len)
        for (std::uint32_t m = 0; m < (1u << len); ++m) {
            std::vector<LetterId> v;
            for (std::size_t i = 0; i < len; ++i) v.push_back(m >> i & 1u);
            const std::uint32_t nodes = (1u << len) - 1;
            std::uint32_t hits = 0;
            for (std::uint32_t lab = 0; lab < (1u << nodes); ++lab) {
                std::uint32_t node = 0;  // heap numbering
                bool ok = true;
                for (auto d : v) {
                    bool one = lab >> node & 1u;
                    if (one != (d == 0)) ok = false;
                    node = 2 * node + (one ? 1 : 2);
                }
                hits += ok;
            }
            mpq_class expect(hits, 1u << nodes);
            expect.canonicalize();
            EXPECT_EQ(expect, f_cylinder_preimage_measure(v));
        }
}

TEST(LeftmostCylinder, Measure) {
    EXPECT_EQ(leftmost_cylinder_preimage_measure({true, false, true}), mpq_class(1, 8));
    EXPECT_EQ(leftmost_cylinder_preimage_measure({}), 1);
}

TEST(WitnessU1, GrowthAndSum) {
    EXPECT_EQ(minimal_growth(0), 0u);
    EXPECT_EQ(minimal_growth(1), 2u);
    EXPECT_EQ(minimal_growth(2), 5u);
    EXPECT_EQ(minimal_growth(3), 11u);
    auto w = witness_u1_tree(3);
    EXPECT_EQ(w.partial_sum, mpq_class(25, 64));
    EXPECT_LE(w.partial_sum, 1);
    EXPECT_TRUE(w.prefix.valid());
    EXPECT_EQ(w.prefix.label.size(), (1u << 12) - 1);
    EXPECT_TRUE(w.forest_marked);
    EXPECT_TRUE(w.lower_blocks_see_one);
    ASSERT_EQ(w.hit_probability.size(), 3u);
    EXPECT_EQ(w.hit_probability[0], mpq_class(1, 2));
    EXPECT_EQ(w.hit_probability[1], mpq_class(1, 4));
    EXPECT_EQ(w.hit_probability[2], mpq_class(1, 32));
}

TEST(TreePrefix, Extends) {
    auto a = witness_u1_tree(1).prefix;
    auto b = witness_u1_tree(2).prefix;
    EXPECT_TRUE(extends(a, b));
    EXPECT_FALSE(extends(b, a));
    EXPECT_FALSE(extends(a, a));
}

TEST(InfinitelyOnes, Examples) {
    EXPECT_TRUE(regular_tree_infinitely_ones(constant_tree(label_alphabet(), 1)));
    EXPECT_FALSE(regular_tree_infinitely_ones(constant_tree(label_alphabet(), 0)));
    RegularTree t;
    t.alphabet = label_alphabet();
    t.add(0);
    auto one = t.add(1);
    t.left[0] = t.right[0] = one;
    EXPECT_TRUE(regular_tree_infinitely_ones(t));
}

TEST(InfinitelyOnes, NoRegularTreeInLAndU1) {
    Rng rng(17);
    auto exact = one_below_everywhere();
    for (int i = 0; i < 300; ++i) {
        auto t = random_tree(rng, label_alphabet(), 5);
        if (tree_membership(exact, t)) EXPECT_TRUE(regular_tree_infinitely_ones(t)) << i;
    }
}
