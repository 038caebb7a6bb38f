#include "baire/muller.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace baire {

struct MullerCondition::Impl {
    Kind kind = Kind::Explicit;
    std::vector<StateSet> family;
    std::set<StateSet> lookup;
    std::vector<unsigned> priority;
    std::vector<StateId> color;
    std::vector<PlayerTag> tag;
    std::optional<MullerCondition> inner;
};

MullerCondition::MullerCondition() : impl_(std::make_shared<Impl>()) {}

MullerCondition MullerCondition::explicit_family(std::vector<StateSet> family) {
    auto impl = std::make_shared<Impl>();
    for (auto& s : family) {
        normalize(s);
        impl->lookup.insert(s);
    }
    impl->family.assign(impl->lookup.begin(), impl->lookup.end());
    MullerCondition c;
    c.impl_ = std::move(impl);
    return c;
}

MullerCondition MullerCondition::parity(std::vector<unsigned> priority) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Parity;
    impl->priority = std::move(priority);
    MullerCondition c;
    c.impl_ = std::move(impl);
    return c;
}

MullerCondition MullerCondition::projected(std::vector<StateId> color, MullerCondition inner) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Projected;
    impl->color = std::move(color);
    impl->inner = std::move(inner);
    MullerCondition c;
    c.impl_ = std::move(impl);
    return c;
}

MullerCondition MullerCondition::category_b(std::vector<StateId> a_state, std::vector<PlayerTag> tag,
                                            MullerCondition inner) {
    if (a_state.size() != tag.size()) throw Error("category condition: tag/state size mismatch");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::CategoryB;
    impl->color = std::move(a_state);
    impl->tag = std::move(tag);
    impl->inner = std::move(inner);
    MullerCondition c;
    c.impl_ = std::move(impl);
    return c;
}

MullerCondition MullerCondition::complement(MullerCondition inner) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Complement;
    impl->inner = std::move(inner);
    MullerCondition c;
    c.impl_ = std::move(impl);
    return c;
}

MullerCondition::Kind MullerCondition::kind() const { return impl_->kind; }

const std::vector<StateSet>* MullerCondition::family() const {
    return impl_->kind == Kind::Explicit ? &impl_->family : nullptr;
}
const std::vector<unsigned>* MullerCondition::priorities() const {
    return impl_->kind == Kind::Parity ? &impl_->priority : nullptr;
}
const MullerCondition* MullerCondition::inner() const { return impl_->inner ? &*impl_->inner : nullptr; }
const std::vector<StateId>* MullerCondition::colors() const {
    return (impl_->kind == Kind::Projected || impl_->kind == Kind::CategoryB) ? &impl_->color : nullptr;
}
const std::vector<PlayerTag>* MullerCondition::tags() const {
    return impl_->kind == Kind::CategoryB ? &impl_->tag : nullptr;
}

namespace {

StateSet project(const StateSet& s, const std::vector<StateId>& color) {
    StateSet out;
    out.reserve(s.size());
    for (auto x : s) {
        if (x >= color.size()) throw Error("condition applied to unknown state " + std::to_string(x));
        out.push_back(color[x]);
    }
    normalize(out);
    return out;
}

}  // namespace

bool MullerCondition::accepts(const StateSet& s) const {
    const Impl& m = *impl_;
    switch (m.kind) {
        case Kind::Explicit:
            return m.lookup.count(s) > 0;
        case Kind::Parity: {
            if (s.empty()) return false;
            unsigned best = 0;
            for (auto x : s) {
                if (x >= m.priority.size()) throw Error("parity condition applied to unknown state");
                best = std::max(best, m.priority[x]);
            }
            return best % 2 == 0;
        }
        case Kind::Projected:
            return m.inner->accepts(project(s, m.color));
        case Kind::CategoryB: {
            if (s.empty()) return false;
            bool has_e = false, has_a = false;
            for (auto x : s) {
                if (x >= m.tag.size()) throw Error("category condition applied to unknown state");
                (m.tag[x] == PlayerTag::Exists ? has_e : has_a) = true;
            }
            if (!has_e) return true;
            if (!has_a) return false;
            return m.inner->accepts(project(s, m.color));
        }
        case Kind::Complement:
            return !m.inner->accepts(s);
    }
    return false;
}

std::size_t MullerCondition::referenced_states() const {
    const Impl& m = *impl_;
    switch (m.kind) {
        case Kind::Explicit: {
            std::size_t n = 0;
            for (const auto& s : m.family)
                if (!s.empty()) n = std::max<std::size_t>(n, s.back() + 1);
            return n;
        }
        case Kind::Parity:
            return m.priority.size();
        case Kind::Projected:
        case Kind::CategoryB:
            return m.color.size();
        case Kind::Complement:
            return m.inner->referenced_states();
    }
    return 0;
}

std::vector<StateSet> MullerCondition::enumerate(std::size_t n) const {
    if (impl_->kind == Kind::Explicit) {
        std::vector<StateSet> out;
        for (const auto& s : impl_->family)
            if (s.empty() || s.back() < n) out.push_back(s);
        return out;
    }
    if (n > 20) throw BudgetError("cannot enumerate a Muller family over more than 20 states");
    std::vector<StateSet> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        StateSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) s.push_back(static_cast<StateId>(i));
        if (accepts(s)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Children of a Zielonka node; structural for parity-shaped conditions,
// brute force otherwise.
std::vector<StateSet> zielonka_children(const MullerCondition& cond, const StateSet& c, bool status,
                                        std::size_t& work, std::size_t budget) {
    std::vector<StateSet> out;
    if (const auto* prio = cond.priorities()) {
        int target = -1;
        for (auto x : c) {
            unsigned p = (*prio)[x];
            if ((p % 2 == 0) != status) target = std::max(target, static_cast<int>(p));
        }
        if (target < 0) return out;
        StateSet d;
        for (auto x : c)
            if (static_cast<int>((*prio)[x]) <= target) d.push_back(x);
        out.push_back(std::move(d));
        return out;
    }
    if (cond.kind() == MullerCondition::Kind::CategoryB && cond.inner()->priorities()) {
        const auto& tag = *cond.tags();
        const auto& color = *cond.colors();
        const auto& prio = *cond.inner()->priorities();
        StateSet ca, ce;
        for (auto x : c) (tag[x] == PlayerTag::Forall ? ca : ce).push_back(x);
        if (ca.empty() || ce.empty()) return out;
        std::vector<StateSet> cand;
        if (!status) cand.push_back(ca);
        if (status) cand.push_back(ce);
        int target = -1;
        for (auto x : c) {
            unsigned p = prio[color[x]];
            if ((p % 2 == 0) != status) target = std::max(target, static_cast<int>(p));
        }
        if (target >= 0) {
            StateSet d;
            bool has_a = false, has_e = false;
            for (auto x : c)
                if (static_cast<int>(prio[color[x]]) <= target) {
                    d.push_back(x);
                    (tag[x] == PlayerTag::Forall ? has_a : has_e) = true;
                }
            if (has_a && has_e) cand.push_back(std::move(d));
        }
        for (std::size_t i = 0; i < cand.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < cand.size(); ++j)
                if (i != j && is_subset(cand[i], cand[j]) && (cand[i] != cand[j] || j < i)) dominated = true;
            if (!dominated) out.push_back(cand[i]);
        }
        return out;
    }
    std::size_t m = c.size();
    if (m > 20) throw BudgetError("Zielonka tree: node with " + std::to_string(m) + " states is too large to expand");
    std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
    std::vector<std::uint32_t> opposite;
    StateSet s;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        if (++work > budget) throw BudgetError("Zielonka tree construction exceeded its budget");
        s.clear();
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1u) s.push_back(c[i]);
        if (cond.accepts(s) != status) opposite.push_back(mask);
    }
    std::sort(opposite.begin(), opposite.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa > pb;
        return a < b;
    });
    std::vector<std::uint32_t> kept;
    for (auto mask : opposite) {
        bool dominated = false;
        for (auto k : kept)
            if ((mask & k) == mask) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(mask);
    }
    for (auto mask : kept) {
        StateSet d;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1u) d.push_back(c[i]);
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

ZielonkaTree::ZielonkaTree(const MullerCondition& cond, StateSet domain, std::size_t budget) {
    normalize(domain);
    std::size_t work = 0;
    Node root;
    root.label = std::move(domain);
    root.accepting = !root.label.empty() && cond.accepts(root.label);
    nodes_.push_back(std::move(root));
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_.size() > 100000) throw BudgetError("Zielonka tree has too many nodes");
        if (nodes_[i].label.empty()) continue;
        auto kids = zielonka_children(cond, nodes_[i].label, nodes_[i].accepting, work, budget);
        for (auto& k : kids) {
            Node n;
            n.label = std::move(k);
            n.accepting = !nodes_[i].accepting;
            n.depth = nodes_[i].depth + 1;
            n.parent = static_cast<int>(i);
            height_ = std::max(height_, n.depth);
            nodes_.push_back(std::move(n));
            nodes_[i].children.push_back(static_cast<int>(nodes_.size() - 1));
        }
    }
    // Leaves in left-to-right order.
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (nodes_[v].children.empty()) leaves_.push_back(v);
        for (auto it = nodes_[v].children.rbegin(); it != nodes_[v].children.rend(); ++it) stack.push_back(*it);
    }
}

ZielonkaAutomaton::ZielonkaAutomaton(const MullerCondition& cond, StateSet domain) : tree_(cond, domain) {
    empty_accepted_ = cond.accepts({});
    const auto& nodes = tree_.nodes();
    const auto& dom = nodes[0].label;
    StateId maxs = dom.empty() ? 0 : dom.back();
    dom_pos_.assign(dom.empty() ? 0 : maxs + 1, -1);
    for (std::size_t i = 0; i < dom.size(); ++i) dom_pos_[dom[i]] = static_cast<int>(i);
    in_.resize(nodes.size());
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        in_[v].assign(dom.size(), false);
        for (auto x : nodes[v].label) in_[v][dom_pos_[x]] = true;
    }
    leaf_index_.assign(nodes.size(), -1);
    for (std::size_t i = 0; i < tree_.leaves().size(); ++i) leaf_index_[tree_.leaves()[i]] = static_cast<int>(i);
    base_ = tree_.height() + 2;
    if ((base_ % 2 == 0) != nodes[0].accepting) ++base_;
}

int ZielonkaAutomaton::leftmost_leaf(int node) const {
    const auto& nodes = tree_.nodes();
    while (!nodes[node].children.empty()) node = nodes[node].children.front();
    return node;
}

unsigned ZielonkaAutomaton::max_priority() const { return base_; }

ZielonkaAutomaton::Step ZielonkaAutomaton::step(std::uint32_t memory, StateId s) const {
    if (s >= dom_pos_.size() || dom_pos_[s] < 0) return {memory, neutral_priority()};
    const auto& nodes = tree_.nodes();
    int pos = dom_pos_[s];
    int leaf = tree_.leaves()[memory];
    int x = leaf;
    int below = -1;
    while (!in_[x][pos]) {
        below = x;
        x = nodes[x].parent;
    }
    unsigned prio = base_ - nodes[x].depth;
    if (x == leaf) return {memory, prio};
    const auto& kids = nodes[x].children;
    std::size_t i = std::find(kids.begin(), kids.end(), below) - kids.begin();
    int next = kids[(i + 1) % kids.size()];
    return {static_cast<std::uint32_t>(leaf_index_[leftmost_leaf(next)]), prio};
}

}  // namespace baire
