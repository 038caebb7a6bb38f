#include "baire/rewrite.hpp"

namespace baire {

using K = Formula::Kind;

namespace {

std::string fresh(std::set<std::string>& used, const std::string& base) {
    std::string s = fresh_name(used, base);
    used.insert(s);
    return s;
}

Formula leq(const std::string& x, const std::string& y) { return fm::disj({fm::less(x, y), fm::equal(x, y)}); }

Formula child(const std::string& x, const std::string& y) { return fm::disj({fm::succ_l(x, y), fm::succ_r(x, y)}); }

template <typename Fn>
Formula map_nodes(const Formula& f, K kind, std::set<std::string>& used, Fn&& fn) {
    Formula g = f;
    for (auto& k : g.kids) k = map_nodes(k, kind, used, fn);
    if (g.kind != kind) return g;
    Formula out = fn(g, used);
    out.span = f.span;
    return out;
}

}  // namespace

namespace s2s {

Formula root(const std::string& x, std::set<std::string>& used) {
    std::string y = fresh(used, "y");
    return fm::neg(fm::ex1(y, fm::less(y, x)));
}

Formula path(const std::string& P, std::set<std::string>& used) {
    std::string r = fresh(used, "r"), x = fresh(used, "x"), y = fresh(used, "y"), z = fresh(used, "z");
    Formula has_root = fm::ex1(r, fm::conj({root(r, used), fm::in(r, P)}));
    Formula closed = fm::all1(x, fm::all1(y, fm::implies(fm::conj({fm::in(y, P), fm::less(x, y)}), fm::in(x, P))));
    Formula one_child = fm::all1(
        x, fm::implies(fm::in(x, P),
                       fm::conj({fm::ex1(y, fm::conj({child(x, y), fm::in(y, P)})),
                                 fm::neg(fm::ex1(y, fm::ex1(z, fm::conj({fm::succ_l(x, y), fm::succ_r(x, z),
                                                                         fm::in(y, P), fm::in(z, P)}))))})));
    return fm::conj({has_root, closed, one_child});
}

Formula dense(const std::string& X, std::set<std::string>& used) {
    std::string v = fresh(used, "v"), w = fresh(used, "w");
    return fm::all1(v, fm::ex1(w, fm::conj({leq(v, w), fm::in(w, X)})));
}

Formula meets_infinitely(const std::string& P, const std::string& X, std::set<std::string>& used) {
    std::string v = fresh(used, "v"), w = fresh(used, "w");
    return fm::all1(v, fm::implies(fm::in(v, P), fm::ex1(w, fm::conj({fm::less(v, w), fm::in(w, P), fm::in(w, X)}))));
}

Formula f_relation(const std::string& X, const std::string& Y, std::set<std::string>& used) {
    std::string y = fresh(used, "y"), z = fresh(used, "z");
    Formula follows = fm::all1(
        y, fm::implies(fm::in(y, Y), fm::ex1(z, fm::conj({fm::succ_l(y, z), fm::iff(fm::in(z, Y), fm::in(y, X))}))));
    return fm::conj({path(Y, used), follows});
}

Formula on_leftmost_branch(const std::string& x, std::set<std::string>& used) {
    std::string y = fresh(used, "y"), z = fresh(used, "z");
    return fm::neg(fm::ex1(y, fm::ex1(z, fm::conj({fm::succ_r(z, y), leq(y, x)}))));
}

}  // namespace s2s

Formula rewrite_category_path(const Formula& f) {
    std::set<std::string> used = all_names(f);
    return map_nodes(f, K::CatPath, used, [](const Formula& g, std::set<std::string>& u) {
        const std::string& P = g.vars[0];
        std::string X = fresh(u, "X");
        Formula body = fm::all2(P, fm::implies(fm::conj({s2s::path(P, u), s2s::meets_infinitely(P, X, u)}), g.kids[0]));
        return fm::ex2(X, fm::conj({s2s::dense(X, u), body}));
    });
}

Formula rewrite_measure_path(const Formula& f) {
    std::set<std::string> used = all_names(f);
    return map_nodes(f, K::Meas1Path, used, [](const Formula& g, std::set<std::string>& u) {
        const std::string& Y = g.vars[0];
        std::string X = fresh(u, "X");
        return fm::quant(K::Meas1, X, fm::ex2(Y, fm::conj({s2s::f_relation(X, Y, u), g.kids[0]})));
    });
}

Formula rewrite_u1(const Formula& f) {
    std::set<std::string> used = all_names(f);
    return map_nodes(f, K::Meas1Path, used, [](const Formula& g, std::set<std::string>& u) {
        const std::string& P = g.vars[0];
        std::string Y = fresh(u, "Y");
        Formula finite = fm::neg(s2s::meets_infinitely(P, Y, u));
        Formula body = fm::all2(P, fm::implies(fm::conj({s2s::path(P, u), finite}), g.kids[0]));
        return fm::ex2(Y, fm::conj({fm::u1_pred(Y), body}));
    });
}

namespace {

Formula relativize(const Formula& f, std::set<std::string>& used) {
    switch (f.kind) {
        case K::UPred:
            throw Error("U has no tree interpretation; rewrite it first");
        case K::SuccL:
        case K::SuccR:
        case K::U1Pred:
        case K::CatPath:
        case K::Meas1Path:
            throw Error("interpretation expects a word formula");
        case K::ExistsFO:
            return fm::ex1(f.vars[0], fm::conj({s2s::on_leftmost_branch(f.vars[0], used), relativize(f.kids[0], used)}));
        case K::ForallFO:
            return fm::all1(f.vars[0],
                            fm::implies(s2s::on_leftmost_branch(f.vars[0], used), relativize(f.kids[0], used)));
        case K::InfMany: {
            std::string y = fresh(used, "y");
            const std::string& x = f.vars[0];
            return relativize(fm::all1(y, fm::ex1(x, fm::conj({fm::less(y, x), f.kids[0]}))), used);
        }
        case K::ExistsSO:
        case K::ForallSO: {
            const std::string& X = f.vars[0];
            std::string x = fresh(used, "x");
            Formula inside = fm::all1(x, fm::implies(fm::in(x, X), s2s::on_leftmost_branch(x, used)));
            Formula body = relativize(f.kids[0], used);
            return f.kind == K::ExistsSO ? fm::ex2(X, fm::conj({inside, body})) : fm::all2(X, fm::implies(inside, body));
        }
        default: {
            Formula g = f;
            for (auto& k : g.kids) k = relativize(k, used);
            return g;
        }
    }
}

}  // namespace

Formula interpret_s1s_in_s2s(const Formula& f) {
    if (has_tree_atoms(f)) throw Error("interpretation expects a word formula");
    std::set<std::string> used = all_names(f);
    Formula g = relativize(f, used);
    std::vector<Formula> guards;
    for (const auto& v : free_variables(f))
        if (v.first_order) guards.push_back(s2s::on_leftmost_branch(v.name, used));
    if (guards.empty()) return g;
    guards.push_back(g);
    return fm::conj(std::move(guards));
}

}  // namespace baire
