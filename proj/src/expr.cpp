#include "baire/expr.hpp"

#include <algorithm>
#include <cctype>

namespace baire {

Expr Expr::make_atom(StateId q, Dir d) {
    Expr e;
    e.kind = Kind::Atom;
    e.atom = Atom{d, q};
    return e;
}

Expr Expr::make(Kind k, std::vector<Expr> kids) {
    if (kids.empty()) throw Error("boolean node without children");
    if (kids.size() == 1) return std::move(kids.front());
    Expr e;
    e.kind = k;
    for (auto& c : kids) {
        if (c.kind == k) {
            for (auto& g : c.kids) e.kids.push_back(std::move(g));
        } else {
            e.kids.push_back(std::move(c));
        }
    }
    return e;
}

Expr Expr::make_and(std::vector<Expr> kids) { return make(Kind::And, std::move(kids)); }
Expr Expr::make_or(std::vector<Expr> kids) { return make(Kind::Or, std::move(kids)); }

bool eval(const Expr& e, const std::function<bool(const Atom&)>& truth) {
    switch (e.kind) {
        case Expr::Kind::Atom:
            return truth(e.atom);
        case Expr::Kind::And:
            for (const auto& c : e.kids)
                if (!eval(c, truth)) return false;
            return true;
        case Expr::Kind::Or:
            for (const auto& c : e.kids)
                if (eval(c, truth)) return true;
            return false;
    }
    return false;
}

void collect_atoms(const Expr& e, std::vector<Atom>& out) {
    if (e.kind == Expr::Kind::Atom) {
        out.push_back(e.atom);
        return;
    }
    for (const auto& c : e.kids) collect_atoms(c, out);
}

std::size_t node_count(const Expr& e) {
    std::size_t n = 1;
    for (const auto& c : e.kids) n += node_count(c);
    return n;
}

bool has_kind(const Expr& e, Expr::Kind k) {
    if (e.kind == k) return true;
    for (const auto& c : e.kids)
        if (has_kind(c, k)) return true;
    return false;
}

Expr map_atoms(const Expr& e, const std::function<Atom(const Atom&)>& f) {
    if (e.kind == Expr::Kind::Atom) {
        Expr r = e;
        r.atom = f(e.atom);
        return r;
    }
    Expr r;
    r.kind = e.kind;
    r.kids.reserve(e.kids.size());
    for (const auto& c : e.kids) r.kids.push_back(map_atoms(c, f));
    return r;
}

void validate(const Expr& e, std::size_t states, bool tree) {
    if (e.kind == Expr::Kind::Atom) {
        if (e.atom.state >= states) throw Error("transition atom refers to unknown state " + std::to_string(e.atom.state));
        if (tree && e.atom.dir == Dir::None) throw Error("tree automaton atom without direction");
        if (!tree && e.atom.dir != Dir::None) throw Error("word automaton atom with direction");
        return;
    }
    if (e.kids.size() < 2) throw Error("boolean node with fewer than two children");
    for (const auto& c : e.kids) validate(c, states, tree);
}

namespace {

using Model = std::vector<Atom>;

void reduce_antichain(std::vector<Model>& ms) {
    for (auto& m : ms) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
    }
    std::sort(ms.begin(), ms.end(), [](const Model& a, const Model& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Model> kept;
    for (auto& m : ms) {
        bool dominated = false;
        for (const auto& k : kept)
            if (std::includes(m.begin(), m.end(), k.begin(), k.end())) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(std::move(m));
    }
    ms = std::move(kept);
}

}  // namespace

std::vector<std::vector<Atom>> minimal_models(const Expr& e) {
    std::vector<Model> out;
    switch (e.kind) {
        case Expr::Kind::Atom:
            out.push_back({e.atom});
            return out;
        case Expr::Kind::Or:
            for (const auto& c : e.kids)
                for (auto& m : minimal_models(c)) out.push_back(std::move(m));
            break;
        case Expr::Kind::And: {
            out.push_back({});
            for (const auto& c : e.kids) {
                auto cm = minimal_models(c);
                std::vector<Model> next;
                for (const auto& a : out)
                    for (const auto& b : cm) {
                        Model m = a;
                        m.insert(m.end(), b.begin(), b.end());
                        next.push_back(std::move(m));
                    }
                reduce_antichain(next);
                out = std::move(next);
            }
            break;
        }
    }
    reduce_antichain(out);
    return out;
}

namespace {

std::string atom_string(const Atom& a) {
    std::string q = "q" + std::to_string(a.state);
    if (a.dir == Dir::None) return q;
    return std::string("(") + (a.dir == Dir::L ? "L" : "R") + "," + q + ")";
}

void print(const Expr& e, std::string& out, bool parens) {
    if (e.kind == Expr::Kind::Atom) {
        out += atom_string(e.atom);
        return;
    }
    if (parens) out += "(";
    const char* op = e.kind == Expr::Kind::And ? " & " : " | ";
    for (std::size_t i = 0; i < e.kids.size(); ++i) {
        if (i) out += op;
        print(e.kids[i], out, e.kids[i].kind != Expr::Kind::Atom);
    }
    if (parens) out += ")";
}

class ExprParser {
public:
    ExprParser(const std::string& t, std::size_t line) : text_(t), line_(line) {}

    Expr run() {
        Expr e = parse_or();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "' in expression");
        return e;
    }

private:
    const std::string& text_;
    std::size_t line_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, pos_ + 1); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr parse_or() {
        std::vector<Expr> kids{parse_and()};
        while (eat('|')) kids.push_back(parse_and());
        return Expr::make_or(std::move(kids));
    }

    Expr parse_and() {
        std::vector<Expr> kids{parse_primary()};
        while (eat('&')) kids.push_back(parse_primary());
        return Expr::make_and(std::move(kids));
    }

    StateId parse_state() {
        skip();
        if (pos_ < text_.size() && text_[pos_] == 'q') ++pos_;
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected state id");
        return static_cast<StateId>(std::stoul(text_.substr(start, pos_ - start)));
    }

    Expr parse_primary() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        if (text_[pos_] == '(') {
            std::size_t save = pos_;
            ++pos_;
            skip();
            if (pos_ < text_.size() && (text_[pos_] == 'L' || text_[pos_] == 'R')) {
                Dir d = text_[pos_] == 'L' ? Dir::L : Dir::R;
                ++pos_;
                if (eat(',')) {
                    StateId q = parse_state();
                    if (!eat(')')) fail("expected ')' after directed atom");
                    return Expr::make_atom(q, d);
                }
            }
            pos_ = save + 1;
            Expr e = parse_or();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        return Expr::make_atom(parse_state());
    }
};

}  // namespace

std::string to_string(const Expr& e) {
    std::string out;
    print(e, out, false);
    return out;
}

Expr parse_expr(const std::string& text, std::size_t line) { return ExprParser(text, line).run(); }

}  // namespace baire
