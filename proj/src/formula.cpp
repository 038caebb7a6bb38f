#include "baire/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace baire {

using K = Formula::Kind;

bool Formula::is_quantifier() const {
    switch (kind) {
        case K::ExistsFO:
        case K::ForallFO:
        case K::ExistsSO:
        case K::ForallSO:
        case K::Cat:
        case K::Meas1:
        case K::CatPath:
        case K::Meas1Path:
        case K::InfMany:
            return true;
        default:
            return false;
    }
}

bool Formula::same_as(const Formula& o) const {
    if (kind != o.kind || vars != o.vars || kids.size() != o.kids.size()) return false;
    for (std::size_t i = 0; i < kids.size(); ++i)
        if (!kids[i].same_as(o.kids[i])) return false;
    return true;
}

const char* kind_name(K k) {
    switch (k) {
        case K::True: return "true";
        case K::False: return "false";
        case K::Less: return "<";
        case K::Equal: return "=";
        case K::In: return "in";
        case K::SuccL: return "succL";
        case K::SuccR: return "succR";
        case K::UPred: return "U";
        case K::U1Pred: return "U1";
        case K::Not: return "~";
        case K::And: return "&";
        case K::Or: return "|";
        case K::Implies: return "->";
        case K::Iff: return "<->";
        case K::ExistsFO: return "ex1";
        case K::ForallFO: return "all1";
        case K::ExistsSO: return "ex2";
        case K::ForallSO: return "all2";
        case K::Cat: return "cat";
        case K::Meas1: return "meas1";
        case K::CatPath: return "catpath";
        case K::Meas1Path: return "meas1path";
        case K::InfMany: return "inf-many";
    }
    return "?";
}

bool is_first_order(const std::string& name) {
    return !name.empty() && std::islower(static_cast<unsigned char>(name[0]));
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, std::map<std::string, bool>& out) {
    if (f.is_quantifier()) {
        bound.push_back(f.vars[0]);
        for (const auto& k : f.kids) collect_free(k, bound, out);
        bound.pop_back();
        return;
    }
    for (const auto& v : f.vars)
        if (std::find(bound.begin(), bound.end(), v) == bound.end()) out[v] = is_first_order(v);
    for (const auto& k : f.kids) collect_free(k, bound, out);
}

void collect_names(const Formula& f, std::set<std::string>& out) {
    for (const auto& v : f.vars) out.insert(v);
    for (const auto& k : f.kids) collect_names(k, out);
}

}  // namespace

std::vector<FreeVar> free_variables(const Formula& f) {
    std::vector<std::string> bound;
    std::map<std::string, bool> m;
    collect_free(f, bound, m);
    std::vector<FreeVar> out;
    for (const auto& [n, fo] : m) out.push_back({n, fo});
    return out;
}

std::set<std::string> all_names(const Formula& f) {
    std::set<std::string> s;
    collect_names(f, s);
    return s;
}

std::string fresh_name(const std::set<std::string>& used, const std::string& base) {
    if (!used.count(base)) return base;
    for (std::size_t i = 1;; ++i) {
        std::string n = base + std::to_string(i);
        if (!used.count(n)) return n;
    }
}

std::size_t node_count(const Formula& f) {
    std::size_t n = 1;
    for (const auto& k : f.kids) n += node_count(k);
    return n;
}

std::size_t count_kind(const Formula& f, K k) {
    std::size_t n = f.kind == k ? 1 : 0;
    for (const auto& c : f.kids) n += count_kind(c, k);
    return n;
}

bool has_tree_atoms(const Formula& f) {
    if (f.kind == K::SuccL || f.kind == K::SuccR || f.kind == K::CatPath || f.kind == K::Meas1Path ||
        f.kind == K::U1Pred)
        return true;
    return std::any_of(f.kids.begin(), f.kids.end(), has_tree_atoms);
}

bool has_word_atoms(const Formula& f) {
    if (f.kind == K::UPred) return true;
    return std::any_of(f.kids.begin(), f.kids.end(), has_word_atoms);
}

namespace {

struct Token {
    enum class T { Ident, Sym, End } type = T::End;
    std::string text;
    std::size_t pos = 0;
};

class FormulaParser {
public:
    explicit FormulaParser(const std::string& text) : text_(text) { lex(); }

    Formula run() {
        Formula f = parse_iff();
        if (peek().type != Token::T::End) fail("unexpected '" + peek().text + "'", peek().pos);
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("syntax error: " + msg, line, col);
    }

    void lex() {
        std::size_t i = 0;
        while (i < text_.size()) {
            char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (c == '#') {
                while (i < text_.size() && text_[i] != '\n') ++i;
                continue;
            }
            Token t;
            t.pos = i;
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = i;
                while (j < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_' || text_[j] == '\'' ||
                        (text_[j] == '-' && text_.compare(i, j - i, "inf") == 0 && j == i + 3)))
                    ++j;
                t.type = Token::T::Ident;
                t.text = text_.substr(i, j - i);
                i = j;
            } else {
                static const char* syms[] = {"<->", "->", "<", "=", "&", "|", "~", "(", ")", ".", ","};
                bool found = false;
                for (const char* s : syms) {
                    std::size_t n = std::char_traits<char>::length(s);
                    if (text_.compare(i, n, s) == 0) {
                        t.type = Token::T::Sym;
                        t.text = s;
                        i += n;
                        found = true;
                        break;
                    }
                }
                if (!found) fail(std::string("unexpected character '") + c + "'", i);
            }
            toks_.push_back(t);
        }
        Token end;
        end.pos = text_.size();
        toks_.push_back(end);
    }

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool accept(const std::string& sym) {
        if (peek().type == Token::T::Sym && peek().text == sym) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(const std::string& sym) {
        if (!accept(sym)) fail("expected '" + sym + "'", peek().pos);
    }
    std::size_t here() const { return pos_ > 0 ? toks_[pos_ - 1].pos + toks_[pos_ - 1].text.size() : 0; }

    static bool keyword(const std::string& s) {
        static const std::set<std::string> kw = {"all1", "ex1",       "all2",     "ex2",  "cat",   "meas1", "catpath",
                                                 "meas1path", "inf-many", "true", "false", "in",    "succL", "succR",
                                                 "U", "U1"};
        return kw.count(s) > 0;
    }

    std::string variable() {
        const Token& t = peek();
        if (t.type != Token::T::Ident || keyword(t.text)) fail("expected a variable", t.pos);
        return next().text;
    }

    Formula binary(K k, Formula a, Formula b, std::size_t begin) {
        Formula f;
        f.kind = k;
        f.kids = {std::move(a), std::move(b)};
        f.span = {begin, here()};
        return f;
    }

    Formula parse_iff() {
        std::size_t begin = peek().pos;
        Formula f = parse_implies();
        while (accept("<->")) f = binary(K::Iff, std::move(f), parse_implies(), begin);
        return f;
    }

    Formula parse_implies() {
        std::size_t begin = peek().pos;
        Formula f = parse_or();
        if (accept("->")) return binary(K::Implies, std::move(f), parse_implies(), begin);
        return f;
    }

    Formula parse_or() {
        std::size_t begin = peek().pos;
        Formula f = parse_and();
        while (accept("|")) f = binary(K::Or, std::move(f), parse_and(), begin);
        return f;
    }

    Formula parse_and() {
        std::size_t begin = peek().pos;
        Formula f = parse_unary();
        while (accept("&")) f = binary(K::And, std::move(f), parse_unary(), begin);
        return f;
    }

    Formula parse_unary() {
        std::size_t begin = peek().pos;
        if (accept("~")) {
            Formula f;
            f.kind = K::Not;
            f.kids = {parse_unary()};
            f.span = {begin, here()};
            return f;
        }
        static const std::map<std::string, K> quants = {
            {"all1", K::ForallFO}, {"ex1", K::ExistsFO}, {"all2", K::ForallSO},       {"ex2", K::ExistsSO},
            {"cat", K::Cat},       {"meas1", K::Meas1},  {"catpath", K::CatPath},     {"meas1path", K::Meas1Path},
            {"inf-many", K::InfMany}};
        const Token& t = peek();
        if (t.type == Token::T::Ident) {
            auto it = quants.find(t.text);
            bool sugar_call = t.text == "inf-many" && peek(1).type == Token::T::Sym && peek(1).text == "(";
            if (it != quants.end() && !sugar_call) {
                next();
                return parse_quantifier(it->second, begin);
            }
        }
        return parse_primary();
    }

    Formula parse_quantifier(K k, std::size_t begin) {
        std::vector<std::pair<std::string, std::size_t>> vs;
        do {
            std::size_t p = peek().pos;
            std::string v = variable();
            bool fo = k == K::ExistsFO || k == K::ForallFO || k == K::InfMany;
            if (fo != is_first_order(v))
                fail(std::string(kind_name(k)) + " binds " + (fo ? "first-order (lowercase)" : "second-order (uppercase)") +
                         " variables, got '" + v + "'",
                     p);
            vs.emplace_back(v, p);
        } while (accept(","));
        expect(".");
        Formula body = parse_iff();
        for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
            Formula f;
            f.kind = k;
            f.vars = {it->first};
            f.kids = {std::move(body)};
            f.span = {it == vs.rend() - 1 ? begin : it->second, here()};
            body = std::move(f);
        }
        return body;
    }

    Formula atom(K k, std::vector<std::string> vars, std::size_t begin) {
        Formula f;
        f.kind = k;
        f.vars = std::move(vars);
        f.span = {begin, here()};
        return f;
    }

    void require_sort(const std::string& v, bool fo, std::size_t pos) {
        if (is_first_order(v) != fo)
            fail("'" + v + "' must be a " + (fo ? "first-order (lowercase)" : "second-order (uppercase)") + " variable",
                 pos);
    }

    Formula parse_primary() {
        std::size_t begin = peek().pos;
        if (accept("(")) {
            Formula f = parse_iff();
            expect(")");
            return f;
        }
        const Token& t = peek();
        if (t.type != Token::T::Ident) fail("expected a formula", t.pos);
        if (t.text == "true" || t.text == "false") {
            next();
            return atom(t.text == "true" ? K::True : K::False, {}, begin);
        }
        if (t.text == "succL" || t.text == "succR") {
            K k = t.text == "succL" ? K::SuccL : K::SuccR;
            next();
            expect("(");
            std::size_t p1 = peek().pos;
            auto x = variable();
            require_sort(x, true, p1);
            expect(",");
            std::size_t p2 = peek().pos;
            auto y = variable();
            require_sort(y, true, p2);
            expect(")");
            return atom(k, {x, y}, begin);
        }
        if (t.text == "U") {
            next();
            expect("(");
            std::size_t p1 = peek().pos;
            auto a = variable();
            require_sort(a, false, p1);
            expect(",");
            std::size_t p2 = peek().pos;
            auto b = variable();
            require_sort(b, false, p2);
            expect(")");
            if (a == b) fail("U needs two distinct set variables", p2);
            return atom(K::UPred, {a, b}, begin);
        }
        if (t.text == "U1") {
            next();
            expect("(");
            std::size_t p1 = peek().pos;
            auto a = variable();
            require_sort(a, false, p1);
            expect(")");
            return atom(K::U1Pred, {a}, begin);
        }
        if (t.text == "inf-many") {
            next();
            expect("(");
            Formula body = parse_iff();
            expect(")");
            std::vector<std::string> fo;
            for (const auto& v : free_variables(body))
                if (v.first_order) fo.push_back(v.name);
            if (fo.size() != 1) fail("inf-many(...) needs exactly one free first-order variable; use inf-many x. ...", begin);
            Formula f;
            f.kind = K::InfMany;
            f.vars = {fo[0]};
            f.kids = {std::move(body)};
            f.span = {begin, here()};
            return f;
        }
        std::size_t p1 = peek().pos;
        auto x = variable();
        if (accept("<")) {
            require_sort(x, true, p1);
            std::size_t p2 = peek().pos;
            auto y = variable();
            require_sort(y, true, p2);
            return atom(K::Less, {x, y}, begin);
        }
        if (accept("=")) {
            require_sort(x, true, p1);
            std::size_t p2 = peek().pos;
            auto y = variable();
            require_sort(y, true, p2);
            return atom(K::Equal, {x, y}, begin);
        }
        if (peek().type == Token::T::Ident && peek().text == "in") {
            next();
            require_sort(x, true, p1);
            std::size_t p2 = peek().pos;
            auto y = variable();
            require_sort(y, false, p2);
            return atom(K::In, {x, y}, begin);
        }
        fail("expected '<', '=' or 'in' after '" + x + "'", peek().pos);
    }

    const std::string& text_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

int precedence(K k) {
    switch (k) {
        case K::Iff: return 1;
        case K::Implies: return 2;
        case K::Or: return 3;
        case K::And: return 4;
        case K::Not: return 5;
        default: return 6;
    }
}

void print(const Formula& f, std::string& out, int context) {
    int p = precedence(f.kind);
    if (f.is_quantifier()) {
        bool paren = context > 0;
        if (paren) out += "(";
        out += kind_name(f.kind);
        out += " " + f.vars[0] + ". ";
        print(f.kids[0], out, 0);
        if (paren) out += ")";
        return;
    }
    switch (f.kind) {
        case K::True:
        case K::False:
            out += kind_name(f.kind);
            return;
        case K::Less:
        case K::Equal:
        case K::In:
            out += f.vars[0] + " " + kind_name(f.kind) + " " + f.vars[1];
            return;
        case K::SuccL:
        case K::SuccR:
        case K::UPred:
            out += std::string(kind_name(f.kind)) + "(" + f.vars[0] + "," + f.vars[1] + ")";
            return;
        case K::U1Pred:
            out += "U1(" + f.vars[0] + ")";
            return;
        case K::Not:
            out += "~";
            print(f.kids[0], out, 5);
            return;
        default:
            break;
    }
    bool paren = p < context || (context == p && (f.kind == K::Implies || f.kind == K::Iff));
    if (paren) out += "(";
    // Left operand binds tighter for right-associative implication.
    print(f.kids[0], out, f.kind == K::Implies ? p + 1 : p);
    out += std::string(" ") + kind_name(f.kind) + " ";
    print(f.kids[1], out, f.kind == K::Implies ? p : p + 1);
    if (paren) out += ")";
}

}  // namespace

Formula parse_formula(const std::string& text, const std::optional<std::vector<std::string>>& declared) {
    Formula f = FormulaParser(text).run();
    if (has_tree_atoms(f) && has_word_atoms(f)) throw ParseError("mixed word and tree atoms", 1, 1);
    if (declared) {
        for (const auto& v : free_variables(f))
            if (std::find(declared->begin(), declared->end(), v.name) == declared->end())
                throw ParseError("unbound variable '" + v.name + "'", 1, 1);
    }
    return f;
}

std::string to_string(const Formula& f) {
    std::string out;
    print(f, out, 0);
    return out;
}

namespace fm {

namespace {
Formula atom(K k, std::vector<std::string> vs) {
    Formula f;
    f.kind = k;
    f.vars = std::move(vs);
    return f;
}
Formula nary(K k, std::vector<Formula> fs) {
    if (fs.empty()) throw Error("empty connective");
    Formula f = std::move(fs[0]);
    for (std::size_t i = 1; i < fs.size(); ++i) {
        Formula g;
        g.kind = k;
        g.kids = {std::move(f), std::move(fs[i])};
        f = std::move(g);
    }
    return f;
}
}  // namespace

Formula truth(bool v) { return atom(v ? K::True : K::False, {}); }
Formula less(const std::string& x, const std::string& y) { return atom(K::Less, {x, y}); }
Formula equal(const std::string& x, const std::string& y) { return atom(K::Equal, {x, y}); }
Formula in(const std::string& x, const std::string& X) { return atom(K::In, {x, X}); }
Formula succ_l(const std::string& x, const std::string& y) { return atom(K::SuccL, {x, y}); }
Formula succ_r(const std::string& x, const std::string& y) { return atom(K::SuccR, {x, y}); }
Formula u_pred(const std::string& x1, const std::string& xr) { return atom(K::UPred, {x1, xr}); }
Formula u1_pred(const std::string& y) { return atom(K::U1Pred, {y}); }
Formula neg(Formula f) {
    Formula g;
    g.kind = K::Not;
    g.kids = {std::move(f)};
    return g;
}
Formula conj(std::vector<Formula> fs) { return nary(K::And, std::move(fs)); }
Formula disj(std::vector<Formula> fs) { return nary(K::Or, std::move(fs)); }
Formula implies(Formula a, Formula b) { return nary(K::Implies, {std::move(a), std::move(b)}); }
Formula iff(Formula a, Formula b) { return nary(K::Iff, {std::move(a), std::move(b)}); }
Formula quant(K k, const std::string& v, Formula body) {
    Formula f;
    f.kind = k;
    f.vars = {v};
    f.kids = {std::move(body)};
    return f;
}
Formula ex1(const std::string& v, Formula body) { return quant(K::ExistsFO, v, std::move(body)); }
Formula all1(const std::string& v, Formula body) { return quant(K::ForallFO, v, std::move(body)); }
Formula ex2(const std::string& v, Formula body) { return quant(K::ExistsSO, v, std::move(body)); }
Formula all2(const std::string& v, Formula body) { return quant(K::ForallSO, v, std::move(body)); }

}  // namespace fm

}  // namespace baire
