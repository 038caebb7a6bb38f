#include "baire/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace baire {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

std::uint32_t parse_id(const std::string& tok, std::size_t line, const char* what) {
    std::string t = tok;
    if (!t.empty() && t[0] == 'q') t = t.substr(1);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(std::string("expected ") + what + ", got '" + tok + "'", line, 1);
    return static_cast<std::uint32_t>(std::stoul(t));
}

Alphabet parse_alphabet(const std::string& text, std::size_t line) {
    std::string t = trim(text);
    if (!t.empty() && t[0] == '{') {
        if (t.back() != '}') throw ParseError("unterminated symbol alphabet", line, 1);
        std::vector<std::string> names;
        std::string inner = t.substr(1, t.size() - 2);
        std::stringstream ss(inner);
        std::string item;
        while (std::getline(ss, item, ',')) names.push_back(trim(item));
        try {
            return Alphabet::symbols(names);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), line, 1);
        }
    }
    try {
        return Alphabet::tracks(split_ws(t));
    } catch (const Error& e) {
        throw ParseError(e.what(), line, 1);
    }
}

std::vector<std::uint32_t> parse_id_list(const std::string& text, std::size_t line) {
    std::string t = text;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::vector<std::uint32_t> out;
    for (const auto& tok : split_ws(t)) out.push_back(parse_id(tok, line, "state id"));
    return out;
}

class CondParser {
public:
    CondParser(const std::string& t, std::size_t line) : text_(t), line_(line) {}

    MullerCondition run() {
        auto c = cond();
        skip();
        if (pos_ != text_.size()) fail("trailing text in condition");
        return c;
    }

    std::vector<StateSet> family_body() {
        std::vector<StateSet> fam;
        skip();
        if (pos_ >= text_.size() || text_[pos_] != '{') return fam;
        do {
            expect('{');
            StateSet s;
            skip();
            if (!peek('}')) {
                do s.push_back(number()); while (eat(','));
            }
            expect('}');
            normalize(s);
            fam.push_back(std::move(s));
        } while (eat(';'));
        return fam;
    }

    std::vector<unsigned> parity_body() {
        std::map<std::uint32_t, unsigned> pr;
        skip();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            do {
                auto q = number();
                expect(':');
                auto p = number();
                if (!pr.emplace(q, p).second) fail("duplicate priority for state " + std::to_string(q));
            } while (eat(','));
        }
        std::vector<unsigned> out(pr.size());
        for (const auto& [q, p] : pr) {
            if (q >= out.size()) fail("priorities must cover states 0..n-1");
            out[q] = p;
        }
        return out;
    }

    bool at_end() {
        skip();
        return pos_ == text_.size();
    }

private:
    const std::string& text_;
    std::size_t line_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, pos_ + 1); }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    std::uint32_t number() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected number");
        return static_cast<std::uint32_t>(std::stoul(text_.substr(start, pos_ - start)));
    }
    std::string word() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
        return text_.substr(start, pos_ - start);
    }
    std::vector<std::uint32_t> bracket_numbers() {
        expect('[');
        std::vector<std::uint32_t> v;
        if (!peek(']')) {
            do v.push_back(number()); while (eat(','));
        }
        expect(']');
        return v;
    }

    MullerCondition cond() {
        std::string w = word();
        expect('(');
        MullerCondition c;
        if (w == "muller") {
            c = MullerCondition::explicit_family(family_body());
        } else if (w == "parity") {
            c = MullerCondition::parity(parity_body());
        } else if (w == "projected") {
            auto colors = bracket_numbers();
            expect(',');
            c = MullerCondition::projected(colors, cond());
        } else if (w == "category_b") {
            auto states = bracket_numbers();
            expect(',');
            expect('[');
            std::vector<PlayerTag> tags;
            if (!peek(']')) {
                do {
                    skip();
                    if (eat('E')) tags.push_back(PlayerTag::Exists);
                    else if (eat('A')) tags.push_back(PlayerTag::Forall);
                    else fail("expected player tag E or A");
                } while (eat(','));
            }
            expect(']');
            expect(',');
            if (tags.size() != states.size()) fail("category_b needs one tag per state");
            c = MullerCondition::category_b(states, tags, cond());
        } else if (w == "complement") {
            c = MullerCondition::complement(cond());
        } else {
            fail("unknown condition '" + w + "'");
        }
        expect(')');
        return c;
    }
};

std::string join_ids(const std::vector<std::uint32_t>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string family_string(const std::vector<StateSet>& fam) {
    std::string s;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        if (i) s += ";";
        s += "{" + join_ids(fam[i], ",") + "}";
    }
    return s;
}

std::string parity_string(const std::vector<unsigned>& pr) {
    std::string s;
    for (std::size_t q = 0; q < pr.size(); ++q) {
        if (q) s += ",";
        s += std::to_string(q) + ":" + std::to_string(pr[q]);
    }
    return s;
}

std::string acceptance_line(const MullerCondition& c) {
    switch (c.kind()) {
        case MullerCondition::Kind::Explicit:
            return "muller: " + family_string(*c.family()) + "\n";
        case MullerCondition::Kind::Parity:
            return "parity: " + parity_string(*c.priorities()) + "\n";
        default:
            return "condition: " + condition_to_string(c) + "\n";
    }
}

std::string header(const char* kind, const Alphabet& a, std::size_t states, const std::string& initial) {
    std::string s = std::string("kind: ") + kind + "\n";
    s += "alphabet: " + a.describe() + "\n";
    s += "states: " + std::to_string(states) + "\n";
    s += "initial: " + initial + "\n";
    return s;
}

std::string transition(StateId q, const Alphabet& a, LetterId x, const std::string& rhs) {
    return std::to_string(q) + " -" + a.letter_name(x) + "-> " + rhs + "\n";
}

struct RawTransition {
    StateId from;
    LetterId letter;
    Expr rhs;
    std::size_t line;
};

struct RawAutomaton {
    std::string kind;
    std::optional<Alphabet> alphabet;
    std::optional<std::size_t> states;
    std::vector<std::uint32_t> initial;
    bool has_initial = false;
    std::vector<RawTransition> transitions;
    std::optional<std::vector<std::uint32_t>> buchi;
    std::optional<std::vector<unsigned>> parity;
    std::optional<MullerCondition> condition;
};

RawAutomaton parse_raw(const std::string& text) {
    RawAutomaton r;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    std::vector<std::pair<std::string, std::size_t>> pending;
    auto set_condition = [&](MullerCondition c, std::size_t line) {
        if (r.condition || r.buchi || r.parity) throw ParseError("more than one acceptance section", line, 1);
        r.condition = std::move(c);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.find("->") != std::string::npos) {
            pending.emplace_back(line, lineno);
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("unrecognized line '" + line + "'", lineno, 1);
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (key == "kind") {
            r.kind = value;
        } else if (key == "alphabet") {
            r.alphabet = parse_alphabet(value, lineno);
        } else if (key == "states") {
            r.states = parse_id(value, lineno, "state count");
        } else if (key == "initial") {
            r.initial = parse_id_list(value, lineno);
            r.has_initial = true;
        } else if (key == "buchi") {
            if (r.condition || r.buchi || r.parity) throw ParseError("more than one acceptance section", lineno, 1);
            r.buchi = parse_id_list(value, lineno);
        } else if (key == "parity") {
            if (r.condition || r.buchi || r.parity) throw ParseError("more than one acceptance section", lineno, 1);
            CondParser p(value, lineno);
            r.parity = p.parity_body();
            if (!p.at_end()) throw ParseError("trailing text after priorities", lineno, 1);
        } else if (key == "muller") {
            CondParser p(value, lineno);
            auto fam = p.family_body();
            if (!p.at_end()) throw ParseError("trailing text after Muller family", lineno, 1);
            set_condition(MullerCondition::explicit_family(std::move(fam)), lineno);
        } else if (key == "condition") {
            set_condition(CondParser(value, lineno).run(), lineno);
        } else {
            throw ParseError("unknown header '" + key + "'", lineno, 1);
        }
    }
    if (r.kind.empty()) throw ParseError("missing 'kind:' header", lineno, 1);
    if (!r.alphabet) throw ParseError("missing 'alphabet:' header", lineno, 1);
    if (!r.states) throw ParseError("missing 'states:' header", lineno, 1);
    if (!r.has_initial) throw ParseError("missing 'initial:' header", lineno, 1);
    for (const auto& [line, no] : pending) {
        auto dash = line.find('-');
        std::string src = trim(line.substr(0, dash));
        std::string rest = line.substr(dash + 1);
        auto arrow = rest.find("->");
        if (arrow == std::string::npos) throw ParseError("expected 'q -a-> expr'", no, 1);
        std::string letter = trim(rest.substr(0, arrow));
        std::string rhs = rest.substr(arrow + 2);
        RawTransition t;
        t.from = parse_id(src, no, "source state");
        auto l = r.alphabet->parse_letter(letter);
        if (!l) throw ParseError("unknown letter '" + letter + "'", no, dash + 2);
        t.letter = *l;
        t.rhs = parse_expr(rhs, no);
        t.line = no;
        if (t.from >= *r.states) throw ParseError("source state out of range", no, 1);
        r.transitions.push_back(std::move(t));
    }
    return r;
}

std::vector<std::vector<std::optional<Expr>>> transition_table(const RawAutomaton& r, bool allow_repeat) {
    std::vector<std::vector<std::optional<Expr>>> tab(*r.states,
                                                     std::vector<std::optional<Expr>>(r.alphabet->size()));
    for (const auto& t : r.transitions) {
        auto& cell = tab[t.from][t.letter];
        if (cell && !allow_repeat) throw ParseError("duplicate transition", t.line, 1);
        cell = cell ? Expr::make_or({*cell, t.rhs}) : t.rhs;
    }
    return tab;
}

StateId single_initial(const RawAutomaton& r) {
    if (r.initial.size() != 1) throw Error(r.kind + " needs exactly one initial state");
    return r.initial[0];
}

MullerCondition muller_condition(const RawAutomaton& r) {
    if (r.buchi) throw Error("buchi acceptance is only valid for kind nba");
    if (r.parity) return MullerCondition::parity(*r.parity);
    if (r.condition) return *r.condition;
    return MullerCondition();
}

std::vector<std::vector<StateId>> det_table(const RawAutomaton& r) {
    auto tab = transition_table(r, false);
    std::vector<std::vector<StateId>> delta(*r.states, std::vector<StateId>(r.alphabet->size()));
    for (std::size_t q = 0; q < tab.size(); ++q)
        for (std::size_t a = 0; a < tab[q].size(); ++a) {
            const auto& e = tab[q][a];
            if (!e) throw Error("deterministic automaton is missing a transition from state " + std::to_string(q));
            if (e->kind != Expr::Kind::Atom || e->atom.dir != Dir::None)
                throw Error("deterministic transitions must be single states");
            delta[q][a] = e->atom.state;
        }
    return delta;
}

std::vector<std::vector<Expr>> alt_table(const RawAutomaton& r) {
    auto tab = transition_table(r, false);
    std::vector<std::vector<Expr>> delta(*r.states, std::vector<Expr>(r.alphabet->size()));
    for (std::size_t q = 0; q < tab.size(); ++q)
        for (std::size_t a = 0; a < tab[q].size(); ++a) {
            if (!tab[q][a]) throw Error("alternating automaton is missing a transition from state " + std::to_string(q));
            delta[q][a] = *tab[q][a];
        }
    return delta;
}

AltTree build_alttree(const RawAutomaton& r) {
    AltTree a;
    a.alphabet = *r.alphabet;
    a.states = *r.states;
    a.initial = single_initial(r);
    a.delta = alt_table(r);
    a.condition = muller_condition(r);
    a.validate();
    return a;
}

}  // namespace

std::string condition_to_string(const MullerCondition& c) {
    switch (c.kind()) {
        case MullerCondition::Kind::Explicit:
            return "muller(" + family_string(*c.family()) + ")";
        case MullerCondition::Kind::Parity:
            return "parity(" + parity_string(*c.priorities()) + ")";
        case MullerCondition::Kind::Projected:
            return "projected([" + join_ids(*c.colors(), ",") + "], " + condition_to_string(*c.inner()) + ")";
        case MullerCondition::Kind::CategoryB: {
            std::string tags;
            for (std::size_t i = 0; i < c.tags()->size(); ++i) {
                if (i) tags += ",";
                tags += player_name((*c.tags())[i]);
            }
            return "category_b([" + join_ids(*c.colors(), ",") + "], [" + tags + "], " +
                   condition_to_string(*c.inner()) + ")";
        }
        case MullerCondition::Kind::Complement:
            return "complement(" + condition_to_string(*c.inner()) + ")";
    }
    return {};
}

MullerCondition parse_condition(const std::string& text) { return CondParser(text, 1).run(); }

AnyAutomaton parse_oaut(const std::string& text) {
    RawAutomaton r = parse_raw(text);
    if (r.kind == "nba") {
        if (r.parity || r.condition) throw Error("kind nba takes a buchi acceptance section");
        NBA a(*r.alphabet, *r.states);
        a.initial = r.initial;
        normalize(a.initial);
        for (const auto& t : r.transitions) {
            if (t.rhs.kind == Expr::Kind::And) throw ParseError("NBA transitions are disjunctions of states", t.line, 1);
            std::vector<Atom> atoms;
            collect_atoms(t.rhs, atoms);
            for (const auto& at : atoms) {
                if (at.dir != Dir::None) throw ParseError("NBA transitions carry no direction", t.line, 1);
                if (at.state >= a.states) throw ParseError("successor out of range", t.line, 1);
                a.add_edge(t.from, t.letter, at.state);
            }
        }
        if (r.buchi)
            for (auto q : *r.buchi) {
                if (q >= a.states) throw Error("accepting state out of range");
                a.accepting[q] = true;
            }
        a.validate();
        return a;
    }
    if (r.kind == "dpa") {
        if (r.buchi || r.condition) throw Error("kind dpa takes a parity acceptance section");
        DPA d;
        d.alphabet = *r.alphabet;
        d.states = *r.states;
        d.initial = single_initial(r);
        d.delta = det_table(r);
        d.priority = r.parity ? *r.parity : std::vector<unsigned>{};
        if (d.priority.size() != d.states) throw Error("parity section must give a priority to every state");
        d.validate();
        return d;
    }
    if (r.kind == "detmuller") {
        DetMuller d;
        d.alphabet = *r.alphabet;
        d.states = *r.states;
        d.initial = single_initial(r);
        d.delta = det_table(r);
        d.condition = muller_condition(r);
        d.validate();
        return d;
    }
    if (r.kind == "altmuller") {
        AltMuller a;
        a.alphabet = *r.alphabet;
        a.states = *r.states;
        a.initial = single_initial(r);
        a.delta = alt_table(r);
        a.condition = muller_condition(r);
        a.validate();
        return a;
    }
    if (r.kind == "alttree") return build_alttree(r);
    if (r.kind == "game") {
        auto g = as_game_automaton(build_alttree(r));
        if (!g) throw Error("transitions are not of the form (L,p) op (R,q)");
        return *g;
    }
    throw Error("unknown automaton kind '" + r.kind + "'");
}

AnyAutomaton read_oaut_file(const std::string& path) { return parse_oaut(read_text_file(path)); }

std::string kind_name(const AnyAutomaton& a) {
    static const char* names[] = {"nba", "dpa", "detmuller", "altmuller", "alttree", "game"};
    return names[a.index()];
}

const Alphabet& alphabet_of(const AnyAutomaton& a) {
    return std::visit([](const auto& x) -> const Alphabet& { return x.alphabet; }, a);
}

std::string write_oaut(const NBA& a) {
    std::string s = header("nba", a.alphabet, a.states, join_ids(a.initial, " "));
    for (StateId q = 0; q < a.states; ++q)
        for (LetterId x = 0; x < a.alphabet.size(); ++x) {
            const auto& succ = a.delta[q][x];
            if (succ.empty()) continue;
            std::string rhs;
            for (std::size_t i = 0; i < succ.size(); ++i) rhs += (i ? " | q" : "q") + std::to_string(succ[i]);
            s += transition(q, a.alphabet, x, rhs);
        }
    std::vector<std::uint32_t> acc;
    for (StateId q = 0; q < a.states; ++q)
        if (a.accepting[q]) acc.push_back(q);
    s += "buchi: " + join_ids(acc, " ") + "\n";
    return s;
}

std::string write_oaut(const DPA& a) {
    std::string s = header("dpa", a.alphabet, a.states, std::to_string(a.initial));
    for (StateId q = 0; q < a.states; ++q)
        for (LetterId x = 0; x < a.alphabet.size(); ++x)
            s += transition(q, a.alphabet, x, "q" + std::to_string(a.delta[q][x]));
    s += "parity: " + parity_string(a.priority) + "\n";
    return s;
}

std::string write_oaut(const DetMuller& a) {
    std::string s = header("detmuller", a.alphabet, a.states, std::to_string(a.initial));
    for (StateId q = 0; q < a.states; ++q)
        for (LetterId x = 0; x < a.alphabet.size(); ++x)
            s += transition(q, a.alphabet, x, "q" + std::to_string(a.delta[q][x]));
    return s + acceptance_line(a.condition);
}

namespace {

template <class A>
std::string write_alt(const char* kind, const A& a) {
    std::string s = header(kind, a.alphabet, a.states, std::to_string(a.initial));
    for (StateId q = 0; q < a.states; ++q)
        for (LetterId x = 0; x < a.alphabet.size(); ++x) s += transition(q, a.alphabet, x, to_string(a.delta[q][x]));
    return s + acceptance_line(a.condition);
}

}  // namespace

std::string write_oaut(const AltMuller& a) { return write_alt("altmuller", a); }
std::string write_oaut(const AltTree& a) { return write_alt("alttree", a); }
std::string write_oaut(const GameAutomaton& a) { return write_alt("game", a.to_alternating()); }

std::string write_oaut(const AnyAutomaton& a) {
    return std::visit([](const auto& x) { return write_oaut(x); }, a);
}

LassoWord parse_lasso(const std::string& text, const Alphabet& a) {
    std::string t;
    for (char c : text) {
        if (c == '$') t += " $ ";
        else t += c;
    }
    auto toks = split_ws(t);
    auto dollar = std::find(toks.begin(), toks.end(), "$");
    if (dollar == toks.end()) throw ParseError("lasso needs '$' between prefix and cycle", 1, text.size() + 1);
    if (std::count(toks.begin(), toks.end(), "$") > 1) throw ParseError("lasso has more than one '$'", 1, 1);
    LassoWord w;
    bool in_cycle = false;
    for (const auto& tok : toks) {
        if (tok == "$") {
            in_cycle = true;
            continue;
        }
        auto l = a.parse_letter(tok);
        if (!l) throw ParseError("unknown letter '" + tok + "' for alphabet " + a.describe(), 1, text.find(tok) + 1);
        (in_cycle ? w.cycle : w.prefix).push_back(*l);
    }
    if (w.cycle.empty()) throw ParseError("lasso cycle must be nonempty", 1, text.size() + 1);
    return w;
}

std::string lasso_to_string(const LassoWord& w, const Alphabet& a) {
    std::string s;
    for (auto x : w.prefix) s += a.letter_name(x) + " ";
    s += "$";
    for (auto x : w.cycle) s += " " + a.letter_name(x);
    return s;
}

RegularTree parse_rtree(const std::string& text, const Alphabet& default_alphabet) {
    struct Line {
        std::string id, label, l, r;
        std::size_t no;
    };
    std::vector<Line> lines;
    Alphabet alphabet = default_alphabet;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.rfind("alphabet:", 0) == 0) {
            if (!lines.empty()) throw ParseError("alphabet header after nodes", lineno, 1);
            alphabet = parse_alphabet(line.substr(9), lineno);
            continue;
        }
        auto toks = split_ws(line);
        if (toks.size() != 5 || toks[0] != "node" || toks[3].rfind("L=", 0) != 0 || toks[4].rfind("R=", 0) != 0)
            throw ParseError("expected 'node <id> <label> L=<id> R=<id>'", lineno, 1);
        lines.push_back({toks[1], toks[2], toks[3].substr(2), toks[4].substr(2), lineno});
    }
    if (lines.empty()) throw ParseError("regular tree without nodes", lineno, 1);
    RegularTree t;
    t.alphabet = alphabet;
    std::map<std::string, std::uint32_t> index;
    for (const auto& l : lines) {
        auto x = alphabet.parse_letter(l.label);
        if (!x) throw ParseError("unknown label '" + l.label + "'", l.no, 1);
        if (index.count(l.id)) throw ParseError("duplicate node id '" + l.id + "'", l.no, 1);
        index[l.id] = t.add(*x, l.id);
    }
    for (const auto& l : lines) {
        auto v = index.at(l.id);
        auto li = index.find(l.l);
        auto ri = index.find(l.r);
        if (li == index.end()) throw ParseError("unknown node '" + l.l + "'", l.no, 1);
        if (ri == index.end()) throw ParseError("unknown node '" + l.r + "'", l.no, 1);
        t.left[v] = li->second;
        t.right[v] = ri->second;
    }
    t.validate();
    return t;
}

RegularTree read_rtree_file(const std::string& path, const Alphabet& default_alphabet) {
    return parse_rtree(read_text_file(path), default_alphabet);
}

std::string write_rtree(const RegularTree& t) {
    t.validate();
    std::string s = "alphabet: " + t.alphabet.describe() + "\n";
    auto name = [&](std::uint32_t v) { return v < t.names.size() && !t.names[v].empty() ? t.names[v] : std::to_string(v); };
    for (std::uint32_t v = 0; v < t.size(); ++v)
        s += "node " + name(v) + " " + t.alphabet.letter_name(t.label[v]) + " L=" + name(t.left[v]) +
             " R=" + name(t.right[v]) + "\n";
    return s;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

}  // namespace baire
