#include "baire/msou.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace baire {

Alphabet ror_alphabet() { return Alphabet::symbols({"0", "1", "R"}); }

std::vector<Block> decompose_blocks(const std::vector<LetterId>& word) {
    std::vector<Block> out;
    Block cur;
    for (std::size_t i = 0; i < word.size(); ++i) {
        LetterId l = word[i];
        if (l > kLetterR) throw Error("letter outside {0,1,R}");
        if (cur.letters.empty()) cur.start = i;
        cur.letters.push_back(l);
        if (l == kLetter1) ++cur.value;
        if (l == kLetterR) {
            cur.end = i;
            out.push_back(std::move(cur));
            cur = Block{};
        }
    }
    if (!cur.letters.empty()) out.push_back(std::move(cur));
    return out;
}

std::vector<LetterId> reconstruct(const std::vector<Block>& blocks) {
    std::vector<LetterId> w;
    for (const auto& b : blocks) w.insert(w.end(), b.letters.begin(), b.letters.end());
    return w;
}

BlockProfile BlockProfile::constant(unsigned c) {
    BlockProfile p;
    p.kind = Kind::Const;
    p.b = c;
    return p;
}

BlockProfile BlockProfile::arith(unsigned a, unsigned b) {
    BlockProfile p;
    p.kind = Kind::Arith;
    p.a = a;
    p.b = b;
    return p;
}

BlockProfile BlockProfile::periodic(std::vector<unsigned> period) {
    if (period.empty()) throw Error("periodic profile needs a nonempty period");
    BlockProfile p;
    p.kind = Kind::Periodic;
    p.tail = std::move(period);
    return p;
}

BlockProfile BlockProfile::explicit_values(std::vector<unsigned> head, std::vector<unsigned> tail) {
    BlockProfile p;
    p.kind = Kind::Explicit;
    p.head = std::move(head);
    p.tail = std::move(tail);
    return p;
}

namespace {

std::vector<unsigned> parse_values(const std::string& s, const std::string& whole) {
    std::vector<unsigned> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || item[0] == '-')
            throw ParseError("bad value '" + item + "' in profile '" + whole + "'", 1, 1);
        out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

std::string join(const std::vector<unsigned>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

mpq_class pow2_neg(unsigned long e) {
    mpz_class d = 1;
    d <<= e;
    mpq_class q(mpz_class(1), d);
    q.canonicalize();
    return q;
}

}  // namespace

BlockProfile BlockProfile::parse(const std::string& text) {
    if (text == "v=n") return arith(1, 1);
    if (text.rfind("v=", 0) == 0) {
        auto v = parse_values(text.substr(2), text);
        if (v.size() != 1) throw ParseError("bad profile '" + text + "'", 1, 1);
        return constant(v[0]);
    }
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("bad profile '" + text + "'", 1, 1);
    std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
    if (kind == "const") {
        auto v = parse_values(rest, text);
        if (v.size() != 1) throw ParseError("const profile takes one value", 1, 1);
        return constant(v[0]);
    }
    if (kind == "arith") {
        auto v = parse_values(rest, text);
        if (v.size() != 2) throw ParseError("arith profile takes a,b", 1, 1);
        return arith(v[0], v[1]);
    }
    if (kind == "periodic") {
        auto v = parse_values(rest, text);
        if (v.empty()) throw ParseError("periodic profile needs a nonempty period", 1, 1);
        return periodic(v);
    }
    if (kind == "explicit") {
        auto semi = rest.find(';');
        auto head = parse_values(rest.substr(0, semi), text);
        std::vector<unsigned> tail;
        if (semi != std::string::npos) tail = parse_values(rest.substr(semi + 1), text);
        return explicit_values(head, tail);
    }
    throw ParseError("unknown profile kind '" + kind + "'", 1, 1);
}

std::string BlockProfile::to_string() const {
    switch (kind) {
        case Kind::Const: return "const:" + std::to_string(b);
        case Kind::Arith: return "arith:" + std::to_string(a) + "," + std::to_string(b);
        case Kind::Periodic: return "periodic:" + join(tail);
        case Kind::Explicit: return "explicit:" + join(head) + (tail.empty() ? "" : ";" + join(tail));
    }
    return "";
}

std::optional<unsigned> BlockProfile::value(std::size_t n) const {
    switch (kind) {
        case Kind::Const: return b;
        case Kind::Arith: return static_cast<unsigned>(a * n + b);
        case Kind::Periodic: return tail[n % tail.size()];
        case Kind::Explicit:
            if (n < head.size()) return head[n];
            if (tail.empty()) return std::nullopt;
            return tail[(n - head.size()) % tail.size()];
    }
    return std::nullopt;
}

bool BlockProfile::infinite() const { return kind != Kind::Explicit || !tail.empty(); }

bool BlockProfile::bounded() const { return kind != Kind::Arith || a == 0; }

BlockProfile BlockProfile::drop_first() const {
    BlockProfile p = *this;
    switch (kind) {
        case Kind::Const: break;
        case Kind::Arith: p.b = a + b; break;
        case Kind::Periodic: std::rotate(p.tail.begin(), p.tail.begin() + 1, p.tail.end()); break;
        case Kind::Explicit:
            if (!p.head.empty())
                p.head.erase(p.head.begin());
            else if (!p.tail.empty())
                std::rotate(p.tail.begin(), p.tail.begin() + 1, p.tail.end());
            break;
    }
    return p;
}

BlockProfile lasso_profile(const LassoWord& w) {
    auto last_r = std::find(w.cycle.rbegin(), w.cycle.rend(), kLetterR);
    if (last_r == w.cycle.rend()) throw Error("lasso cycle has no R: finitely many blocks close");
    std::size_t cut = static_cast<std::size_t>(w.cycle.rend() - last_r);  // one past the last R
    std::vector<LetterId> head_word = w.prefix;
    head_word.insert(head_word.end(), w.cycle.begin(), w.cycle.begin() + static_cast<std::ptrdiff_t>(cut));
    std::vector<LetterId> tail_word(w.cycle.begin() + static_cast<std::ptrdiff_t>(cut), w.cycle.end());
    tail_word.insert(tail_word.end(), w.cycle.begin(), w.cycle.begin() + static_cast<std::ptrdiff_t>(cut));
    std::vector<unsigned> head, tail;
    for (const auto& b : decompose_blocks(head_word)) head.push_back(b.value);
    for (const auto& b : decompose_blocks(tail_word)) tail.push_back(b.value);
    for (std::size_t p = 1; p <= tail.size(); ++p) {
        if (tail.size() % p) continue;
        bool ok = true;
        for (std::size_t i = p; i < tail.size() && ok; ++i) ok = tail[i] == tail[i - p];
        if (ok) {
            tail.resize(p);
            break;
        }
    }
    while (!head.empty() && head.back() == tail.back()) {
        head.pop_back();
        std::rotate(tail.rbegin(), tail.rbegin() + 1, tail.rend());
    }
    if (head.empty()) return BlockProfile::periodic(tail);
    return BlockProfile::explicit_values(head, tail);
}

bool u_predicate(const BlockProfile& p, BlockConvention c) {
    if (!p.infinite()) throw Error("finitely many R: block values are undefined");
    const BlockProfile q = c == BlockConvention::BetweenRs ? p.drop_first() : p;
    return !q.bounded();
}

bool u_predicate(const LassoWord& w, BlockConvention c) { return u_predicate(lasso_profile(w), c); }

BlockSelection BlockSelection::all() { return {}; }

BlockSelection BlockSelection::every(std::size_t start, std::size_t step) {
    if (step == 0) throw Error("selection step must be positive");
    BlockSelection s;
    s.kind = Kind::Every;
    s.start = start;
    s.step = step;
    return s;
}

BlockSelection BlockSelection::finite(std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    BlockSelection s;
    s.kind = Kind::Finite;
    s.indices = std::move(indices);
    return s;
}

BlockSelection BlockSelection::witness() {
    BlockSelection s;
    s.kind = Kind::Witness;
    return s;
}

BlockSelection BlockSelection::parse(const std::string& text) {
    if (text == "all") return all();
    if (text == "witness") return witness();
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    auto vals = colon == std::string::npos ? std::vector<unsigned>{} : parse_values(text.substr(colon + 1), text);
    if (kind == "every" && vals.size() == 2 && vals[1] > 0) return every(vals[0], vals[1]);
    if (kind == "finite" && colon != std::string::npos) return finite({vals.begin(), vals.end()});
    throw ParseError("bad selection '" + text + "' (all, witness, every:s,k, finite:i,...)", 1, 1);
}

std::string BlockSelection::to_string() const {
    switch (kind) {
        case Kind::All: return "all";
        case Kind::Witness: return "witness";
        case Kind::Every: return "every:" + std::to_string(start) + "," + std::to_string(step);
        case Kind::Finite: {
            std::string s = "finite:";
            for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
            return s;
        }
    }
    return "";
}

std::vector<std::size_t> selected_indices(const BlockProfile& p, const BlockSelection& s, std::size_t count) {
    std::vector<std::size_t> out;
    auto exists = [&](std::size_t n) { return p.value(n).has_value(); };
    switch (s.kind) {
        case BlockSelection::Kind::Finite:
            for (auto i : s.indices) {
                if (out.size() == count) break;
                if (!exists(i)) throw Error("selected block " + std::to_string(i) + " does not exist");
                out.push_back(i);
            }
            break;
        case BlockSelection::Kind::All:
        case BlockSelection::Kind::Every:
            for (std::size_t k = 0; out.size() < count; ++k) {
                std::size_t n = s.kind == BlockSelection::Kind::All ? k : s.start + s.step * k;
                if (!exists(n)) break;
                out.push_back(n);
            }
            break;
        case BlockSelection::Kind::Witness: {
            if (p.bounded()) throw Error("witness selection needs unbounded block values");
            std::size_t n = 0;
            for (std::size_t k = 0; out.size() < count; ++k) {
                while (*p.value(n) < k + 2) ++n;
                out.push_back(n++);
            }
            break;
        }
    }
    return out;
}

RationalInterval psi_u_probability(const BlockProfile& p, const BlockSelection& s, std::size_t n) {
    if (n == 0) throw Error("truncation must be at least 1");
    bool finite_s = s.kind == BlockSelection::Kind::Finite || !p.infinite();
    auto idx = selected_indices(p, s, finite_s ? static_cast<std::size_t>(-1) : n);
    mpq_class prod = 1;
    for (auto i : idx) {
        unsigned v = *p.value(i);
        if (v == 0) return {1, 1};
        prod *= 1 - pow2_neg(v);
    }
    if (finite_s) {
        mpq_class v = 1 - prod;
        return {v, v};
    }
    if (p.bounded()) return {1, 1};
    mpq_class tail;
    if (s.kind == BlockSelection::Kind::Witness) {
        tail = pow2_neg(n + 1);
    } else {
        std::size_t start = s.kind == BlockSelection::Kind::All ? 0 : s.start;
        std::size_t step = s.kind == BlockSelection::Kind::All ? 1 : s.step;
        mpq_class r = pow2_neg(p.a * step);
        mpq_class rn = pow2_neg(p.a * step * n);
        tail = pow2_neg(p.a * start + p.b) * rn / (1 - r);
    }
    mpq_class t = 1 - tail;
    if (t < 0) t = 0;
    return {1 - prod, 1 - prod * t};
}

bool ClaimReport::all_hold() const {
    return std::all_of(instances.begin(), instances.end(), [](const ClaimInstance& c) { return c.holds; });
}

ClaimReport check_claim_instances(const std::vector<BlockProfile>& profiles, std::size_t n) {
    ClaimReport r;
    for (const auto& p : profiles) {
        if (!p.infinite()) throw Error("profile " + p.to_string() + " is finite; the claim concerns infinitely many blocks");
        if (p.bounded()) {
            for (const auto& s : {BlockSelection::all(), BlockSelection::every(0, 2), BlockSelection::every(1, 3),
                                  BlockSelection::every(3, 1), BlockSelection::every(5, 7)}) {
                auto iv = psi_u_probability(p, s, n);
                r.instances.push_back({p.to_string(), s.to_string(), iv, "= 1", iv.lo == 1 && iv.hi == 1});
            }
        } else {
            auto s = BlockSelection::witness();
            auto iv = psi_u_probability(p, s, n);
            r.instances.push_back({p.to_string(), s.to_string(), iv, "< 1", iv.hi <= mpq_class(1, 2)});
        }
    }
    return r;
}

namespace {

struct PsiNames {
    std::string S, B, X, x, y, z;
};

Formula succ(const std::string& x, const std::string& y, const std::string& z) {
    return fm::conj({fm::less(x, y), fm::neg(fm::ex1(z, fm::conj({fm::less(x, z), fm::less(z, y)})))});
}

Formula union_of_blocks(const std::string& T, const std::string& xr, const PsiNames& n) {
    return fm::all1(n.x, fm::all1(n.y, fm::implies(fm::conj({succ(n.x, n.y, n.z), fm::neg(fm::in(n.x, xr))}),
                                                   fm::iff(fm::in(n.x, T), fm::in(n.y, T)))));
}

Formula rewrite(const Formula& f, std::set<std::string>& used) {
    if (f.kind == Formula::Kind::UPred) {
        Formula g = psi_u(f.vars[0], f.vars[1], used);
        g.span = f.span;
        return g;
    }
    Formula g = f;
    for (auto& k : g.kids) k = rewrite(k, used);
    return g;
}

}  // namespace

Formula psi_u(const std::string& x1, const std::string& xr, std::set<std::string>& used) {
    used.insert(x1);
    used.insert(xr);
    auto fresh = [&](const std::string& base) {
        std::string s = fresh_name(used, base);
        used.insert(s);
        return s;
    };
    PsiNames n;
    n.S = fresh("S");
    n.B = fresh("B");
    n.X = fresh("X");
    n.x = fresh("x");
    n.y = fresh("y");
    n.z = fresh("z");
    Formula guard = fm::conj({fm::all1(n.x, fm::neg(fm::conj({fm::in(n.x, x1), fm::in(n.x, xr)}))),
                              fm::all1(n.x, fm::ex1(n.y, fm::conj({fm::less(n.x, n.y), fm::in(n.y, xr)})))});
    Formula infinite_s = fm::all1(n.x, fm::ex1(n.y, fm::conj({fm::less(n.x, n.y), fm::in(n.y, n.S)})));
    Formula subset = fm::all1(n.x, fm::implies(fm::in(n.x, n.B), fm::in(n.x, n.S)));
    Formula one_r = fm::conj(
        {fm::ex1(n.x, fm::conj({fm::in(n.x, n.B), fm::in(n.x, xr)})),
         fm::all1(n.x, fm::all1(n.y, fm::implies(fm::conj({fm::in(n.x, n.B), fm::in(n.x, xr), fm::in(n.y, n.B),
                                                            fm::in(n.y, xr)}),
                                                 fm::equal(n.x, n.y))))});
    Formula block = fm::conj({union_of_blocks(n.B, xr, n), one_r});
    Formula cover = fm::all1(n.x, fm::implies(fm::conj({fm::in(n.x, n.B), fm::in(n.x, x1)}), fm::in(n.x, n.X)));
    Formula hit = fm::quant(Formula::Kind::Meas1, n.X, fm::ex2(n.B, fm::conj({subset, block, cover})));
    Formula body = fm::conj({union_of_blocks(n.S, xr, n), infinite_s, fm::neg(hit)});
    return fm::conj({guard, fm::ex2(n.S, body)});
}

Formula rewrite_u_to_psi(const Formula& f) {
    std::set<std::string> used = all_names(f);
    return rewrite(f, used);
}

}  // namespace baire
