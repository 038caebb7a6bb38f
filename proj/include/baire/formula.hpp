#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "baire/common.hpp"

namespace baire {

struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
};

// Formula AST. Variables starting with a lowercase letter are first order,
// all others second order. `vars` holds atom arguments or the bound variable.
struct Formula {
    enum class Kind {
        True,
        False,
        Less,
        Equal,
        In,
        SuccL,
        SuccR,
        UPred,
        U1Pred,
        Not,
        And,
        Or,
        Implies,
        Iff,
        ExistsFO,
        ForallFO,
        ExistsSO,
        ForallSO,
        Cat,
        Meas1,
        CatPath,
        Meas1Path,
        InfMany
    };

    Kind kind = Kind::True;
    std::vector<std::string> vars;
    std::vector<Formula> kids;
    Span span;

    bool is_quantifier() const;
    bool same_as(const Formula& o) const;  // structural equality ignoring spans
};

const char* kind_name(Formula::Kind k);
bool is_first_order(const std::string& name);

struct FreeVar {
    std::string name;
    bool first_order = false;
    bool operator<(const FreeVar& o) const { return name < o.name; }
    bool operator==(const FreeVar& o) const = default;
};

std::vector<FreeVar> free_variables(const Formula& f);  // sorted by name
std::set<std::string> all_names(const Formula& f);
std::string fresh_name(const std::set<std::string>& used, const std::string& base);

std::size_t node_count(const Formula& f);
std::size_t count_kind(const Formula& f, Formula::Kind k);
bool has_tree_atoms(const Formula& f);
bool has_word_atoms(const Formula& f);

// Parses the concrete syntax. With `declared`, every free variable must be
// listed there.
Formula parse_formula(const std::string& text, const std::optional<std::vector<std::string>>& declared = std::nullopt);
std::string to_string(const Formula& f);

// Builders.
namespace fm {
Formula truth(bool v);
Formula less(const std::string& x, const std::string& y);
Formula equal(const std::string& x, const std::string& y);
Formula in(const std::string& x, const std::string& X);
Formula succ_l(const std::string& x, const std::string& y);
Formula succ_r(const std::string& x, const std::string& y);
Formula u_pred(const std::string& x1, const std::string& xr);
Formula u1_pred(const std::string& y);
Formula neg(Formula f);
Formula conj(std::vector<Formula> fs);
Formula disj(std::vector<Formula> fs);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula quant(Formula::Kind k, const std::string& v, Formula body);
Formula ex1(const std::string& v, Formula body);
Formula all1(const std::string& v, Formula body);
Formula ex2(const std::string& v, Formula body);
Formula all2(const std::string& v, Formula body);
}  // namespace fm

}  // namespace baire
