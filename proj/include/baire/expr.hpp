#pragma once

#include <functional>
#include <string>
#include <vector>

#include "baire/common.hpp"

namespace baire {

enum class Dir : std::uint8_t { None = 0, L = 1, R = 2 };

struct Atom {
    Dir dir = Dir::None;
    StateId state = 0;

    auto operator<=>(const Atom&) const = default;
};

// Positive boolean formula over atoms. And/Or nodes always carry at least two
// children; the builders collapse singletons.
struct Expr {
    enum class Kind : std::uint8_t { Atom, And, Or };

    Kind kind = Kind::Atom;
    Atom atom;
    std::vector<Expr> kids;

    static Expr make_atom(StateId q, Dir d = Dir::None);
    static Expr make_and(std::vector<Expr> kids);
    static Expr make_or(std::vector<Expr> kids);
    static Expr make(Kind k, std::vector<Expr> kids);

    bool operator==(const Expr&) const = default;
};

bool eval(const Expr& e, const std::function<bool(const Atom&)>& truth);
void collect_atoms(const Expr& e, std::vector<Atom>& out);
std::size_t node_count(const Expr& e);
bool has_kind(const Expr& e, Expr::Kind k);
Expr map_atoms(const Expr& e, const std::function<Atom(const Atom&)>& f);
void validate(const Expr& e, std::size_t states, bool tree);

// Minimal satisfying atom sets, each sorted; the family is antichain-reduced.
std::vector<std::vector<Atom>> minimal_models(const Expr& e);

std::string to_string(const Expr& e);
Expr parse_expr(const std::string& text, std::size_t line = 0);

}  // namespace baire
