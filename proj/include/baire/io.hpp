#pragma once

#include <string>
#include <variant>

#include "baire/automata.hpp"
#include "baire/tree.hpp"

namespace baire {

// Text automaton format:
//   kind: nba|dpa|detmuller|altmuller|alttree|game
//   alphabet: X Y      (tracks) or {0,1,R} (symbols)
//   states: n
//   initial: ids
//   q -a-> expr
//   buchi: ids | parity: id:prio,... | muller: {ids};{ids};... | condition: <cond>
// where <cond> is muller(...), parity(...), projected([colors], <cond>),
// category_b([states], [E|A,...], <cond>) or complement(<cond>).
using AnyAutomaton = std::variant<NBA, DPA, DetMuller, AltMuller, AltTree, GameAutomaton>;

AnyAutomaton parse_oaut(const std::string& text);
AnyAutomaton read_oaut_file(const std::string& path);
std::string kind_name(const AnyAutomaton& a);
const Alphabet& alphabet_of(const AnyAutomaton& a);

std::string write_oaut(const NBA& a);
std::string write_oaut(const DPA& a);
std::string write_oaut(const DetMuller& a);
std::string write_oaut(const AltMuller& a);
std::string write_oaut(const AltTree& a);
std::string write_oaut(const GameAutomaton& a);
std::string write_oaut(const AnyAutomaton& a);

std::string condition_to_string(const MullerCondition& c);
MullerCondition parse_condition(const std::string& text);

// Lasso format: letters separated by spaces, `$` between prefix and cycle.
LassoWord parse_lasso(const std::string& text, const Alphabet& a);
std::string lasso_to_string(const LassoWord& w, const Alphabet& a);

// Regular tree format: optional `alphabet:` header, then lines
// `node <id> <label> L=<id> R=<id>`; the first node is the root.
RegularTree parse_rtree(const std::string& text, const Alphabet& default_alphabet = label_alphabet());
RegularTree read_rtree_file(const std::string& path, const Alphabet& default_alphabet = label_alphabet());
std::string write_rtree(const RegularTree& t);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace baire
