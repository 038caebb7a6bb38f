#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace baire {

using StateId = std::uint32_t;
using LetterId = std::uint32_t;
using StateSet = std::vector<StateId>;  // sorted, duplicate free

enum class PlayerTag : std::uint8_t { Exists = 0, Forall = 1 };

inline PlayerTag opponent(PlayerTag p) {
    return p == PlayerTag::Exists ? PlayerTag::Forall : PlayerTag::Exists;
}
inline const char* player_name(PlayerTag p) { return p == PlayerTag::Exists ? "E" : "A"; }

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a construction exceeds its configured state budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

constexpr std::size_t kDefaultBudget = 50000;

// Budget from BAIRE_BUDGET if set, else the default.
std::size_t default_budget();

void normalize(StateSet& s);
bool is_subset(const StateSet& a, const StateSet& b);
StateSet set_union(const StateSet& a, const StateSet& b);
std::string to_string(const StateSet& s);

}  // namespace baire
