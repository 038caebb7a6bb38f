#include "baire/common.hpp"

#include <algorithm>
#include <cstdlib>

namespace baire {

std::size_t default_budget() {
    if (const char* env = std::getenv("BAIRE_BUDGET")) {
        try {
            long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw Error("BAIRE_BUDGET must be a positive integer");
    }
    return kDefaultBudget;
}

void normalize(StateSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool is_subset(const StateSet& a, const StateSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

StateSet set_union(const StateSet& a, const StateSet& b) {
    StateSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string to_string(const StateSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

}  // namespace baire
