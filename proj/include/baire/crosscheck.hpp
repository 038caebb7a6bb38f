#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "baire/common.hpp"

namespace baire {

// Seeded batches comparing two independent deciders. Instance i draws from
// its own generator seeded with (seed, i), so instances are reproducible in
// isolation.
//   staiger:       decide_comeager vs language measure 1, deterministic Muller
//                  automata over {0,1} with at most 5 states.
//   section:       membership in dealternate(build_b_word(A)) vs measure 1 of
//                  the section of A, A over {0,1}x{0,1} with at most 4 states,
//                  10 random lassos of length at most 4 per automaton.
//   dealternation: NBA verdict vs acceptance game verdict, alternating Muller
//                  automata over {0,1} with at most 4 states, all lassos of
//                  length at most 5.
struct CrosscheckInstance {
    std::size_t index = 0;
    std::size_t checks = 0;
    std::size_t agreed = 0;
    bool pass() const { return checks == agreed; }
    std::string automaton;  // .oaut text, filled on failure
    std::string lasso;      // shortest disagreeing lasso, if any
    std::string detail;
};

struct CrosscheckReport {
    std::string suite;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t instances_passed = 0;
    std::size_t checks = 0;
    std::size_t agreed = 0;
    std::vector<CrosscheckInstance> failures;
    bool pass() const { return failures.empty(); }
};

std::vector<std::string> crosscheck_suites();
CrosscheckReport run_crosscheck(const std::string& suite, std::size_t n, std::uint64_t seed,
                                std::size_t budget = default_budget());

}  // namespace baire
