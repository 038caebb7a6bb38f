#pragma once

#include <optional>

#include <gmpxx.h>

#include "baire/automata.hpp"
#include "baire/formula.hpp"

namespace baire {

// Letters 0, 1, R with ids 0, 1, 2.
Alphabet ror_alphabet();
constexpr LetterId kLetter0 = 0;
constexpr LetterId kLetter1 = 1;
constexpr LetterId kLetterR = 2;

// Maximal run of positions starting at 0 or after an R and ending at the next
// R (inclusive). A trailing run without R is open.
struct Block {
    std::size_t start = 0;
    std::optional<std::size_t> end;
    unsigned value = 0;  // number of 1s
    std::vector<LetterId> letters;
};

std::vector<Block> decompose_blocks(const std::vector<LetterId>& word);
std::vector<LetterId> reconstruct(const std::vector<Block>& blocks);

// Block values v_0, v_1, ...: an explicit head followed by a periodic tail,
// or a symbolic constant or arithmetic sequence v_n = a*n + b.
struct BlockProfile {
    enum class Kind { Explicit, Const, Arith, Periodic };
    Kind kind = Kind::Explicit;
    std::vector<unsigned> head;
    std::vector<unsigned> tail;  // periodic part, empty for a finite profile
    unsigned a = 0;
    unsigned b = 0;

    static BlockProfile constant(unsigned c);
    static BlockProfile arith(unsigned a, unsigned b);
    static BlockProfile periodic(std::vector<unsigned> period);
    static BlockProfile explicit_values(std::vector<unsigned> head, std::vector<unsigned> tail = {});

    // Forms: const:c, arith:a,b, periodic:v1,...,  explicit:v0,...;t1,...,
    // v=n (arith:1,1) and v=c (const:c).
    static BlockProfile parse(const std::string& text);
    std::string to_string() const;

    std::optional<unsigned> value(std::size_t n) const;  // nullopt past a finite profile
    bool infinite() const;
    bool bounded() const;
    // Drops the initial block, for the convention counting only runs between Rs.
    BlockProfile drop_first() const;
};

// Profile of a lasso over {0,1,R}; the cycle must contain R. The tail period
// is minimal.
BlockProfile lasso_profile(const LassoWord& w);

enum class BlockConvention { Blocks, BetweenRs };

// Block values unbounded.
bool u_predicate(const BlockProfile& p, BlockConvention c = BlockConvention::Blocks);
bool u_predicate(const LassoWord& w, BlockConvention c = BlockConvention::Blocks);

// Selected set S of block indices.
struct BlockSelection {
    enum class Kind { All, Every, Finite, Witness };
    Kind kind = Kind::All;
    std::size_t start = 0;  // Every: start + step * k
    std::size_t step = 1;
    std::vector<std::size_t> indices;  // Finite

    static BlockSelection all();
    static BlockSelection every(std::size_t start, std::size_t step);
    static BlockSelection finite(std::vector<std::size_t> indices);
    // k-th selected block is the first after the previous one with v >= k + 2.
    static BlockSelection witness();

    // Forms: all, witness, every:s,k, finite:i,j,...
    static BlockSelection parse(const std::string& text);
    std::string to_string() const;
};

// First `count` selected indices (fewer if S is finite).
std::vector<std::size_t> selected_indices(const BlockProfile& p, const BlockSelection& s, std::size_t count);

struct RationalInterval {
    mpq_class lo;
    mpq_class hi;
    bool exact() const { return lo == hi; }
    bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
};

// Certified bounds on 1 - prod_{n in S} (1 - 2^-v_n) using the first N
// selected factors and a closed-form bound on the tail.
RationalInterval psi_u_probability(const BlockProfile& p, const BlockSelection& s, std::size_t n);

struct ClaimInstance {
    std::string profile;
    std::string selection;
    RationalInterval interval;
    std::string expectation;  // "= 1" or "< 1"
    bool holds = false;
};
struct ClaimReport {
    std::vector<ClaimInstance> instances;
    bool all_hold() const;
};

// Bounded profiles: probability exactly 1 on a battery of infinite selections.
// Unbounded profiles: the witness selection has upper bound at most 1/2.
ClaimReport check_claim_instances(const std::vector<BlockProfile>& profiles, std::size_t n = 30);

// Replaces every U(X1,XR) by the formula expressing unbounded block values
// through a nested meas1. The result is syntax only.
Formula rewrite_u_to_psi(const Formula& f);
Formula psi_u(const std::string& x1, const std::string& xr, std::set<std::string>& used);

}  // namespace baire
