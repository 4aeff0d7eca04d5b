#pragma once

// The single relator u_r of the upper presentation <a, b | u_r> of the
// 2-bridge link group G(K(r)), and its S-sequence combinatorics.

#include <cstdint>
#include <vector>

#include "twobridge/farey.hpp"
#include "twobridge/word.hpp"

namespace twobridge {

// ⌊t⌋_*: the greatest integer strictly smaller than num/den (den > 0).
std::int64_t floor_star(std::int64_t num, std::int64_t den);
// ⌈t⌉^*: the smallest integer strictly greater than num/den (den > 0).
std::int64_t ceil_star(std::int64_t num, std::int64_t den);
std::int64_t floor_star(const Slope& t);
std::int64_t ceil_star(const Slope& t);

struct RelatorBundle {
    Slope r;
    Word u;      // u_r
    Word hat_u;  // the inner word û_r (empty for r = 0, ∞, 1)
    SSeq s_seq;  // S(u_r); (2) for r = 0, empty for r = ∞
    CyclicSSeq cyclic_s_seq;
};

// Riley's formula for u_{q/p}; accepts 0 <= r <= 1 and r = ∞.
RelatorBundle riley_word(const Slope& r);

// S(r) from the closed form s_j = ⌊jp/q⌋_* - ⌊(j-1)p/q⌋_*, for 0 < r <= 1;
// r = 0 gives (2).
SSeq s_of_slope(const Slope& r);

struct Decomposition {
    SSeq s1;  // empty iff r = 1/m
    SSeq s2;
    int m = 0;  // first partial quotient of r
};

// Splits S(r) as (S1, S2, S1, S2) and verifies the defining properties;
// a failed verification raises InternalError.
Decomposition decompose(const Slope& r);

struct ConnectionReport {
    CyclicSSeq cs;
    int max_entry = 0;
    bool contains_s1_s2 = false;
    bool contains_s2_s1 = false;
};

// Checks, for s in I1(1/p) ∪ I2(1/p), that CS(s) avoids (S1,S2) and (S2,S1)
// of S(1/p) and has every entry below p. Raises InternalError on failure.
ConnectionReport check_connection(std::int64_t p, const Slope& s);

} // namespace twobridge
