#pragma once

// Homotopy of essential simple loops on the bridge sphere of K(1/p).

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "twobridge/diagram.hpp"
#include "twobridge/farey.hpp"
#include "twobridge/word.hpp"

namespace twobridge {

enum class VerdictReason { SameReducedSlope, TauPartner, BothNullHomotopic, Distinct };
std::string_view reason_name(VerdictReason reason);

struct HomotopyVerdict {
    bool homotopic = false;
    VerdictReason reason = VerdictReason::Distinct;
    Slope reduced_s;
    Slope reduced_s2;
    std::optional<AnnularDiagram> certificate;  // tau-partner only
};

// q1/(p q1 - p1) for s = q1/p1 with q1 >= 1. DomainError when p q1 = p1,
// where the partner is the class of ∞.
Slope partner_slope(std::int64_t p, const Slope& s);

// ((p - b_1, ..., p - b_n)); DomainError if some b_i >= p.
CyclicSSeq complement_cs(std::int64_t p, const CyclicSSeq& cs);

HomotopyVerdict decide_homotopic(std::int64_t p, const Slope& s, const Slope& s2);

struct TermFormulaReport {
    Slope partner;
    std::vector<int> via_ceil_star;  // s_j(s') from the ⌈·⌉^* chain, j = 1..q1
    std::vector<int> via_terms;      // p - s_j(s) + [j = 1] - [j = q1]
    std::vector<int> direct;         // first half of S(s') from the closed form
    CyclicSSeq complement;           // ((p - s_1(s), ..., p - s_q1(s))) doubled
    bool chain_matches = false;
    bool cyclic_matches = false;
};
// Recomputes S(s') for the partner s' of s two ways and compares with the
// closed form. Raises InternalError on any mismatch.
TermFormulaReport partner_term_formula_check(std::int64_t p, const Slope& s);

} // namespace twobridge
