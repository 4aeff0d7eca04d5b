#include "twobridge/decide.hpp"

#include "twobridge/error.hpp"
#include "twobridge/relator.hpp"

namespace twobridge {

std::string_view reason_name(VerdictReason reason) {
    switch (reason) {
    case VerdictReason::SameReducedSlope: return "same-reduced-slope";
    case VerdictReason::TauPartner: return "tau-partner";
    case VerdictReason::BothNullHomotopic: return "both-null-homotopic";
    case VerdictReason::Distinct: return "distinct";
    }
    return "distinct";
}

Slope partner_slope(std::int64_t p, const Slope& s) {
    if (p < 2)
        throw DomainError("partner slopes need p >= 2");
    if (s.is_infinite() || s.numerator() <= 0)
        throw DomainError("partner slopes need s = q1/p1 with q1 >= 1, got " + s.str());
    const std::int64_t q1 = s.numerator(), p1 = s.denominator();
    const std::int64_t den = p * q1 - p1;
    if (den == 0)
        throw DomainError("p q1 - p1 = 0: " + s.str() + " is 1/p and its partner is the class of inf");
    return Slope(q1, den);
}

CyclicSSeq complement_cs(std::int64_t p, const CyclicSSeq& cs) {
    std::vector<int> out;
    for (int b : cs.runs()) {
        if (b >= p)
            throw DomainError("complement needs every entry below p = " + std::to_string(p));
        out.push_back(static_cast<int>(p) - b);
    }
    return CyclicSSeq(std::move(out));
}

HomotopyVerdict decide_homotopic(std::int64_t p, const Slope& s, const Slope& s2) {
    if (p < 2)
        throw DomainError("decide needs p >= 2");
    const Slope r(1, p);
    const ReflectionGroup group(r);
    HomotopyVerdict v;
    v.reduced_s = group.reduce(s);
    v.reduced_s2 = group.reduce(s2);
    auto null_class = [&](const Slope& t) { return t.is_infinite() || t == r; };

    if (null_class(v.reduced_s) && null_class(v.reduced_s2)) {
        v.homotopic = true;
        v.reason = VerdictReason::BothNullHomotopic;
    } else if (v.reduced_s == v.reduced_s2) {
        v.homotopic = true;
        v.reason = VerdictReason::SameReducedSlope;
    } else if (!null_class(v.reduced_s) && !null_class(v.reduced_s2) && !v.reduced_s.is_zero() &&
               !v.reduced_s2.is_zero() && partner_slope(p, v.reduced_s) == v.reduced_s2) {
        v.homotopic = true;
        v.reason = VerdictReason::TauPartner;
        v.certificate = build_fan(p, v.reduced_s);
    }
    return v;
}

TermFormulaReport partner_term_formula_check(std::int64_t p, const Slope& s) {
    if (s.is_zero())
        throw DomainError("the term formula needs s != 0");
    TermFormulaReport report;
    report.partner = partner_slope(p, s);
    const std::int64_t q1 = s.numerator(), p1 = s.denominator();
    const SSeq ss = s_of_slope(s);
    const SSeq partner_seq = s_of_slope(report.partner);

    // ⌊j(pq1 - p1)/q1⌋_* = jp - ⌈j p1/q1⌉^*
    auto outer_floor = [&](std::int64_t j) { return j * p - ceil_star(j * p1, q1); };
    std::vector<int> half;
    for (std::int64_t j = 1; j <= q1; ++j) {
        report.via_ceil_star.push_back(static_cast<int>(outer_floor(j) - outer_floor(j - 1)));
        const int term = static_cast<int>(p) - ss.runs[j - 1] + (j == 1 ? 1 : 0) - (j == q1 ? 1 : 0);
        report.via_terms.push_back(term);
        report.direct.push_back(partner_seq.runs[j - 1]);
        half.push_back(static_cast<int>(p) - ss.runs[j - 1]);
    }
    half.insert(half.end(), half.begin(), half.end());
    report.complement = CyclicSSeq(half);
    report.chain_matches = report.via_ceil_star == report.via_terms && report.via_terms == report.direct;
    report.cyclic_matches = report.complement == CyclicSSeq(partner_seq.runs);
    if (!report.chain_matches)
        throw InternalError("floor-star chain for S(s') disagrees with S(" + report.partner.str() + ")");
    if (!report.cyclic_matches)
        throw InternalError("CS(" + report.partner.str() + ") is not the complement of CS(" + s.str() + ")");
    return report;
}

} // namespace twobridge
