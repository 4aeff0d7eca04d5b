#include "twobridge/relator.hpp"

#include <algorithm>

#include "twobridge/error.hpp"

namespace twobridge {

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    auto q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --q;
    return q;
}

bool unit_interval(const Slope& r) {
    return !r.is_infinite() && r.numerator() > 0 && r.numerator() <= r.denominator();
}

bool is_palindrome(const std::vector<int>& v) {
    return std::equal(v.begin(), v.begin() + static_cast<long>(v.size() / 2), v.rbegin());
}

std::vector<int> concat(const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

} // namespace

std::int64_t floor_star(std::int64_t num, std::int64_t den) {
    if (den <= 0)
        throw DomainError("floor_star needs a positive denominator");
    auto f = floor_div(num, den);
    return num % den == 0 ? f - 1 : f;
}

std::int64_t ceil_star(std::int64_t num, std::int64_t den) {
    if (den <= 0)
        throw DomainError("ceil_star needs a positive denominator");
    return floor_div(num, den) + 1;
}

std::int64_t floor_star(const Slope& t) {
    if (t.is_infinite())
        throw DomainError("floor_star of infinity");
    return floor_star(t.numerator(), t.denominator());
}

std::int64_t ceil_star(const Slope& t) {
    if (t.is_infinite())
        throw DomainError("ceil_star of infinity");
    return ceil_star(t.numerator(), t.denominator());
}

RelatorBundle riley_word(const Slope& r) {
    RelatorBundle bundle;
    bundle.r = r;
    if (r.is_infinite()) {
        // u_{1/0} is the empty word; its S-sequences stay empty.
        return bundle;
    }
    if (r.is_zero()) {
        bundle.u = Word("ab");
        bundle.s_seq = SSeq{{2}};
        bundle.cyclic_s_seq = CyclicSSeq({2});
        return bundle;
    }
    if (!unit_interval(r))
        throw DomainError("relator words are defined here for 0 <= r <= 1 and r = inf, got " + r.str());

    const std::int64_t q = r.numerator();
    const std::int64_t p = r.denominator();
    std::vector<Letter> hat;
    for (std::int64_t i = 1; i <= p - 1; ++i) {
        bool negative = floor_div(i * q, p) % 2 != 0;
        Generator gen = (i % 2 == 1) ? Generator::b : Generator::a;
        hat.push_back({gen, negative});
    }
    bundle.hat_u = Word::from_letters(hat);

    Word middle = p % 2 == 1 ? Word(q % 2 == 0 ? "b" : "B") : Word("A");
    bundle.u = Word("a") + bundle.hat_u + middle + bundle.hat_u.inverse();
    bundle.s_seq = s_sequence(bundle.u);
    bundle.cyclic_s_seq = cyclic_s_sequence(bundle.u);
    return bundle;
}

SSeq s_of_slope(const Slope& r) {
    if (!r.is_infinite() && r.is_zero())
        return SSeq{{2}};
    if (!unit_interval(r))
        throw DomainError("S(r) is defined for 0 <= r <= 1, got " + r.str());
    const std::int64_t q = r.numerator();
    const std::int64_t p = r.denominator();
    SSeq seq;
    for (std::int64_t j = 1; j <= 2 * q; ++j)
        seq.runs.push_back(static_cast<int>(floor_star(j * p, q) - floor_star((j - 1) * p, q)));
    return seq;
}

Decomposition decompose(const Slope& r) {
    if (!unit_interval(r))
        throw DomainError("decompose needs 0 < r <= 1, got " + r.str());
    const auto cf = cf_expand(r);
    const int m = static_cast<int>(cf.quotients.front());
    const bool single = cf.quotients.size() == 1;
    const SSeq full = s_of_slope(r);
    const std::size_t q = full.size() / 2;
    const std::vector<int> half(full.runs.begin(), full.runs.begin() + static_cast<long>(q));
    const CyclicSSeq cs(full.runs);

    // The half-rotation symmetry leaves only the split point inside the
    // first half to choose; each candidate is checked against all properties.
    for (std::size_t cut = 0; cut < q; ++cut) {
        std::vector<int> s1(half.begin(), half.begin() + static_cast<long>(cut));
        std::vector<int> s2(half.begin() + static_cast<long>(cut), half.end());
        if (single != s1.empty())
            continue;
        if (!is_palindrome(s1) || !is_palindrome(s2))
            continue;
        if (!s1.empty() && (s1.front() != m + 1 || s1.back() != m + 1))
            continue;
        if (s2.front() != m || s2.back() != m)
            continue;
        if (!s1.empty() && cs.count_occurrences(s1) != 2)
            continue;
        if (cs.count_occurrences(s2) != 2)
            continue;
        if (concat(concat(s1, s2), concat(s1, s2)) != full.runs)
            throw InternalError("half-rotation symmetry of S(r) fails for r = " + r.str());
        return Decomposition{SSeq{std::move(s1)}, SSeq{std::move(s2)}, m};
    }
    throw InternalError("no (S1,S2,S1,S2) decomposition found for r = " + r.str());
}

ConnectionReport check_connection(std::int64_t p, const Slope& s) {
    if (p < 2)
        throw DomainError("check_connection needs p >= 2");
    const auto dom = fundamental_intervals(Slope(1, p));
    if (!dom.in_i1(s) && !dom.in_i2(s))
        throw DomainError(s.str() + " is not in I1(1/p) ∪ I2(1/p) for p = " + std::to_string(p));
    if (s.is_zero() && p == 2)
        throw DomainError("the connection conditions fail for s = 0 when p = 2");

    const auto dec = decompose(Slope(1, p));
    ConnectionReport report;
    report.cs = s.is_zero() ? CyclicSSeq({2}) : CyclicSSeq(s_of_slope(s).runs);
    const auto& runs = report.cs.runs();
    report.max_entry = *std::max_element(runs.begin(), runs.end());
    report.contains_s1_s2 = report.cs.contains(concat(dec.s1.runs, dec.s2.runs));
    report.contains_s2_s1 = report.cs.contains(concat(dec.s2.runs, dec.s1.runs));
    if (report.contains_s1_s2 || report.contains_s2_s1)
        throw InternalError("CS(" + s.str() + ") contains a forbidden (S1,S2) pattern for p = " +
                            std::to_string(p));
    if (report.max_entry >= p)
        throw InternalError("CS(" + s.str() + ") has an entry >= p = " + std::to_string(p));
    return report;
}

} // namespace twobridge
