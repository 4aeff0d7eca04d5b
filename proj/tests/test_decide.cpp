#include <doctest.h>

#include <numeric>
#include <random>

#include "twobridge/decide.hpp"
#include "twobridge/error.hpp"
#include "twobridge/relator.hpp"

using namespace twobridge;

namespace {

Slope S(const char* text) {
    return Slope::parse(text);
}

std::vector<Slope> grid() {
    std::vector<Slope> out{Slope::infinity()};
    for (std::int64_t d = 1; d <= 12; ++d)
        for (std::int64_t c = -4; c <= 4; ++c)
            if (std::gcd(c, d) == 1)
                out.emplace_back(c, d);
    return out;
}

int sum(const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0);
}

} // namespace

TEST_CASE("partner slopes") {
    CHECK(partner_slope(3, S("1/2")) == S("1"));
    CHECK(partner_slope(3, S("1")) == S("1/2"));
    CHECK(partner_slope(5, S("2/3")) == S("2/7"));
    CHECK_THROWS_AS(partner_slope(3, S("1/3")), DomainError);
    CHECK_THROWS_AS(partner_slope(3, S("0")), DomainError);
    CHECK_THROWS_AS(partner_slope(3, S("inf")), DomainError);
    CHECK_THROWS_AS(partner_slope(1, S("1/2")), DomainError);
}

TEST_CASE("complement of a cyclic S-sequence") {
    CHECK(complement_cs(5, CyclicSSeq({3, 2})) == CyclicSSeq({2, 3}));
    CHECK(complement_cs(4, CyclicSSeq({1, 1})) == CyclicSSeq({3, 3}));
    CHECK_THROWS_AS(complement_cs(3, CyclicSSeq({3, 1})), DomainError);
}

TEST_CASE("decide examples") {
    auto v = decide_homotopic(3, S("1/2"), S("1"));
    CHECK(v.homotopic);
    CHECK(v.reason == VerdictReason::TauPartner);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->inner_label() == Word("Ab"));

    v = decide_homotopic(2, S("0"), S("1"));
    CHECK_FALSE(v.homotopic);
    CHECK(v.reason == VerdictReason::Distinct);
    CHECK_FALSE(v.certificate.has_value());

    v = decide_homotopic(3, S("1/2"), S("-1/2"));
    CHECK(v.homotopic);
    CHECK(v.reason == VerdictReason::SameReducedSlope);
    CHECK(v.reduced_s2 == S("1/2"));

    v = decide_homotopic(4, S("inf"), S("1/4"));
    CHECK(v.homotopic);
    CHECK(v.reason == VerdictReason::BothNullHomotopic);

    v = decide_homotopic(5, S("2/3"), S("2/7"));
    CHECK(v.homotopic);
    CHECK(v.reason == VerdictReason::TauPartner);

    CHECK_FALSE(decide_homotopic(5, S("2/3"), S("1/2")).homotopic);
    CHECK_THROWS_AS(decide_homotopic(1, S("0"), S("1")), DomainError);
    CHECK(reason_name(VerdictReason::TauPartner) == "tau-partner");
    CHECK(reason_name(VerdictReason::SameReducedSlope) == "same-reduced-slope");
}

TEST_CASE("term formula examples") {
    auto rep = partner_term_formula_check(5, S("2/3"));
    CHECK(rep.partner == S("2/7"));
    CHECK(rep.chain_matches);
    CHECK(rep.cyclic_matches);
    const auto full = s_of_slope(S("2/7")).runs;
    CHECK(rep.direct == std::vector<int>(full.begin(), full.begin() + 2));
    rep = partner_term_formula_check(3, S("1/2"));
    CHECK(rep.partner == S("1"));
    CHECK(rep.via_terms == std::vector<int>{1});
    rep = partner_term_formula_check(7, S("3/4"));
    CHECK(rep.partner == S("3/17"));
    CHECK(rep.cyclic_matches);
    CHECK_THROWS_AS(partner_term_formula_check(3, S("0")), DomainError);
}

TEST_CASE("property: term formula and entry sums over I2(1/p)") {
    std::size_t checked = 0;
    for (std::int64_t p = 2; p <= 9; ++p) {
        const auto dom = fundamental_intervals(Slope(1, p));
        for (std::int64_t d = 1; d <= 30; ++d) {
            for (std::int64_t c = 1; c <= d; ++c) {
                const Slope s(c, d);
                if (std::gcd(c, d) != 1 || !dom.in_i2(s) || p * c == d)
                    continue;
                CAPTURE(p);
                CAPTURE(s.str());
                const auto rep = partner_term_formula_check(p, s);
                REQUIRE(dom.in_i2(rep.partner));
                REQUIRE(partner_slope(p, rep.partner) == s);
                REQUIRE(sum(s_of_slope(s).runs) + sum(s_of_slope(rep.partner).runs) == 2 * p * c);
                REQUIRE(complement_cs(p, CyclicSSeq(s_of_slope(s).runs)) ==
                        CyclicSSeq(s_of_slope(rep.partner).runs));
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("property: decide is an equivalence on the grid and matches the extended orbit relation") {
    const auto slopes = grid();
    for (std::int64_t p = 2; p <= 5; ++p) {
        for (const auto& s : slopes) {
            REQUIRE(decide_homotopic(p, s, s).homotopic);
            for (const auto& t : slopes) {
                CAPTURE(p);
                CAPTURE(s.str());
                CAPTURE(t.str());
                const auto v = decide_homotopic(p, s, t);
                REQUIRE(v.homotopic == decide_homotopic(p, t, s).homotopic);
                REQUIRE(v.homotopic == orbit_equivalent_extended(p, s, t));
                REQUIRE(v.certificate.has_value() == (v.reason == VerdictReason::TauPartner));
                if (v.certificate) {
                    const auto& c = *v.certificate;
                    REQUIRE(c.outer_label() == riley_word(v.reduced_s).u);
                    const CyclicWord inner(c.inner_label());
                    const Word u2 = riley_word(v.reduced_s2).u;
                    REQUIRE((inner == CyclicWord(u2) || inner == CyclicWord(u2.inverse())));
                    REQUIRE(validate_structure(c).passed());
                }
            }
        }
    }
}

TEST_CASE("property: verdicts are invariant under the group and tau") {
    std::mt19937 rng(5);
    const auto slopes = grid();
    std::uniform_int_distribution<std::size_t> pick(0, slopes.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
        const std::int64_t p = 2 + trial % 6;
        const ReflectionGroup g(Slope(1, p));
        const Slope s = slopes[pick(rng)], t = slopes[pick(rng)];
        const Slope moved = g.generators()[trial % 4].apply(g.generators()[(trial / 4) % 4].apply(s));
        REQUIRE(decide_homotopic(p, s, t).homotopic == decide_homotopic(p, moved, t).homotopic);
        REQUIRE(decide_homotopic(p, s, t).homotopic == decide_homotopic(p, tau(p, s), t).homotopic);
    }
}
