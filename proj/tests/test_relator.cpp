#include <doctest.h>

#include <numeric>

#include "twobridge/error.hpp"
#include "twobridge/relator.hpp"

using namespace twobridge;

namespace {

Slope S(const char* text) {
    return Slope::parse(text);
}

template <class F>
void for_each_slope(std::int64_t max_p, F&& f) {
    for (std::int64_t p = 2; p <= max_p; ++p)
        for (std::int64_t q = 1; q < p; ++q)
            if (std::gcd(q, p) == 1)
                f(q, p);
}

} // namespace

TEST_CASE("floor_star and ceil_star are strict") {
    CHECK(floor_star(6, 3) == 1);
    CHECK(floor_star(7, 3) == 2);
    CHECK(floor_star(0, 5) == -1);
    CHECK(floor_star(-1, 2) == -1);
    CHECK(floor_star(-2, 2) == -2);
    CHECK(ceil_star(6, 3) == 3);
    CHECK(ceil_star(7, 3) == 3);
    CHECK(ceil_star(-1, 2) == 0);
    CHECK(ceil_star(S("5/2")) == 3);
    CHECK(floor_star(S("4")) == 3);
}

TEST_CASE("Riley words") {
    CHECK(riley_word(S("0")).u == Word("ab"));
    CHECK(riley_word(S("1")).u == Word("aB"));
    CHECK(riley_word(S("inf")).u.empty());
    CHECK(riley_word(S("1/2")).u == Word("abAB"));
    CHECK(riley_word(S("1/3")).u == Word("abaBAB"));
    CHECK(riley_word(S("2/5")).u == Word("abaBAbabAB"));
    CHECK(riley_word(S("2/5")).hat_u == Word("baBA"));
    CHECK(riley_word(S("3/7")).s_seq.runs == std::vector<int>{3, 2, 2, 3, 2, 2});
    CHECK(riley_word(S("5/17")).s_seq.runs == std::vector<int>{4, 3, 4, 3, 3, 4, 3, 4, 3, 3});
    CHECK_THROWS_AS(riley_word(S("3/2")), DomainError);
    CHECK_THROWS_AS(riley_word(S("-1/2")), DomainError);
}

TEST_CASE("s_of_slope examples") {
    CHECK(s_of_slope(S("2/5")).runs == std::vector<int>{3, 2, 3, 2});
    CHECK(s_of_slope(S("1/3")).runs == std::vector<int>{3, 3});
    CHECK(s_of_slope(S("0")).runs == std::vector<int>{2});
    CHECK(s_of_slope(S("1")).runs == std::vector<int>{1, 1});
}

TEST_CASE("decompose examples") {
    auto d = decompose(S("5/17"));
    CHECK(d.m == 3);
    CHECK(d.s1.runs == std::vector<int>{4, 3, 4});
    CHECK(d.s2.runs == std::vector<int>{3, 3});
    d = decompose(S("3/7"));
    CHECK(d.s1.runs == std::vector<int>{3});
    CHECK(d.s2.runs == std::vector<int>{2, 2});
    d = decompose(S("1/4"));
    CHECK(d.s1.runs.empty());
    CHECK(d.s2.runs == std::vector<int>{4});
    CHECK_THROWS_AS(decompose(S("0")), DomainError);
}

TEST_CASE("check_connection examples") {
    const auto rep = check_connection(4, S("1/2"));
    CHECK(rep.max_entry < 4);
    CHECK_FALSE(rep.contains_s1_s2);
    CHECK_THROWS_AS(check_connection(3, S("1/3")), DomainError);
    CHECK_THROWS_AS(check_connection(2, S("0")), DomainError);
    CHECK_THROWS_AS(check_connection(1, S("1/2")), DomainError);
}

TEST_CASE("property: closed form matches Riley's word for p <= 60") {
    for_each_slope(60, [](std::int64_t q, std::int64_t p) {
        const Slope r(q, p);
        const auto bundle = riley_word(r);
        REQUIRE(bundle.u.size() == static_cast<std::size_t>(2 * p));
        REQUIRE(bundle.u.front() == Letter::from_char('a'));
        REQUIRE(is_cyclically_alternating(bundle.u));
        REQUIRE(bundle.u.is_cyclically_reduced());
        REQUIRE(s_of_slope(r) == bundle.s_seq);
        REQUIRE(s_sequence(bundle.u) == bundle.s_seq);
        REQUIRE(bundle.cyclic_s_seq == CyclicSSeq(bundle.s_seq.runs));
        REQUIRE(bundle.cyclic_s_seq.is_symmetric());
        // u = a û b û^-1 up to the signs of the final letters
        REQUIRE(bundle.hat_u.size() == static_cast<std::size_t>(p - 1));
        REQUIRE(bundle.u.substr(1, p - 1) == bundle.hat_u);
        REQUIRE(bundle.u.substr(p + 1) == bundle.hat_u.inverse());
        const int sum = std::accumulate(bundle.s_seq.runs.begin(), bundle.s_seq.runs.end(), 0);
        REQUIRE(sum == 2 * p);
    });
}

TEST_CASE("property: decomposition laws for p <= 60") {
    for_each_slope(60, [](std::int64_t q, std::int64_t p) {
        const Slope r(q, p);
        const auto d = decompose(r);
        const auto s = s_of_slope(r);
        std::vector<int> joined = d.s1.runs;
        joined.insert(joined.end(), d.s2.runs.begin(), d.s2.runs.end());
        joined.insert(joined.end(), d.s1.runs.begin(), d.s1.runs.end());
        joined.insert(joined.end(), d.s2.runs.begin(), d.s2.runs.end());
        REQUIRE(joined == s.runs);
        REQUIRE(d.m == cf_expand(r).quotients.front());
        for (int e : s.runs)
            REQUIRE((e == d.m || e == d.m + 1));
        REQUIRE(d.s1.runs.empty() == (q == 1));
        REQUIRE(SSeq{d.s1.runs}.reversed() == d.s1);
        REQUIRE(SSeq{d.s2.runs}.reversed() == d.s2);
        if (!d.s1.runs.empty()) {
            REQUIRE(d.s1.runs.front() == d.m + 1);
            REQUIRE(d.s2.runs.front() == d.m);
        }
    });
}

TEST_CASE("property: connection conditions on I1 ∪ I2 of 1/p") {
    std::size_t checked = 0;
    for (std::int64_t p = 2; p <= 8; ++p) {
        const auto dom = fundamental_intervals(Slope(1, p));
        for (std::int64_t d = 1; d <= 40; ++d) {
            for (std::int64_t c = 0; c <= d; ++c) {
                if (std::gcd(c, d) != 1)
                    continue;
                const Slope s(c, d);
                if (!dom.in_i1(s) && !dom.in_i2(s))
                    continue;
                if (s.is_zero() && p == 2)
                    continue;
                REQUIRE_NOTHROW(check_connection(p, s));
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}
