#include <doctest.h>

#include <random>

#include "twobridge/error.hpp"
#include "twobridge/word.hpp"

using namespace twobridge;

namespace {

Word W(const char* s) {
    return Word(s);
}

std::size_t brute_least_rotation(const std::string& s) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s.substr(i) + s.substr(0, i) < s.substr(best) + s.substr(0, best))
            best = i;
    return best;
}

std::string random_letters(std::mt19937& rng, std::size_t len, const char* alphabet = "abAB") {
    std::uniform_int_distribution<int> pick(0, 3);
    std::string s;
    for (std::size_t i = 0; i < len; ++i)
        s += alphabet[pick(rng)];
    return s;
}

} // namespace

TEST_CASE("letters") {
    CHECK(Letter::from_char('A') == Letter{Generator::a, true});
    CHECK(Letter::from_char('b').exponent() == 1);
    CHECK(Letter::from_char('B').inverted().to_char() == 'b');
    CHECK_THROWS_AS(Letter::from_char('c'), ParseError);
    CHECK_THROWS_AS(W("abx"), ParseError);
}

TEST_CASE("free_reduce examples") {
    CHECK(free_reduce(W("abBA")).empty());
    CHECK(free_reduce(W("abAB")) == W("abAB"));
    CHECK(free_reduce(W("aBbaB")) == W("aaB"));
    CHECK(free_reduce(W("")).empty());
}

TEST_CASE("cyclic_reduce") {
    CHECK(cyclic_reduce(W("baBA")) == W("baBA"));
    CHECK(cyclic_reduce(W("abaBA")) == W("a"));
    CHECK(cyclic_reduce(W("aA")).empty());
    CHECK(W("abAB").is_cyclically_reduced());
    CHECK_FALSE(W("abA").is_cyclically_reduced());
}

TEST_CASE("inverse and rotation") {
    CHECK(W("abAB").inverse() == W("baBA"));
    CHECK(W("abaBAB").rotated(2) == W("aBABab"));
    CHECK(W("ab").rotated(2) == W("ab"));
}

TEST_CASE("s_sequence examples") {
    CHECK(s_sequence(W("ab")).runs == std::vector<int>{2});
    CHECK(s_sequence(W("abaBAB")).runs == std::vector<int>{3, 3});
    CHECK(s_sequence(W("abaBAbabAB")).runs == std::vector<int>{3, 2, 3, 2});
    CHECK(s_sequence(W("abaBAbabAB")).str() == "(3,2,3,2)");
    CHECK_THROWS_AS(s_sequence(W("")), DomainError);
}

TEST_CASE("cyclic s-sequence merges wrap-around blocks") {
    CHECK(cyclic_s_sequence(W("baBAba")).runs() == std::vector<int>{2, 4});
    CHECK(cyclic_s_sequence(W("baBAba")) == CyclicSSeq({4, 2}));
    CHECK(cyclic_s_sequence(W("abaBAbabAB")).str() == "((3,2,3,2))");
    CHECK(CyclicSSeq({3, 4, 3, 4}) == CyclicSSeq({4, 3, 4, 3}));
    CHECK_FALSE(CyclicSSeq({3, 4}) == CyclicSSeq({3, 4, 3, 4}));
}

TEST_CASE("reconstruct examples") {
    CHECK(reconstruct(Letter::from_char('a'), SSeq{{2}}) == W("ab"));
    CHECK(reconstruct(Letter::from_char('a'), SSeq{{3, 3}}) == W("abaBAB"));
    CHECK(reconstruct(Letter::from_char('A'), SSeq{{1, 1}}) == W("Ab"));
    CHECK_THROWS_AS(reconstruct(Letter::from_char('a'), SSeq{}), DomainError);
    CHECK_THROWS_AS(reconstruct(Letter::from_char('a'), SSeq{{0}}), DomainError);
}

TEST_CASE("alternation") {
    CHECK(is_alternating(W("abAB")));
    CHECK_FALSE(is_alternating(W("aab")));
    CHECK(is_alternating(W("aba")));
    CHECK_FALSE(is_cyclically_alternating(W("aba")));
    CHECK(is_cyclically_alternating(W("abAB")));
}

TEST_CASE("cyclic words compare up to rotation") {
    CHECK(CyclicWord(W("baBA")) == CyclicWord(W("aBAb")));
    CHECK(CyclicWord(W("abAB")).canonical() == W("ABab"));
    CHECK(CyclicWord(W("abAB")).contains_rotation(W("BabA")));
    CHECK_FALSE(CyclicWord(W("abAB")).contains_rotation(W("abBA")));
    CHECK_THROWS_AS(CyclicWord(W("abA")), DomainError);
}

TEST_CASE("property: Booth's algorithm agrees with brute force") {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 3000; ++trial) {
        std::uniform_int_distribution<int> len(0, 14);
        // a two-letter alphabet forces many ties
        const std::string s = random_letters(rng, static_cast<std::size_t>(len(rng)), trial % 2 ? "abAB" : "aaab");
        const auto k = least_rotation(s);
        const auto b = brute_least_rotation(s);
        REQUIRE(s.substr(k) + s.substr(0, k) == s.substr(b) + s.substr(0, b));
    }
}

TEST_CASE("property: reconstruct and s_sequence round trip") {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<int> count(1, 8), run(1, 6), init(0, 3);
        SSeq s;
        for (int k = count(rng); k > 0; --k)
            s.runs.push_back(run(rng));
        const Letter first = Letter::from_char("abAB"[init(rng)]);
        const Word w = reconstruct(first, s);
        REQUIRE(w.front() == first);
        REQUIRE(is_alternating(w));
        REQUIRE(w.is_reduced());
        REQUIRE(s_sequence(w) == s);
    }
}

TEST_CASE("property: cyclic sums and inversion reverse the cyclic s-sequence") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<int> half(1, 5), run(1, 5);
        std::vector<int> runs;
        for (int k = 2 * half(rng); k > 0; --k)
            runs.push_back(run(rng));
        Word w = reconstruct(Letter::from_char('a'), SSeq{runs});
        if (!is_cyclically_alternating(w) || !w.is_cyclically_reduced())
            continue;
        const auto cs = cyclic_s_sequence(w);
        int total = 0;
        for (int r : cs.runs())
            total += r;
        REQUIRE(total == static_cast<int>(w.size()));
        REQUIRE(cyclic_s_sequence(w.inverse()) == cs.reversed());
        for (std::size_t i = 0; i < w.size(); ++i)
            REQUIRE(cyclic_s_sequence(w.rotated(i)) == cs);
    }
}

TEST_CASE("exponent sums") {
    CHECK(exponent_sums(W("abaBAB")) == std::pair<long, long>{1, -1});
    CHECK(exponent_sums(W("abAB")) == std::pair<long, long>{0, 0});
}
