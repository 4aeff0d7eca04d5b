#include <doctest.h>

#include <numeric>
#include <set>

#include "twobridge/cancel.hpp"
#include "twobridge/relator.hpp"

using namespace twobridge;

namespace {

SymmetrizedSet R_of(std::int64_t q, std::int64_t p) {
    return SymmetrizedSet(riley_word(Slope(q, p)).u);
}

// Pieces straight from the definition: nonempty common prefixes of two
// distinct elements.
std::set<std::string> brute_pieces(const SymmetrizedSet& R) {
    std::set<std::string> out;
    const auto& el = R.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
        for (std::size_t j = i + 1; j < el.size(); ++j) {
            const auto& x = el[i].str();
            const auto& y = el[j].str();
            for (std::size_t k = 0; k < std::min(x.size(), y.size()) && x[k] == y[k]; ++k)
                out.insert(x.substr(0, k + 1));
        }
    }
    return out;
}

int brute_min_count(const std::set<std::string>& pieces, const std::string& w) {
    const int inf = 1 << 20;
    std::vector<int> best(w.size() + 1, inf);
    best[0] = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (best[i] == inf)
            continue;
        for (std::size_t len = 1; i + len <= w.size(); ++len)
            if (pieces.count(w.substr(i, len)))
                best[i + len] = std::min(best[i + len], best[i] + 1);
    }
    return best[w.size()];
}

} // namespace

TEST_CASE("symmetrized set of abAB") {
    SymmetrizedSet R(Word("abAB"));
    CHECK(R.size() == 8);
    CHECK(R.contains(Word("BabA")));
    CHECK(R.contains(Word("baBA")));
    CHECK_FALSE(R.contains(Word("abAb")));
    CHECK(std::is_sorted(R.elements().begin(), R.elements().end()));
}

TEST_CASE("pieces of u_{1/3}") {
    const auto R = R_of(1, 3);
    CHECK(R.size() == 12);
    std::vector<std::string> got;
    for (const auto& w : enumerate_pieces(R))
        got.push_back(w.str());
    CHECK(got == std::vector<std::string>{"A", "B", "a", "b", "AB", "BA", "ab", "ba"});
    CHECK(R.is_piece(Word("ab")));
    CHECK_FALSE(R.is_piece(Word("aba")));
    CHECK(R.longest_piece_at(Word("abaBAB"), 0) == 2);
}

TEST_CASE("maximal pieces of u_{1/3}") {
    const auto R = R_of(1, 3);
    auto one = maximal_n_pieces(R, 1);
    REQUIRE(one.size() == 4);
    CHECK(one[0].start == 0);
    CHECK(one[0].word == Word("ab"));
    CHECK(one[2].word == Word("BA"));
    auto two = maximal_n_pieces(R, 2);
    REQUIRE(two.size() == 4);
    CHECK(two[1].word == Word("baBA"));
    CHECK(two[3].word == Word("ABab"));
}

TEST_CASE("maximal pieces of u_{2/5}") {
    const auto R = R_of(2, 5);
    auto one = maximal_n_pieces(R, 1);
    REQUIRE(one.size() == 4);
    CHECK(one[0].start == 1);
    CHECK(one[0].word == Word("baBA"));
    auto two = maximal_n_pieces(R, 2);
    REQUIRE(two.size() == 4);
    CHECK(two[1].word == Word("BAbabAB"));
}

TEST_CASE("C(4) and T(4) examples") {
    const auto R = R_of(2, 5);
    const auto c = check_C(R, 4);
    CHECK(c.holds);
    CHECK(c.min_count == 4);
    CHECK(c.decomposition.count == 4);
    Word joined;
    for (const auto& piece : c.decomposition.pieces)
        joined += piece;
    CHECK(joined == c.witness);
    CHECK_FALSE(check_C(R, 5).holds);
    const auto t = check_T(R, 4);
    CHECK(t.holds);
    CHECK(t.triples_examined == 320);
    CHECK(check_T(R, 3).holds);
    CHECK(check_T(R, 3).triples_examined == 0);
}

TEST_CASE("a set failing T(4)") {
    const auto t = check_T(SymmetrizedSet(Word("ABaab")), 4);
    CHECK_FALSE(t.holds);
    REQUIRE(t.counterexample.has_value());
    const auto& [x, y, z] = *t.counterexample;
    CHECK(x.back().inverted() == y.front());
    CHECK(y.back().inverted() == z.front());
    CHECK(z.back().inverted() == x.front());
}

TEST_CASE("min_piece_count splits words into the fewest pieces") {
    const auto R = R_of(1, 3);
    CHECK(min_piece_count(R, Word("aba"))->count == 2);
    CHECK(min_piece_count(R, Word("aa"))->count == 2);
    const auto d = min_piece_count(R, Word("abaBAB"));
    REQUIRE(d.has_value());
    CHECK(d->count == 4);
}

TEST_CASE("property: the trie agrees with pairwise common prefixes") {
    for (std::int64_t p = 2; p <= 17; ++p) {
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1)
                continue;
            const auto R = R_of(q, p);
            REQUIRE(R.size() == static_cast<std::size_t>(4 * p));
            const auto brute = brute_pieces(R);
            std::set<std::string> trie;
            for (const auto& w : enumerate_pieces(R))
                trie.insert(w.str());
            REQUIRE(trie == brute);
            for (const auto& el : R.elements()) {
                const auto d = min_piece_count(R, el);
                REQUIRE(d.has_value());
                REQUIRE(d->count == brute_min_count(brute, el.str()));
            }
        }
    }
}

TEST_CASE("property: C(4) and T(4) hold for every u_r with p <= 13") {
    for (std::int64_t p = 2; p <= 13; ++p) {
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1)
                continue;
            const auto R = R_of(q, p);
            CAPTURE(q);
            CAPTURE(p);
            REQUIRE(check_C(R, 4).holds);
            REQUIRE(check_T(R, 4).holds);
        }
    }
}

TEST_CASE("property: maximal n-pieces are products of at most n pieces and not nested") {
    for (std::int64_t p = 2; p <= 13; ++p) {
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(q, p) != 1)
                continue;
            const auto R = R_of(q, p);
            const auto base = R.base().str() + R.base().str();
            for (int n = 1; n <= 2; ++n) {
                const auto mp = maximal_n_pieces(R, n);
                REQUIRE(!mp.empty());
                for (std::size_t i = 0; i < mp.size(); ++i) {
                    const auto& m = mp[i];
                    REQUIRE(base.substr(m.start, m.word.size()) == m.word.str());
                    const auto d = min_piece_count(R, m.word);
                    REQUIRE(d.has_value());
                    REQUIRE(d->count <= n);
                    if (i > 0)
                        REQUIRE(mp[i - 1].start < m.start);
                }
            }
        }
    }
}
