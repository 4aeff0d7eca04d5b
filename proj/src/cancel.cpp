#include "twobridge/cancel.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "twobridge/error.hpp"

namespace twobridge {

namespace {

int letter_index(char c) {
    switch (c) {
    case 'a': return 0;
    case 'b': return 1;
    case 'A': return 2;
    default: return 3;
    }
}

} // namespace

SymmetrizedSet::SymmetrizedSet(const Word& u) : base_(u) {
    if (u.empty() || !u.is_cyclically_reduced())
        throw DomainError("symmetrize needs a non-empty cyclically reduced word, got '" + u.str() + "'");
    std::set<Word> all;
    const Word inv = u.inverse();
    for (std::size_t i = 0; i < u.size(); ++i) {
        all.insert(u.rotated(i));
        all.insert(inv.rotated(i));
    }
    elements_.assign(all.begin(), all.end());
    trie_.emplace_back();
    for (const auto& w : elements_)
        insert(w);
}

void SymmetrizedSet::insert(const Word& w) {
    int node = 0;
    for (char c : w.str()) {
        int k = letter_index(c);
        if (trie_[node].child[k] < 0) {
            trie_[node].child[k] = static_cast<int>(trie_.size());
            trie_.emplace_back();
        }
        node = trie_[node].child[k];
        ++trie_[node].through;
    }
}

bool SymmetrizedSet::contains(const Word& w) const {
    return std::binary_search(elements_.begin(), elements_.end(), w);
}

std::size_t SymmetrizedSet::longest_piece_at(const Word& w, std::size_t pos) const {
    const auto& s = w.str();
    int node = 0;
    std::size_t len = 0;
    for (std::size_t i = pos; i < s.size(); ++i) {
        int next = trie_[node].child[letter_index(s[i])];
        if (next < 0 || trie_[next].through < 2)
            break;
        node = next;
        ++len;
    }
    return len;
}

bool SymmetrizedSet::is_piece(const Word& w) const {
    return !w.empty() && longest_piece_at(w, 0) == w.size();
}

std::vector<Word> enumerate_pieces(const SymmetrizedSet& R) {
    std::set<Word> pieces;
    for (const auto& w : R.elements()) {
        auto len = R.longest_piece_at(w, 0);
        for (std::size_t k = 1; k <= len; ++k)
            pieces.insert(w.substr(0, k));
    }
    std::vector<Word> out(pieces.begin(), pieces.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const Word& x, const Word& y) { return x.size() < y.size(); });
    return out;
}

std::optional<PieceDecomposition> min_piece_count(const SymmetrizedSet& R, const Word& w) {
    const std::size_t n = w.size();
    if (n == 0)
        return std::nullopt;
    constexpr int unreachable = std::numeric_limits<int>::max();
    std::vector<int> best(n + 1, unreachable);
    std::vector<std::size_t> from(n + 1, 0);
    best[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (best[i] == unreachable)
            continue;
        const auto len = R.longest_piece_at(w, i);
        for (std::size_t k = 1; k <= len; ++k) {
            if (best[i] + 1 < best[i + k]) {
                best[i + k] = best[i] + 1;
                from[i + k] = i;
            }
        }
    }
    if (best[n] == unreachable)
        return std::nullopt;
    PieceDecomposition dec;
    dec.count = best[n];
    for (std::size_t end = n; end > 0; end = from[end])
        dec.pieces.push_back(w.substr(from[end], end - from[end]));
    std::reverse(dec.pieces.begin(), dec.pieces.end());
    return dec;
}

CReport check_C(const SymmetrizedSet& R, int p) {
    CReport report;
    report.min_count = std::numeric_limits<int>::max();
    for (const auto& w : R.elements()) {
        auto dec = min_piece_count(R, w);
        if (!dec)
            continue;  // not a product of pieces at all
        if (dec->count < report.min_count) {
            report.min_count = dec->count;
            report.witness = w;
            report.decomposition = *dec;
        }
    }
    report.holds = report.min_count >= p;
    return report;
}

TReport check_T(const SymmetrizedSet& R, int q) {
    if (q != 3 && q != 4)
        throw DomainError("check_T supports q = 3 and q = 4 only");
    TReport report;
    if (q == 3)
        return report;

    std::array<std::vector<const Word*>, 4> by_first;
    for (const auto& w : R.elements())
        by_first[letter_index(w.str().front())].push_back(&w);
    auto cancels_into = [](const Word& x, const Word& y) {
        return x.back().inverted() == y.front();
    };

    for (const auto& w1 : R.elements()) {
        const Word w1_inv = w1.inverse();
        for (const Word* w2 : by_first[letter_index(w1.back().inverted().to_char())]) {
            if (*w2 == w1_inv)
                continue;
            const Word w2_inv = w2->inverse();
            for (const Word* w3 : by_first[letter_index(w2->back().inverted().to_char())]) {
                if (*w3 == w2_inv || w1 == w3->inverse())
                    continue;
                ++report.triples_examined;
                if (cancels_into(*w3, w1)) {
                    report.holds = false;
                    report.counterexample = std::array<Word, 3>{w1, *w2, *w3};
                    return report;
                }
            }
        }
    }
    return report;
}

std::vector<MaximalPiece> maximal_n_pieces(const SymmetrizedSet& R, int n) {
    if (n < 1)
        throw DomainError("maximal n-pieces need n >= 1");
    const Word& u = R.base();
    const std::size_t len = u.size();
    std::vector<std::size_t> reach(len, 0);
    for (std::size_t start = 0; start < len; ++start) {
        const Word w = u.rotated(start);
        // best[k]: fewest pieces covering the first k letters of w.
        constexpr int unreachable = std::numeric_limits<int>::max();
        std::vector<int> best(len + 1, unreachable);
        best[0] = 0;
        for (std::size_t i = 0; i < len; ++i) {
            if (best[i] == unreachable || best[i] >= n)
                continue;
            const auto piece = R.longest_piece_at(w, i);
            for (std::size_t k = 1; k <= piece; ++k)
                best[i + k] = std::min(best[i + k], best[i] + 1);
        }
        for (std::size_t k = len; k > 0; --k) {
            if (best[k] <= n) {
                reach[start] = k;
                break;
            }
        }
    }

    std::vector<MaximalPiece> out;
    for (std::size_t i = 0; i < len; ++i) {
        if (reach[i] == 0)
            continue;
        bool inside = false;
        for (std::size_t j = 0; j < len && !inside; ++j) {
            if (j == i)
                continue;
            const std::size_t offset = (i + len - j) % len;
            inside = offset + reach[i] <= reach[j];
        }
        if (!inside)
            out.push_back({i, u.rotated(i).substr(0, reach[i])});
    }
    return out;
}

} // namespace twobridge
