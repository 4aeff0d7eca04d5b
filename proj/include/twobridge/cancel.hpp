#pragma once

// Symmetrized relator sets and the small cancellation conditions C(p), T(q).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/word.hpp"

namespace twobridge {

// All cyclic permutations of u and u^-1, deduplicated and sorted.
class SymmetrizedSet {
public:
    explicit SymmetrizedSet(const Word& u);

    const Word& base() const { return base_; }
    const std::vector<Word>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const Word& w) const;

    // Length of the longest prefix of w[pos..] that is a piece; pieces are
    // exactly the prefixes shared by two distinct elements.
    std::size_t longest_piece_at(const Word& w, std::size_t pos) const;
    bool is_piece(const Word& w) const;

private:
    struct Node {
        std::array<int, 4> child{-1, -1, -1, -1};
        int through = 0;  // elements whose prefix ends at or passes this node
    };
    void insert(const Word& w);

    Word base_;
    std::vector<Word> elements_;
    std::vector<Node> trie_;
};

// Every piece, sorted by (length, letters).
std::vector<Word> enumerate_pieces(const SymmetrizedSet& R);

struct PieceDecomposition {
    int count = 0;
    std::vector<Word> pieces;
};

// Fewest pieces whose concatenation is visually w; nullopt if none exists.
std::optional<PieceDecomposition> min_piece_count(const SymmetrizedSet& R, const Word& w);

struct CReport {
    bool holds = true;
    int min_count = 0;                 // minimum over all elements of R
    Word witness;                      // element attaining the minimum
    PieceDecomposition decomposition;  // of the witness
};
CReport check_C(const SymmetrizedSet& R, int p);

struct TReport {
    bool holds = true;
    std::size_t triples_examined = 0;  // triples with cancellation at every junction
    std::optional<std::array<Word, 3>> counterexample;
};
// Only q in {3, 4} is supported: both reduce to checking n < q elements
// with n = 3 for T(4) and nothing for T(3).
TReport check_T(const SymmetrizedSet& R, int q);

struct MaximalPiece {
    std::size_t start = 0;  // position of the initial letter in the base word
    Word word;
};

// Maximal n-pieces of the cyclic base word: for each start position the
// longest product of at most n pieces, dropping any occurrence that lies
// inside a longer one. Ordered by start position.
std::vector<MaximalPiece> maximal_n_pieces(const SymmetrizedSet& R, int n);

} // namespace twobridge
