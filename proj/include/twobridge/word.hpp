#pragma once

// Words over the free group F(a, b). Letters are written a, b for the
// generators and A, B for their inverses.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace twobridge {

enum class Generator : unsigned char { a, b };

struct Letter {
    Generator gen = Generator::a;
    bool inverse = false;

    int exponent() const { return inverse ? -1 : 1; }
    bool positive() const { return !inverse; }
    Letter inverted() const { return {gen, !inverse}; }
    char to_char() const;
    static Letter from_char(char c);

    friend bool operator==(const Letter&, const Letter&) = default;
};

class Word {
public:
    Word() = default;
    // Validates the alphabet; does not reduce.
    explicit Word(std::string_view letters);
    static Word from_letters(const std::vector<Letter>& letters);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return Letter::from_char(letters_[i]); }
    Letter front() const { return (*this)[0]; }
    Letter back() const { return (*this)[size() - 1]; }
    const std::string& str() const { return letters_; }

    Word inverse() const;
    // Rotation starting at position i (0 <= i < size()).
    Word rotated(std::size_t i) const;
    Word substr(std::size_t pos, std::size_t len = std::string::npos) const;

    bool is_reduced() const;
    bool is_cyclically_reduced() const;

    Word& operator+=(const Word& rhs) {
        letters_ += rhs.letters_;
        return *this;
    }
    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::string letters_;
};

Word free_reduce(const Word& w);
// Free reduction followed by stripping x ... x^-1 from the ends.
Word cyclic_reduce(const Word& w);

// A cyclically reduced word up to cyclic permutation, stored as its
// lexicographically least rotation.
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(const Word& w);

    const Word& canonical() const { return rep_; }
    std::size_t size() const { return rep_.size(); }
    CyclicWord inverse() const { return CyclicWord(rep_.inverse()); }
    // True iff w is visually a cyclic shift of this word.
    bool contains_rotation(const Word& w) const;

    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
    friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

private:
    Word rep_;
};

std::size_t least_rotation(std::string_view s);

// Run lengths of maximal constant-sign blocks.
struct SSeq {
    std::vector<int> runs;

    std::size_t size() const { return runs.size(); }
    SSeq reversed() const;
    std::string str() const;  // "(3,2,3,2)"
    friend bool operator==(const SSeq&, const SSeq&) = default;
};

// Run lengths of a cyclic word, compared up to rotation.
class CyclicSSeq {
public:
    CyclicSSeq() = default;
    explicit CyclicSSeq(std::vector<int> runs) : runs_(std::move(runs)) {}

    const std::vector<int>& runs() const { return runs_; }
    std::size_t size() const { return runs_.size(); }
    CyclicSSeq reversed() const;
    bool is_symmetric() const { return *this == reversed(); }
    // Number of rotations at which `pattern` occurs as a contiguous run.
    std::size_t count_occurrences(const std::vector<int>& pattern) const;
    bool contains(const std::vector<int>& pattern) const { return count_occurrences(pattern) > 0; }
    std::string str() const;  // "((3,2,3,2))"

    // Equality up to rotation.
    friend bool operator==(const CyclicSSeq& x, const CyclicSSeq& y);

private:
    std::vector<int> runs_;
};

SSeq s_sequence(const Word& w);
// Cyclic run lengths, rotated so the first run starts at a sign change.
CyclicSSeq cyclic_s_sequence(const Word& w);

// The alternating word with the given initial letter and S-sequence.
Word reconstruct(Letter initial, const SSeq& s);

bool is_alternating(const Word& w);
bool is_cyclically_alternating(const Word& w);

// Exponent sums (of a, of b).
std::pair<long, long> exponent_sums(const Word& w);

} // namespace twobridge
