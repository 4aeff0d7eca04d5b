#include "twobridge/word.hpp"

#include <algorithm>

#include "twobridge/error.hpp"

namespace twobridge {

namespace {

bool cancels(char x, char y) {
    return x != y && (x ^ 0x20) == y;
}

std::string join_runs(const std::vector<int>& runs) {
    std::string out;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(runs[i]);
    }
    return out;
}

} // namespace

char Letter::to_char() const {
    char c = gen == Generator::a ? 'a' : 'b';
    return inverse ? static_cast<char>(c - 'a' + 'A') : c;
}

Letter Letter::from_char(char c) {
    switch (c) {
    case 'a': return {Generator::a, false};
    case 'b': return {Generator::b, false};
    case 'A': return {Generator::a, true};
    case 'B': return {Generator::b, true};
    default: throw ParseError(std::string("not a letter of {a,b,A,B}: '") + c + "'");
    }
}

Word::Word(std::string_view letters) : letters_(letters) {
    for (char c : letters_)
        Letter::from_char(c);
}

Word Word::from_letters(const std::vector<Letter>& letters) {
    Word w;
    w.letters_.reserve(letters.size());
    for (auto l : letters)
        w.letters_.push_back(l.to_char());
    return w;
}

Word Word::inverse() const {
    Word w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    for (char& c : w.letters_)
        c ^= 0x20;  // toggles case
    return w;
}

Word Word::rotated(std::size_t i) const {
    if (letters_.empty())
        return *this;
    i %= letters_.size();
    Word w;
    w.letters_ = letters_.substr(i) + letters_.substr(0, i);
    return w;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
    Word w;
    w.letters_ = letters_.substr(pos, len);
    return w;
}

bool Word::is_reduced() const {
    for (std::size_t i = 1; i < letters_.size(); ++i)
        if (cancels(letters_[i - 1], letters_[i]))
            return false;
    return true;
}

bool Word::is_cyclically_reduced() const {
    if (!is_reduced())
        return false;
    return letters_.size() < 2 || !cancels(letters_.back(), letters_.front());
}

Word free_reduce(const Word& w) {
    std::string stack;
    stack.reserve(w.size());
    for (char c : w.str()) {
        if (!stack.empty() && cancels(stack.back(), c))
            stack.pop_back();
        else
            stack.push_back(c);
    }
    return Word(stack);
}

Word cyclic_reduce(const Word& w) {
    const std::string s = free_reduce(w).str();
    std::size_t lo = 0, hi = s.size();
    while (hi - lo >= 2 && cancels(s[lo], s[hi - 1])) {
        ++lo;
        --hi;
    }
    return Word(std::string_view(s).substr(lo, hi - lo));
}

std::size_t least_rotation(std::string_view s) {
    // Booth's algorithm.
    const std::size_t n = s.size();
    if (n == 0)
        return 0;
    std::vector<long> fail(2 * n, -1);
    std::size_t k = 0;
    auto at = [&](std::size_t i) { return s[i % n]; };
    for (std::size_t j = 1; j < 2 * n; ++j) {
        long i = fail[j - k - 1];
        while (i != -1 && at(j) != at(k + i + 1)) {
            if (at(j) < at(k + i + 1))
                k = j - i - 1;
            i = fail[i];
        }
        if (i == -1 && at(j) != at(k + i + 1)) {
            if (at(j) < at(k + i + 1))
                k = j;
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return k % n;
}

CyclicWord::CyclicWord(const Word& w) {
    if (!w.is_cyclically_reduced())
        throw DomainError("cyclic words need a cyclically reduced representative: " + w.str());
    rep_ = w.rotated(least_rotation(w.str()));
}

bool CyclicWord::contains_rotation(const Word& w) const {
    if (w.size() != rep_.size())
        return false;
    if (w.empty())
        return true;
    return (rep_.str() + rep_.str()).find(w.str()) != std::string::npos;
}

SSeq SSeq::reversed() const {
    return SSeq{std::vector<int>(runs.rbegin(), runs.rend())};
}

std::string SSeq::str() const {
    return "(" + join_runs(runs) + ")";
}

CyclicSSeq CyclicSSeq::reversed() const {
    return CyclicSSeq(std::vector<int>(runs_.rbegin(), runs_.rend()));
}

std::size_t CyclicSSeq::count_occurrences(const std::vector<int>& pattern) const {
    const std::size_t n = runs_.size();
    if (pattern.empty() || pattern.size() > n)
        return 0;
    std::size_t count = 0;
    for (std::size_t start = 0; start < n; ++start) {
        bool match = true;
        for (std::size_t i = 0; i < pattern.size() && match; ++i)
            match = runs_[(start + i) % n] == pattern[i];
        count += match;
    }
    return count;
}

std::string CyclicSSeq::str() const {
    return "((" + join_runs(runs_) + "))";
}

bool operator==(const CyclicSSeq& x, const CyclicSSeq& y) {
    const std::size_t n = x.runs_.size();
    if (n != y.runs_.size())
        return false;
    if (n == 0)
        return true;
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i)
            match = x.runs_[(i + shift) % n] == y.runs_[i];
        if (match)
            return true;
    }
    return false;
}

SSeq s_sequence(const Word& w) {
    if (w.empty())
        throw DomainError("the S-sequence of the empty word is undefined");
    SSeq seq;
    bool sign = w.front().positive();
    int run = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        bool here = w[i].positive();
        if (here != sign) {
            seq.runs.push_back(run);
            run = 0;
            sign = here;
        }
        ++run;
    }
    seq.runs.push_back(run);
    return seq;
}

CyclicSSeq cyclic_s_sequence(const Word& w) {
    if (w.empty())
        throw DomainError("the cyclic S-sequence of the empty word is undefined");
    // Rotate to a sign change so no block wraps around.
    std::size_t start = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].positive() != w[(i + w.size() - 1) % w.size()].positive()) {
            start = i;
            break;
        }
    }
    return CyclicSSeq(s_sequence(w.rotated(start)).runs);
}

Word reconstruct(Letter initial, const SSeq& s) {
    if (s.runs.empty())
        throw DomainError("cannot reconstruct a word from an empty S-sequence");
    std::vector<Letter> letters;
    Generator gen = initial.gen;
    bool inverse = initial.inverse;
    for (int run : s.runs) {
        if (run < 1)
            throw DomainError("S-sequence entries must be positive");
        for (int i = 0; i < run; ++i) {
            letters.push_back({gen, inverse});
            gen = gen == Generator::a ? Generator::b : Generator::a;
        }
        inverse = !inverse;
    }
    return Word::from_letters(letters);
}

bool is_alternating(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i].gen == w[i - 1].gen)
            return false;
    return true;
}

bool is_cyclically_alternating(const Word& w) {
    if (w.empty())
        return true;
    return is_alternating(w) && w.front().gen != w.back().gen;
}

std::pair<long, long> exponent_sums(const Word& w) {
    long ea = 0, eb = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto l = w[i];
        (l.gen == Generator::a ? ea : eb) += l.exponent();
    }
    return {ea, eb};
}

} // namespace twobridge
