#pragma once

// Exact slope arithmetic on Q ∪ {∞}, continued fractions, and the reflection
// groups of the Farey tessellation used to classify loops on the bridge sphere.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twobridge {

// An element of Q ∪ {∞} in canonical form: gcd(|num|, den) = 1, den >= 0,
// ∞ = 1/0 and 0 = 0/1.
class Slope {
public:
    constexpr Slope() = default;
    // Any integer pair except 0/0; the result is canonicalized.
    Slope(std::int64_t numerator, std::int64_t denominator);
    static Slope integer(std::int64_t n) { return Slope(n, 1); }
    static Slope infinity() { return Slope(1, 0); }

    // Accepts "inf", "∞", "q/p" (including "1/0") and plain integers.
    static Slope parse(std::string_view text);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }
    bool is_infinite() const { return den_ == 0; }
    bool is_zero() const { return num_ == 0; }

    std::string str() const;

    friend bool operator==(const Slope&, const Slope&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Order on finite slopes; ∞ compares greater than everything except itself.
std::strong_ordering compare(const Slope& x, const Slope& y);
inline bool less(const Slope& x, const Slope& y) { return compare(x, y) < 0; }

// Partial quotients [m1, ..., mk] of 1/(m1 + 1/(m2 + ...)).
struct ContinuedFraction {
    std::vector<std::int64_t> quotients;

    std::string str() const;
    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

// Normalized expansion (m_k >= 2 unless k = 1) of s in (0, 1].
ContinuedFraction cf_expand(const Slope& s);
// Value of [m1, ..., mk]; the empty expansion evaluates to 0. Entries must be
// positive, except that a trailing entry may not be zero either.
Slope cf_value(const std::vector<std::int64_t>& quotients);
inline Slope cf_value(const ContinuedFraction& cf) { return cf_value(cf.quotients); }

// Integer 2x2 matrix acting projectively on Q ∪ {∞}: s ↦ (a s + b)/(c s + d).
struct Mobius {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    Slope apply(const Slope& s) const;
    std::int64_t determinant() const;
    Mobius operator*(const Mobius& rhs) const;
    // Inverse up to sign; exact for determinant ±1.
    Mobius inverse() const;

    friend bool operator==(const Mobius&, const Mobius&) = default;
};

// Closed intervals I1(r) = [0, r1] and I2(r) = [r2, 1] cut out of the real
// line by the fundamental region of the group generated by the reflections
// at ∞ and at r.
struct FundamentalDomain {
    Slope r;
    Slope r1;  // right end of I1; 0 when I1 degenerates to {0}
    Slope r2;  // left end of I2; 1 when I2 degenerates to {1}

    bool in_i1(const Slope& s) const;
    bool in_i2(const Slope& s) const;
    bool i1_degenerate() const { return r1.is_zero(); }
    bool i2_degenerate() const { return r2 == Slope(1, 1); }
};

FundamentalDomain fundamental_intervals(const Slope& r);

enum class DomainRegion { I1, I2, Infinity, Cusp, Outside };
std::string_view region_name(DomainRegion region);

// The group generated by reflections in the Farey edges ending at ∞ and at r
// (0 < r < 1), with the reduction of slopes to orbit representatives.
class ReflectionGroup {
public:
    explicit ReflectionGroup(const Slope& r);

    const FundamentalDomain& domain() const { return domain_; }

    // Reflections in <0,∞>, <1,∞>, <r1,r>, <r2,r>, all of determinant -1.
    const std::array<Mobius, 4>& generators() const { return generators_; }

    DomainRegion classify(const Slope& s) const;

    // The unique representative of the orbit of s in I1 ∪ I2 ∪ {∞, r}.
    Slope reduce(const Slope& s) const;

    // Step cap used by reduce(); exceeding it raises InternalError.
    static int step_budget(const Slope& s);

private:
    Slope normalize_at_infinity(const Slope& s) const;
    Slope normalize_at_r(const Slope& s) const;

    FundamentalDomain domain_;
    Mobius to_r_;    // sends ∞ ↦ r, 0 ↦ r1, -1 ↦ r2
    Mobius from_r_;  // inverse of to_r_
    std::array<Mobius, 4> generators_;
};

Slope reduce_to_fundamental(const Slope& r, const Slope& s);

// The involution τ(c/d) = c/(cp - d) of the Farey tessellation for K(1/p).
Slope tau(std::int64_t p, const Slope& s);

// True iff s lies in the orbit of ∞ or r.
bool null_homotopic(const Slope& r, const Slope& s);

// Same orbit under the group extended by τ, for r = 1/p.
bool orbit_equivalent_extended(std::int64_t p, const Slope& s, const Slope& s2);

} // namespace twobridge
