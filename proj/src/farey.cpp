#include "twobridge/farey.hpp"

#include <bit>
#include <charconv>
#include <limits>
#include <numeric>

#include "twobridge/error.hpp"

namespace twobridge {

namespace {

using wide = __int128;

std::int64_t narrow(wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw DomainError("slope arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    auto first = text.data();
    auto last = text.data() + text.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
        throw ParseError("not an integer: '" + std::string(text) + "'");
    return value;
}

Slope make_slope(wide n, wide d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Slope(narrow(n), narrow(d));
}

int bit_length(std::int64_t v) {
    auto u = static_cast<std::uint64_t>(v < 0 ? -v : v);
    return static_cast<int>(std::bit_width(u));
}

} // namespace

Slope::Slope(std::int64_t numerator, std::int64_t denominator) {
    if (numerator == 0 && denominator == 0)
        throw DomainError("0/0 is not a slope");
    if (denominator == 0) {
        num_ = 1;
        den_ = 0;
        return;
    }
    if (numerator == 0) {
        num_ = 0;
        den_ = 1;
        return;
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    auto g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

Slope Slope::parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    if (text == "inf" || text == "infinity" || text == "∞" || text == "oo")
        return infinity();
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return integer(parse_int(text));
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (n == 0 && d == 0)
        throw ParseError("0/0 is not a slope");
    return Slope(n, d);
}

std::string Slope::str() const {
    if (is_infinite())
        return "inf";
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering compare(const Slope& x, const Slope& y) {
    if (x.is_infinite() || y.is_infinite())
        return static_cast<int>(x.is_infinite()) <=> static_cast<int>(y.is_infinite());
    wide lhs = static_cast<wide>(x.numerator()) * y.denominator();
    wide rhs = static_cast<wide>(y.numerator()) * x.denominator();
    return lhs <=> rhs;
}

std::string ContinuedFraction::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < quotients.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(quotients[i]);
    }
    return out + "]";
}

ContinuedFraction cf_expand(const Slope& s) {
    if (s.is_infinite() || s.numerator() <= 0 || s.numerator() > s.denominator())
        throw DomainError("continued fraction expansion needs 0 < s <= 1, got " + s.str());
    // s = n/d; 1/s = d/n = m1 + rest.
    ContinuedFraction cf;
    std::int64_t n = s.numerator();
    std::int64_t d = s.denominator();
    while (n != 0) {
        cf.quotients.push_back(d / n);
        auto rem = d % n;
        d = n;
        n = rem;
    }
    return cf;
}

Slope cf_value(const std::vector<std::int64_t>& quotients) {
    // Evaluate from the tail: x = 1/(m + x).
    wide num = 0, den = 1;
    for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) {
        if (*it <= 0)
            throw DomainError("continued fraction quotients must be positive");
        // 1 / (m + num/den) = den / (m*den + num)
        wide next_num = den;
        wide next_den = static_cast<wide>(*it) * den + num;
        num = next_num;
        den = next_den;
    }
    return make_slope(num, den);
}

Slope Mobius::apply(const Slope& s) const {
    const wide x = s.numerator();
    const wide y = s.denominator();
    return make_slope(a * x + b * y, c * x + d * y);
}

std::int64_t Mobius::determinant() const {
    return narrow(static_cast<wide>(a) * d - static_cast<wide>(b) * c);
}

Mobius Mobius::operator*(const Mobius& rhs) const {
    return {narrow(static_cast<wide>(a) * rhs.a + static_cast<wide>(b) * rhs.c),
            narrow(static_cast<wide>(a) * rhs.b + static_cast<wide>(b) * rhs.d),
            narrow(static_cast<wide>(c) * rhs.a + static_cast<wide>(d) * rhs.c),
            narrow(static_cast<wide>(c) * rhs.b + static_cast<wide>(d) * rhs.d)};
}

Mobius Mobius::inverse() const {
    auto det = determinant();
    if (det != 1 && det != -1)
        throw DomainError("only unimodular matrices are inverted exactly");
    return {d * det, -b * det, -c * det, a * det};
}

bool FundamentalDomain::in_i1(const Slope& s) const {
    if (s.is_infinite())
        return false;
    return compare(s, Slope(0, 1)) >= 0 && compare(s, r1) <= 0;
}

bool FundamentalDomain::in_i2(const Slope& s) const {
    if (s.is_infinite())
        return false;
    return compare(s, r2) >= 0 && compare(s, Slope(1, 1)) <= 0;
}

FundamentalDomain fundamental_intervals(const Slope& r) {
    if (r.is_infinite() || r.numerator() <= 0 || r.numerator() >= r.denominator())
        throw DomainError("fundamental intervals need 0 < r < 1, got " + r.str());
    auto m = cf_expand(r).quotients;
    const auto k = m.size();
    std::vector<std::int64_t> truncated(m.begin(), m.end() - 1);
    std::vector<std::int64_t> lowered = m;
    lowered.back() -= 1;  // m_k >= 2 because r < 1
    FundamentalDomain dom;
    dom.r = r;
    if (k % 2 == 1) {
        dom.r1 = cf_value(truncated);
        dom.r2 = cf_value(lowered);
    } else {
        dom.r1 = cf_value(lowered);
        dom.r2 = cf_value(truncated);
    }
    return dom;
}

std::string_view region_name(DomainRegion region) {
    switch (region) {
    case DomainRegion::I1: return "I1";
    case DomainRegion::I2: return "I2";
    case DomainRegion::Infinity: return "inf";
    case DomainRegion::Cusp: return "r";
    case DomainRegion::Outside: return "outside";
    }
    return "outside";
}

ReflectionGroup::ReflectionGroup(const Slope& r) : domain_(fundamental_intervals(r)) {
    // Unimodular map sending the edges <0,∞>, <-1,∞> onto <r1,r>, <r2,r>.
    to_r_ = {r.numerator(), domain_.r1.numerator(), r.denominator(), domain_.r1.denominator()};
    auto det = to_r_.determinant();
    if (det != 1 && det != -1)
        throw InternalError("r and r1 are not Farey neighbours for r = " + r.str());
    if (to_r_.apply(Slope(-1, 1)) != domain_.r2)
        throw InternalError("r2 is not the Farey partner of r1 for r = " + r.str());
    from_r_ = to_r_.inverse();

    const Mobius flip{-1, 0, 0, 1};        // s ↦ -s, reflection in <0,∞>
    const Mobius flip_one{-1, 2, 0, 1};    // s ↦ 2 - s, reflection in <1,∞>
    const Mobius flip_minus{-1, -2, 0, 1}; // t ↦ -2 - t, reflection in <-1,∞>
    generators_ = {flip, flip_one, to_r_ * flip * from_r_, to_r_ * flip_minus * from_r_};
}

DomainRegion ReflectionGroup::classify(const Slope& s) const {
    if (s.is_infinite())
        return DomainRegion::Infinity;
    if (s == domain_.r)
        return DomainRegion::Cusp;
    if (domain_.in_i1(s))
        return DomainRegion::I1;
    if (domain_.in_i2(s))
        return DomainRegion::I2;
    return DomainRegion::Outside;
}

// Fold s into [0, 1] ∪ {∞} with s ↦ s + 2n and s ↦ -s.
Slope ReflectionGroup::normalize_at_infinity(const Slope& s) const {
    if (s.is_infinite())
        return s;
    const std::int64_t n = s.numerator();
    const std::int64_t d = s.denominator();
    const std::int64_t period = 2 * d;
    std::int64_t rem = n % period;
    if (rem < 0)
        rem += period;
    if (rem > d)
        rem = period - rem;
    return Slope(rem, d);
}

// Same folding conjugated to r: pull back, fold into [-1, 0] ∪ {∞}, push forward.
Slope ReflectionGroup::normalize_at_r(const Slope& s) const {
    Slope t = from_r_.apply(s);
    if (!t.is_infinite()) {
        const std::int64_t d = t.denominator();
        const std::int64_t period = 2 * d;
        std::int64_t rem = (t.numerator() + d) % period;  // shift [-1,1) to [0,2)
        if (rem < 0)
            rem += period;
        rem -= d;  // back in [-d, d)
        if (rem > 0)
            rem = -rem;
        t = Slope(rem, d);
    }
    return to_r_.apply(t);
}

int ReflectionGroup::step_budget(const Slope& s) {
    return 10 * (bit_length(s.numerator()) + bit_length(s.denominator()) + 1);
}

Slope ReflectionGroup::reduce(const Slope& s) const {
    const int budget = step_budget(s);
    Slope cur = s;
    for (int step = 0; step <= budget; ++step) {
        cur = normalize_at_infinity(cur);
        if (classify(cur) != DomainRegion::Outside)
            return cur;
        // cur lies strictly between r1 and r2 and differs from r.
        cur = normalize_at_r(cur);
        if (classify(cur) != DomainRegion::Outside)
            return cur;
    }
    throw InternalError("orbit reduction of " + s.str() + " for r = " + domain_.r.str() +
                        " exceeded its step budget");
}

Slope reduce_to_fundamental(const Slope& r, const Slope& s) {
    return ReflectionGroup(r).reduce(s);
}

Slope tau(std::int64_t p, const Slope& s) {
    if (p < 2)
        throw DomainError("tau needs p >= 2");
    const wide c = s.numerator();
    const wide d = s.denominator();
    return make_slope(c, c * p - d);
}

bool null_homotopic(const Slope& r, const Slope& s) {
    ReflectionGroup group(r);
    auto region = group.classify(group.reduce(s));
    return region == DomainRegion::Infinity || region == DomainRegion::Cusp;
}

bool orbit_equivalent_extended(std::int64_t p, const Slope& s, const Slope& s2) {
    if (p < 2)
        throw DomainError("orbit equivalence needs p >= 2");
    ReflectionGroup group(Slope(1, p));
    auto target = group.reduce(s2);
    return group.reduce(s) == target || group.reduce(tau(p, s)) == target;
}

} // namespace twobridge
