#pragma once

// Cusps of Gamma0(N): enumeration, equivalence and widths.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hauptmod {

/// A cusp a/c in lowest terms with c >= 0. Infinity is stored as 1/0 and
/// zero as 0/1. Equality is literal; Gamma0(N)-equivalence is level
/// dependent and lives in are_equivalent().
class Cusp {
public:
    /// Infinity.
    Cusp() = default;
    /// The cusp a/c; reduced to lowest terms with c >= 0. (0, 0) is rejected.
    Cusp(std::int64_t a, std::int64_t c);

    static Cusp infinity() { return Cusp(); }

    std::int64_t numerator() const noexcept { return a_; }
    std::int64_t denominator() const noexcept { return c_; }
    bool is_infinity() const noexcept { return c_ == 0; }

    /// "inf", "0", "5/6".
    std::string to_string() const;
    /// Inverse of to_string; also accepts "oo", "1/0" and plain integers.
    static Cusp parse(const std::string& text);

    friend bool operator==(const Cusp&, const Cusp&) = default;
    friend auto operator<=>(const Cusp&, const Cusp&) = default;

private:
    std::int64_t a_ = 1;
    std::int64_t c_ = 0;
};

/// One representative per Gamma0(N)-class: infinity, zero, then a/c for the
/// remaining divisors c of N in increasing order. Within a class the
/// representative is the smallest positive a coprime to c.
std::vector<Cusp> cusp_set(std::int64_t level);

/// Number of cusps, sum over c | N of phi(gcd(c, N/c)).
std::int64_t cusp_count(std::int64_t level);

/// True iff x and y are equivalent under Gamma0(N): some unit s mod N and
/// integer n with (a', c') = (s^-1 a + n c, s c) mod N.
bool are_equivalent(std::int64_t level, const Cusp& x, const Cusp& y);

/// The member of cusp_set(level) equivalent to x.
Cusp canonical(std::int64_t level, const Cusp& x);

/// Width N / gcd(c^2, N) of the cusp a/c.
std::int64_t width(std::int64_t level, const Cusp& x);

}  // namespace hauptmod
