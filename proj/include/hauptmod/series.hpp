#pragma once

// Truncated Laurent series in q^(1/h) with exact rational coefficients.
//
// A QSeries stores exponents as integers in units of 1/h (h = denom()).
// Coefficients are dense from the valuation up to, but excluding, the
// precision bound. Every value is immutable once built.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hauptmod {

using BigInt = mpz_class;
using Rational = mpq_class;

/// n/d in canonical form (GMP's rational operations require it).
inline Rational ratio(const BigInt& n, const BigInt& d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

class QSeries {
public:
    /// The zero series O(q^0).
    QSeries() = default;

    /// Series with coefficients[k] at exponent (val + k)/denom, truncated at
    /// val + coefficients.size(). Leading zeros are stripped.
    QSeries(std::int64_t denom, std::int64_t val, std::vector<Rational> coefficients);

    /// As above with an explicit precision bound; coefficients past it are
    /// dropped, missing ones are zero.
    QSeries(std::int64_t denom, std::int64_t val, std::vector<Rational> coefficients,
            std::int64_t prec);

    static QSeries zero(std::int64_t prec, std::int64_t denom = 1);
    static QSeries one(std::int64_t prec);
    /// c * q^(exponent/denom) + O(q^(prec/denom)).
    static QSeries monomial(const Rational& c, std::int64_t exponent, std::int64_t prec,
                            std::int64_t denom = 1);

    std::int64_t denom() const noexcept { return denom_; }
    /// Valuation in units of 1/denom. Equal to precision() for the zero series.
    std::int64_t valuation() const noexcept { return val_; }
    /// Exclusive truncation bound in units of 1/denom.
    std::int64_t precision() const noexcept { return prec_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_integral() const;

    /// Coefficient of q^(e/denom). Zero below the valuation; throws
    /// PrecisionExceeded when e >= precision().
    Rational coefficient(std::int64_t e) const;
    /// Coefficient at a rational q-exponent, e.g. 1/4.
    Rational coefficient_at(const Rational& exponent) const;

    /// Dense coefficients from valuation() to precision() - 1.
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    /// Valuation and precision as rational q-exponents.
    Rational valuation_exponent() const { return ratio(val_, denom_); }
    Rational precision_exponent() const { return ratio(prec_, denom_); }

    QSeries truncated(std::int64_t prec) const;
    /// Re-express with denominator h, which must be a multiple of denom().
    QSeries with_denom(std::int64_t h) const;
    /// Reduce denom() to the smallest value compatible with the nonzero
    /// exponents and the precision bound.
    QSeries normalized() const;
    /// Multiply by q^(k/denom).
    QSeries shifted(std::int64_t k) const;

    QSeries operator-() const;
    QSeries scaled(const Rational& c) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    /// Same precision and coefficients once both are written over a common denominator.
    friend bool operator==(const QSeries& a, const QSeries& b);

private:
    void strip();

    std::int64_t denom_ = 1;
    std::int64_t val_ = 0;
    std::int64_t prec_ = 0;
    std::vector<Rational> coeffs_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries invert(const QSeries& a);
QSeries pow(const QSeries& a, std::int64_t k);
/// Substitute q -> q^n.
QSeries rescale(const QSeries& a, std::int64_t n);

/// prod_{n >= 1} (1 - q^(scale*n)) + O(q^prec), via the pentagonal number theorem.
QSeries euler_product(std::int64_t scale, std::int64_t prec);

/// First exponent (units of 1/lcm denom) below the common precision where a
/// and b differ, if any.
std::optional<Rational> first_difference(const QSeries& a, const QSeries& b);

enum class SeriesFormat { Plain, Latex };

/// "q - q^2 + 3*q^(5/4) + O(q^8)" or its LaTeX counterpart.
std::string to_string(const QSeries& s, SeriesFormat format = SeriesFormat::Plain);

/// Decimal rendering of a rational ("-3", "7/4").
std::string to_decimal(const Rational& r);

}  // namespace hauptmod
