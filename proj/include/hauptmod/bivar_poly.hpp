#pragma once

#include "hauptmod/series.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hauptmod {

/// Polynomial sum C_{i,j} X^i Y^j with integer coefficients. Zero
/// coefficients are never stored.
class BivarPoly {
public:
    using Exponents = std::pair<int, int>;

    BivarPoly() = default;
    explicit BivarPoly(std::map<Exponents, BigInt> coefficients);
    /// Convenience for small literals: {i, j, c} triples (duplicates add up).
    static BivarPoly from_terms(const std::vector<std::tuple<int, int, long>>& terms);

    const std::map<Exponents, BigInt>& terms() const noexcept { return coeffs_; }
    BigInt coefficient(int i, int j) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degrees in X and Y; 0 for the zero polynomial.
    int deg_x() const;
    int deg_y() const;
    /// gcd of all coefficients (0 for the zero polynomial).
    BigInt content() const;

    /// Primitive, with C_{degX, j0} > 0 for the least j0 with C_{degX, j0} != 0.
    BivarPoly normalized() const;
    /// C_{i,j} -> C_{j,i}.
    BivarPoly transposed() const;
    BivarPoly scaled(const BigInt& c) const;

    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

private:
    std::map<Exponents, BigInt> coeffs_;
};

enum class PolyFormat {
    Plain,  ///< "X^2 - Y + 2*X*Y"
    Latex,  ///< "X^2-Y+2XY", terms ordered by Y-degree then X-degree
};

std::string to_string(const BivarPoly& f, PolyFormat format = PolyFormat::Plain);

/// f(x, y) as a series; Horner in x over precomputed powers of y.
QSeries evaluate(const BivarPoly& f, const QSeries& x, const QSeries& y);

/// (X^p - Y)(X - Y^p).
BivarPoly kronecker_frame(int p);

}  // namespace hauptmod
