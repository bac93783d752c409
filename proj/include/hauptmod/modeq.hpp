#pragma once

// Modular equations F_n(w(tau), w(n tau)) = 0 for the Hauptmodul w of Gamma0(18).
//
// The bidegree comes from the pole divisors of w(tau) and w(n tau) on
// Gamma0(18n); the coefficients are the (one-dimensional) nullspace of the
// linear system "sum C_ij W^i V^j = 0 to precision P" on the q-expansions.

#include "hauptmod/bivar_poly.hpp"
#include "hauptmod/cusps.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace hauptmod {

struct Degrees {
    std::int64_t d1 = 0;  ///< pole degree of w(tau) on Gamma0(18n); the Y-degree
    std::int64_t d2 = 0;  ///< pole degree of w(n tau) on Gamma0(18n); the X-degree
    friend bool operator==(const Degrees&, const Degrees&) = default;
};

Degrees predict_degrees(std::int64_t n);

enum class SolveMethod {
    Multimodular,  ///< residues mod word primes, certified by exact substitution
    Exact,         ///< fraction-free elimination over Z
};

std::string to_string(SolveMethod m);

struct SolveOptions {
    SolveMethod method = SolveMethod::Multimodular;
    /// Replaces the margin in P = d2 + n d1 + margin (default: unknowns + 32).
    std::optional<std::int64_t> margin;
};

/// How the raw nullspace vector became the printed polynomial: the raw vector
/// has a 1 at `anchor`; the final polynomial is the raw vector times `scale`.
struct Normalization {
    BivarPoly::Exponents anchor{0, 0};
    BigInt scale = 1;
};

struct ModEqResult {
    std::int64_t level = 0;
    std::int64_t d1 = 0;
    std::int64_t d2 = 0;
    BivarPoly poly;
    std::int64_t precision_used = 0;
    std::int64_t nullspace_dim = 0;
    Normalization normalization;
    SolveMethod method = SolveMethod::Multimodular;
    std::size_t primes_used = 0;
    int attempts = 0;
};

/// Throws NullspaceEmpty or NullspaceAmbiguous (after one precision doubling).
ModEqResult solve_modular_equation(std::int64_t n, const SolveOptions& options = {});

/// Coefficient positions forced zero or nonzero by the cusp configuration of
/// w(tau) and w(n tau) on Gamma0(18n).
struct CoeffPattern {
    std::int64_t level = 0;
    Degrees degrees;
    std::int64_t a = 0, b = 0;            ///< for (f1, f2) = (w(tau), w(n tau))
    std::int64_t a_swap = 0, b_swap = 0;  ///< roles interchanged
    std::set<BivarPoly::Exponents> forced_zero;
    std::set<BivarPoly::Exponents> forced_nonzero;
};

CoeffPattern predict_coefficient_pattern(std::int64_t n);

bool check_pattern(const BivarPoly& poly, const CoeffPattern& pattern);
bool check_pattern(const ModEqResult& result, const CoeffPattern& pattern);

/// poly = (X^p - Y)(X - Y^p) mod p. Throws NotPrimeLevel unless p >= 5 is prime.
bool check_kronecker(const BivarPoly& poly, std::int64_t p);
bool check_kronecker(const ModEqResult& result);

/// C_{i,j} = C_{j,i}. Throws LevelNotCoprimeTo6 unless gcd(level, 6) = 1.
bool check_symmetry(const BivarPoly& poly, std::int64_t level);
bool check_symmetry(const ModEqResult& result);

std::int64_t psi(std::int64_t n);

/// G with poly = (X^p - Y)(X - Y^p) - p X Y G(X, Y), when such an integral G exists.
std::optional<BivarPoly> kronecker_inner_factor(const BivarPoly& poly, std::int64_t p);

/// Residual F(w(tau), w(n tau)) to the given precision.
QSeries modular_equation_residual(const BivarPoly& poly, std::int64_t n, std::int64_t prec);

}  // namespace hauptmod
