#pragma once

// Reproduction checks for the published data about w(tau): its q-expansion,
// its divisor on Gamma0(18), the modular-equation tables, and the identities
// relating w, X and j. Every check returns a report instead of throwing.

#include "hauptmod/bivar_poly.hpp"
#include "hauptmod/cusps.hpp"
#include "hauptmod/eta.hpp"
#include "hauptmod/golden.hpp"
#include "hauptmod/modeq.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hauptmod::verify {

enum class Status { Pass, Fail, InsufficientPrecision };

std::string to_string(Status s);

struct CheckReport {
    std::string name;
    Status status = Status::Pass;
    /// Human-readable summary; for failures it names the first discrepancy.
    std::string detail;
    std::int64_t precision = 0;
    /// Position of the first discrepancy (an exponent or a coefficient index).
    std::optional<std::string> witness;

    bool passed() const noexcept { return status == Status::Pass; }
};

/// Pass iff `residual` is known and zero on every exponent below q^prec;
/// InsufficientPrecision when it is not known that far.
CheckReport check_vanishes(std::string name, const QSeries& residual, std::int64_t prec);

/// w = q - q^2 + q^3 - 2q^4 + 3q^5 - 4q^6 + 5q^7 + O(q^8), compared on
/// every exponent below min(prec, 8).
CheckReport check_w_expansion(const EtaQuotient& w = named_w(), std::int64_t prec = 8);

/// Ligozat orders of w at the given cusps of Gamma0(18), each canonicalized.
/// Defaults: (inf, 0, 1/2, 1/3, 2/3, 1/6, 5/6, 1/9) -> (1, 0, -1, 0, 0, 0, 0, 0).
CheckReport check_w_divisor_level18(const std::vector<Cusp>& cusps = {},
                                    const std::vector<std::int64_t>& expected = {});

/// X^4 = w * Q(w) and X(3 tau)^4 * Q(w) = w^3 with Q(w) = c0 + c1 w + c2 w^2,
/// both as series to `prec`. The published Q is 1 - 3w + 3w^2.
CheckReport check_x_power_identities(std::array<long, 3> q = {1, -3, 3}, std::int64_t prec = 200);

/// k0 X^3 + k1 X(3tau) + k2 X X(3tau)^2 + k3 X^2 X(3tau)^3 = 0 to `prec`;
/// the published relation is (1, -1, 3, -3).
CheckReport check_x_level3_relation(std::array<long, 4> k = {1, -1, 3, -3}, std::int64_t prec = 200);

/// The j-invariant as a rational function of f = 1/w, cross-multiplied:
/// j (f-1)^2 f^9 (f-3)^18 (f^2-3f+3) (f^2+3)^2 = (f^3+3f^2-9f+9)^3 P(f)^3,
/// checked on all exponents below `prec`. `p_coeffs` lists P from the
/// constant term up.
CheckReport check_j_identity(const std::vector<long>& p_coeffs = {}, std::int64_t prec = 100);

/// The coefficients of q^-1 .. q^2 in j: 1, 744, 196884, 21493760.
CheckReport check_j_expansion();

/// The printed degree-9 polynomial P, constant term first.
const std::vector<long>& published_j_polynomial();

/// Expands a reference equation into its flat coefficient grid.
BivarPoly flatten(const golden::Equation& eq);

/// Solves every level in `equations` and compares against it; also runs the
/// structure checks (coefficient pattern, and for primes p >= 5 the
/// Kronecker congruence, symmetry and degree psi(p)).
std::vector<CheckReport> check_modular_equation_tables(
    const std::vector<golden::Equation>& equations = golden::builtin_equations(),
    SolveMethod method = SolveMethod::Multimodular);

/// Cusp lists of Gamma0(18), Gamma0(36), Gamma0(54), Gamma0(90) up to
/// equivalence, pole/zero classification of w on Gamma0(18n) and degree
/// balance of w at several levels.
std::vector<CheckReport> check_cusp_structure();

enum class Subset { All, Tables, Identities, Cusps };

std::optional<Subset> parse_subset(const std::string& s);

struct SuiteOptions {
    Subset subset = Subset::All;
    bool fail_fast = false;
    std::vector<golden::Equation> golden = golden::builtin_equations();
};

std::vector<CheckReport> run_suite(const SuiteOptions& options);

struct Unreproduced {
    std::string claim;
    std::string proxy;
};

/// Statements about w with no finite numerical reproduction, and the
/// computation that stands in for each.
const std::vector<Unreproduced>& unreproduced_claims();

}  // namespace hauptmod::verify
