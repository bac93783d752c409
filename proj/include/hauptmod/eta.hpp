#pragma once

// Eta quotients prod_{d | N} eta(d tau)^{r_d}: modularity test, q-expansion,
// and the Ligozat order at each cusp of Gamma0(N).

#include "hauptmod/cusps.hpp"
#include "hauptmod/series.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hauptmod {

class EtaQuotient {
public:
    /// The trivial quotient at level 1.
    EtaQuotient() = default;
    /// Throws BadSpec if a key is not a positive divisor of level.
    EtaQuotient(std::int64_t level, std::map<std::int64_t, std::int64_t> exponents);

    std::int64_t level() const noexcept { return level_; }
    /// Nonzero exponents only.
    const std::map<std::int64_t, std::int64_t>& exponents() const noexcept { return exps_; }
    std::int64_t exponent(std::int64_t delta) const;

    /// The same function viewed at a level divisible by level().
    EtaQuotient lifted(std::int64_t new_level) const;
    /// f(n tau): every delta becomes n*delta, at level n*N.
    EtaQuotient rescaled(std::int64_t n) const;

    /// Parses "N; d1:r1, d2:r2, ...".
    static EtaQuotient parse(const std::string& text);
    std::string to_string() const;

    friend EtaQuotient operator*(const EtaQuotient& f, const EtaQuotient& g);
    friend EtaQuotient operator/(const EtaQuotient& f, const EtaQuotient& g);
    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

private:
    std::int64_t level_ = 1;
    std::map<std::int64_t, std::int64_t> exps_;
};

struct CuspOrder {
    Cusp cusp;
    Rational order;
};

enum class PoleZero { Pole, Zero, Regular };

/// (1/2) sum r_d.
Rational weight(const EtaQuotient& f);

/// Weight zero and both sum d r_d and sum (N/d) r_d divisible by 24. The
/// Jacobi-symbol multiplier is not evaluated.
bool is_modular_function(const EtaQuotient& f);

/// q-expansion with every exponent below `prec` (in whole powers of q).
/// The exponent denominator is reduced from 24 as far as the expansion allows.
QSeries expand(const EtaQuotient& f, std::int64_t prec);

/// Ligozat: N / (24 d gcd(d, N/d)) * sum gcd(d, delta)^2 r_delta / delta,
/// for the canonical representative c/d of x.
Rational order_at_cusp(const EtaQuotient& f, const Cusp& x);

/// Order at each member of cusp_set(level). Throws NotModular, and asserts
/// integrality of every order.
std::vector<CuspOrder> divisor(const EtaQuotient& f);

std::int64_t total_pole_degree(const EtaQuotient& f);
std::int64_t total_zero_degree(const EtaQuotient& f);

/// Pole/zero pattern of w at an arbitrary cusp: pole iff c = +-2 mod 6,
/// zero iff 18 | c.
PoleZero pole_zero_class(const Cusp& x);

/// w(tau) = eta(tau) eta(18 tau)^2 / (eta(2 tau)^2 eta(9 tau)) at level 18.
EtaQuotient named_w();
/// X(tau) = eta(tau) eta(6 tau)^2 / (eta(2 tau)^2 eta(3 tau)) at level 6.
EtaQuotient named_X();
/// E4 = 1 + 240 sum sigma_3(n) q^n below q^prec.
QSeries eisenstein_e4(std::int64_t prec);
/// j = E4^3 / eta^24, known below q^prec.
QSeries named_j(std::int64_t prec);

}  // namespace hauptmod
