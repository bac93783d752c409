#include "hauptmod/modeq.hpp"

#include "hauptmod/arith.hpp"
#include "hauptmod/errors.hpp"
#include "hauptmod/eta.hpp"
#include "hauptmod/linalg.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hauptmod {

namespace {

void require_level(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("modular equation level must be at least 2");
}

struct Expansions {
    QSeries w;  // w(tau)
    QSeries v;  // w(n tau)
};

Expansions expansions(std::int64_t n, std::int64_t prec) {
    QSeries w = expand(named_w(), prec);
    QSeries v = rescale(w, n).truncated(prec);
    return {std::move(w), std::move(v)};
}

std::vector<std::uint64_t> reduce_series(const QSeries& s, std::int64_t prec, std::uint64_t p) {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(prec), 0);
    for (std::int64_t e = std::max<std::int64_t>(s.valuation(), 0); e < prec; ++e) {
        const Rational c = s.coefficient(e);
        out[static_cast<std::size_t>(e)] = mpz_fdiv_ui(c.get_num_mpz_t(), static_cast<unsigned long>(p));
    }
    return out;
}

// a * b truncated to a.size(), skipping zero terms of b.
std::vector<std::uint64_t> mul_mod(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                   std::uint64_t p) {
    const std::size_t n = a.size();
    std::vector<std::size_t> nz;
    for (std::size_t t = 0; t < n; ++t)
        if (b[t] != 0) nz.push_back(t);
    std::vector<std::uint64_t> out(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (a[s] == 0) continue;
        for (const std::size_t t : nz) {
            if (s + t >= n) break;
            out[s + t] = (out[s + t] + a[s] * b[t]) % p;
        }
    }
    return out;
}

std::size_t unknown_index(std::int64_t i, std::int64_t j, const Degrees& deg) {
    return static_cast<std::size_t>(i * (deg.d1 + 1) + j);
}

BivarPoly poly_from_vector(const std::vector<BigInt>& v, const Degrees& deg) {
    std::map<BivarPoly::Exponents, BigInt> m;
    for (std::int64_t i = 0; i <= deg.d2; ++i) {
        for (std::int64_t j = 0; j <= deg.d1; ++j) {
            const BigInt& c = v[unknown_index(i, j, deg)];
            if (sgn(c) != 0) m.emplace(BivarPoly::Exponents{static_cast<int>(i), static_cast<int>(j)}, c);
        }
    }
    return BivarPoly(std::move(m));
}

std::string diagnostics(std::int64_t n, const Degrees& deg, std::int64_t prec, std::size_t nullity,
                        SolveMethod method, int attempts) {
    std::ostringstream out;
    out << "level " << n << ", degrees (d1=" << deg.d1 << ", d2=" << deg.d2 << "), precision " << prec
        << ", unknowns " << (deg.d1 + 1) * (deg.d2 + 1) << ", nullity " << nullity << ", method "
        << to_string(method) << ", attempts " << attempts;
    return out.str();
}

struct Kernel {
    std::size_t nullity = 0;
    std::vector<BigInt> vector;
    std::size_t primes_used = 0;
};

Kernel kernel_exact(const Expansions& ex, const Degrees& deg, std::int64_t prec) {
    const std::size_t k = static_cast<std::size_t>((deg.d1 + 1) * (deg.d2 + 1));
    linalg::IntMatrix m(static_cast<std::size_t>(prec), k);
    std::vector<QSeries> vpow{QSeries::one(prec)};
    for (std::int64_t j = 1; j <= deg.d1; ++j) vpow.push_back(vpow.back() * ex.v);
    QSeries wi = QSeries::one(prec);
    for (std::int64_t i = 0; i <= deg.d2; ++i) {
        for (std::int64_t j = 0; j <= deg.d1; ++j) {
            const QSeries col = (wi * vpow[static_cast<std::size_t>(j)]).truncated(prec);
            for (std::int64_t e = std::max<std::int64_t>(col.valuation(), 0); e < prec; ++e) {
                m(static_cast<std::size_t>(e), unknown_index(i, j, deg)) = col.coefficient(e).get_num();
            }
        }
        wi = wi * ex.w;
    }
    auto basis = linalg::nullspace_exact(m);
    Kernel out;
    out.nullity = basis.size();
    if (out.nullity == 1) out.vector = std::move(basis.front());
    return out;
}

Kernel kernel_multimodular(const Expansions& ex, const Degrees& deg, std::int64_t prec) {
    const std::size_t k = static_cast<std::size_t>((deg.d1 + 1) * (deg.d2 + 1));
    auto reduce = [&](std::uint64_t p) {
        linalg::ModMatrix m(static_cast<std::size_t>(prec), k, p);
        const auto wm = reduce_series(ex.w, prec, p);
        const auto vm = reduce_series(ex.v, prec, p);
        std::vector<std::uint64_t> wi(static_cast<std::size_t>(prec), 0);
        wi[0] = 1;
        for (std::int64_t i = 0; i <= deg.d2; ++i) {
            std::vector<std::uint64_t> col = wi;
            for (std::int64_t j = 0; j <= deg.d1; ++j) {
                const std::size_t idx = unknown_index(i, j, deg);
                for (std::size_t e = 0; e < col.size(); ++e) m(e, idx) = col[e];
                if (j < deg.d1) col = mul_mod(col, vm, p);
            }
            if (i < deg.d2) wi = mul_mod(wi, wm, p);
        }
        return m;
    };
    auto certify = [&](const std::vector<BigInt>& v) {
        const QSeries r = evaluate(poly_from_vector(v, deg), ex.w, ex.v).truncated(prec);
        return r.is_zero() && r.precision() >= prec;
    };
    const auto res = linalg::kernel_multimodular(reduce, certify);
    Kernel out;
    out.nullity = res.nullity;
    out.vector = res.vector;
    out.primes_used = res.primes_used;
    if (out.nullity == 1 && out.vector.empty()) {
        throw SolverError("rational reconstruction did not converge",
                          "precision " + std::to_string(prec) + ", primes " + std::to_string(res.primes_used));
    }
    return out;
}

}  // namespace

std::string to_string(SolveMethod m) { return m == SolveMethod::Exact ? "exact" : "multimodular"; }

Degrees predict_degrees(std::int64_t n) {
    require_level(n);
    const EtaQuotient w = named_w();
    return {total_pole_degree(w.lifted(18 * n)), total_pole_degree(w.rescaled(n))};
}

ModEqResult solve_modular_equation(std::int64_t n, const SolveOptions& options) {
    require_level(n);
    const Degrees deg = predict_degrees(n);
    const std::int64_t unknowns = (deg.d1 + 1) * (deg.d2 + 1);
    std::int64_t margin = options.margin.value_or(unknowns + 32);

    ModEqResult result;
    result.level = n;
    result.d1 = deg.d1;
    result.d2 = deg.d2;
    result.method = options.method;

    for (int attempt = 1; attempt <= 2; ++attempt, margin *= 2) {
        const std::int64_t prec = deg.d2 + n * deg.d1 + margin;
        const Expansions ex = expansions(n, prec);
        const Kernel ker = options.method == SolveMethod::Exact ? kernel_exact(ex, deg, prec)
                                                                : kernel_multimodular(ex, deg, prec);
        result.attempts = attempt;
        result.precision_used = prec;
        result.primes_used += ker.primes_used;
        if (ker.nullity == 0) {
            throw NullspaceEmpty(diagnostics(n, deg, prec, 0, options.method, attempt));
        }
        if (ker.nullity > 1) {
            if (attempt == 2) {
                throw NullspaceAmbiguous(diagnostics(n, deg, prec, ker.nullity, options.method, attempt));
            }
            continue;
        }
        const BivarPoly raw = poly_from_vector(ker.vector, deg);
        result.poly = raw.normalized();
        result.nullspace_dim = 1;
        // Anchor: the last unknown with a nonzero entry.
        for (std::size_t idx = ker.vector.size(); idx-- > 0;) {
            if (sgn(ker.vector[idx]) == 0) continue;
            const int i = static_cast<int>(static_cast<std::int64_t>(idx) / (deg.d1 + 1));
            const int j = static_cast<int>(static_cast<std::int64_t>(idx) % (deg.d1 + 1));
            result.normalization.anchor = {i, j};
            result.normalization.scale = result.poly.coefficient(i, j);
            break;
        }
        return result;
    }
    throw std::logic_error("unreachable");
}

CoeffPattern predict_coefficient_pattern(std::int64_t n) {
    require_level(n);
    const EtaQuotient f1 = named_w().lifted(18 * n);
    const EtaQuotient f2 = named_w().rescaled(n);
    const auto div1 = divisor(f1);
    const auto div2 = divisor(f2);

    std::set<Cusp> zero1, pole1, zero2, pole2;
    std::map<Cusp, std::int64_t> ord1, ord2;
    for (const auto& co : div1) {
        ord1[co.cusp] = co.order.get_num().get_si();
        if (sgn(co.order) > 0) zero1.insert(co.cusp);
        if (sgn(co.order) < 0) pole1.insert(co.cusp);
    }
    for (const auto& co : div2) {
        ord2[co.cusp] = co.order.get_num().get_si();
        if (sgn(co.order) > 0) zero2.insert(co.cusp);
        if (sgn(co.order) < 0) pole2.insert(co.cusp);
    }

    CoeffPattern pat;
    pat.level = n;
    pat.degrees = predict_degrees(n);
    const auto d1 = static_cast<int>(pat.degrees.d1);
    const auto d2 = static_cast<int>(pat.degrees.d2);

    auto subset_of_union = [](const std::set<Cusp>& s, const std::set<Cusp>& u1, const std::set<Cusp>& u2) {
        for (const auto& x : s)
            if (!u1.count(x) && !u2.count(x)) return false;
        return true;
    };
    auto sum_over = [](const std::set<Cusp>& s, const std::set<Cusp>& t, std::map<Cusp, std::int64_t>& ord) {
        std::int64_t total = 0;
        for (const auto& x : s)
            if (t.count(x)) total += ord[x];
        return total;
    };

    pat.a = -sum_over(pole1, zero2, ord1);
    pat.b = sum_over(zero1, zero2, ord1);
    pat.a_swap = -sum_over(pole2, zero1, ord2);
    pat.b_swap = sum_over(zero2, zero1, ord2);

    const int a = static_cast<int>(pat.a), b = static_cast<int>(pat.b);
    const int a2 = static_cast<int>(pat.a_swap), b2 = static_cast<int>(pat.b_swap);

    // Leading X-row and constant X-row.
    pat.forced_nonzero.insert({d2, a});
    if (subset_of_union(pole1, pole2, zero2)) {
        for (int j = 0; j <= d1; ++j)
            if (j != a) pat.forced_zero.insert({d2, j});
    }
    pat.forced_nonzero.insert({0, b});
    if (subset_of_union(zero1, pole2, zero2)) {
        for (int j = 0; j <= d1; ++j)
            if (j != b) pat.forced_zero.insert({0, j});
    }
    // Same with the roles of X and Y interchanged.
    pat.forced_nonzero.insert({a2, d1});
    if (subset_of_union(pole2, pole1, zero1)) {
        for (int i = 0; i <= d2; ++i)
            if (i != a2) pat.forced_zero.insert({i, d1});
    }
    pat.forced_nonzero.insert({b2, 0});
    if (subset_of_union(zero2, pole1, zero1)) {
        for (int i = 0; i <= d2; ++i)
            if (i != b2) pat.forced_zero.insert({i, 0});
    }
    for (const auto& e : pat.forced_nonzero) {
        if (pat.forced_zero.count(e)) throw std::logic_error("coefficient pattern is contradictory");
    }
    return pat;
}

bool check_pattern(const BivarPoly& poly, const CoeffPattern& pattern) {
    for (const auto& [i, j] : pattern.forced_zero)
        if (sgn(poly.coefficient(i, j)) != 0) return false;
    for (const auto& [i, j] : pattern.forced_nonzero)
        if (sgn(poly.coefficient(i, j)) == 0) return false;
    return true;
}

bool check_pattern(const ModEqResult& result, const CoeffPattern& pattern) {
    if (result.level != pattern.level) throw std::invalid_argument("pattern and result levels differ");
    return check_pattern(result.poly, pattern);
}

bool check_kronecker(const BivarPoly& poly, std::int64_t p) {
    if (p < 5 || !arith::is_prime(p)) {
        throw NotPrimeLevel("Kronecker congruence needs a prime level >= 5, got " + std::to_string(p));
    }
    const BivarPoly diff = poly - kronecker_frame(static_cast<int>(p));
    for (const auto& [e, c] : diff.terms()) {
        if (mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p)) == 0) return false;
    }
    return true;
}

bool check_kronecker(const ModEqResult& result) { return check_kronecker(result.poly, result.level); }

bool check_symmetry(const BivarPoly& poly, std::int64_t level) {
    if (std::gcd(level, std::int64_t{6}) != 1) {
        throw LevelNotCoprimeTo6("symmetry is only expected for levels coprime to 6, got " +
                                 std::to_string(level));
    }
    return poly == poly.transposed();
}

bool check_symmetry(const ModEqResult& result) { return check_symmetry(result.poly, result.level); }

std::int64_t psi(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("psi needs n >= 1");
    return arith::psi(n);
}

std::optional<BivarPoly> kronecker_inner_factor(const BivarPoly& poly, std::int64_t p) {
    const BivarPoly diff = kronecker_frame(static_cast<int>(p)) - poly;
    std::map<BivarPoly::Exponents, BigInt> g;
    for (const auto& [e, c] : diff.terms()) {
        if (e.first < 1 || e.second < 1) return std::nullopt;
        if (mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p)) == 0) return std::nullopt;
        BigInt q;
        mpz_divexact_ui(q.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
        g.emplace(BivarPoly::Exponents{e.first - 1, e.second - 1}, q);
    }
    return BivarPoly(std::move(g));
}

QSeries modular_equation_residual(const BivarPoly& poly, std::int64_t n, std::int64_t prec) {
    const Expansions ex = expansions(n, prec);
    return evaluate(poly, ex.w, ex.v).truncated(prec);
}

}  // namespace hauptmod
