#include "hauptmod/linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hauptmod::linalg {

namespace {

// Residues stay below 2^28, so (p-1)^2 < 2^56 and 255 products fit in a
// uint64 accumulator before a reduction is needed.
constexpr std::uint64_t kPrimeCeiling = std::uint64_t{1} << 28;
constexpr int kLazyBudget = 255;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

}  // namespace

std::uint64_t prime_below(std::uint64_t n) {
    if (n <= 3) throw std::invalid_argument("no odd prime below 3");
    for (std::uint64_t c = (n - 1) | 1; c >= 3; c -= 2) {
        if (c >= n) continue;
        bool prime = true;
        for (std::uint64_t d = 3; d * d <= c; d += 2) {
            if (c % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) return c;
    }
    return 2;
}

ModKernel kernel_mod_p(const ModMatrix& m) {
    const std::uint64_t p = m.prime();
    if (p >= kPrimeCeiling) throw std::invalid_argument("kernel_mod_p needs a prime below 2^28");
    const std::size_t cols = m.cols();
    std::vector<std::vector<std::uint64_t>> pivots;
    std::vector<std::ptrdiff_t> pivot_of(cols, -1);
    std::vector<std::uint64_t> buf(cols);

    for (std::size_t r = 0; r < m.rows() && pivots.size() < cols; ++r) {
        const auto src = m.row(r);
        std::copy(src.begin(), src.end(), buf.begin());
        int pending = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (pivot_of[c] < 0) continue;
            buf[c] %= p;
            const std::uint64_t f = buf[c];
            if (f == 0) continue;
            const std::uint64_t g = p - f;
            const auto& piv = pivots[static_cast<std::size_t>(pivot_of[c])];
            buf[c] = 0;
            for (std::size_t j = c + 1; j < cols; ++j) buf[j] += g * piv[j];
            if (++pending == kLazyBudget) {
                for (std::size_t j = c + 1; j < cols; ++j) buf[j] %= p;
                pending = 0;
            }
        }
        std::size_t lead = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            buf[j] %= p;
            if (lead == cols && buf[j] != 0) lead = j;
        }
        if (lead == cols) continue;
        const std::uint64_t inv = inv_mod(buf[lead], p);
        for (std::size_t j = lead; j < cols; ++j) buf[j] = buf[j] * inv % p;
        pivot_of[lead] = static_cast<std::ptrdiff_t>(pivots.size());
        pivots.push_back(buf);
    }

    ModKernel out;
    out.nullity = cols - pivots.size();
    if (out.nullity == 0) return out;
    for (std::size_t c = cols; c-- > 0;) {
        if (pivot_of[c] < 0) {
            out.free_column = c;
            break;
        }
    }
    if (out.nullity != 1) return out;

    std::vector<std::uint64_t> x(cols, 0);
    x[out.free_column] = 1;
    for (std::size_t c = cols; c-- > 0;) {
        if (pivot_of[c] < 0) continue;
        const auto& piv = pivots[static_cast<std::size_t>(pivot_of[c])];
        std::uint64_t acc = 0;
        for (std::size_t j = c + 1; j < cols; ++j) {
            if (x[j] != 0 && piv[j] != 0) acc = (acc + piv[j] * x[j]) % p;
        }
        x[c] = (p - acc) % p;
    }
    out.vector = std::move(x);
    return out;
}

std::optional<Rational> rational_reconstruct(const BigInt& u, const BigInt& m) {
    BigInt bound;
    mpz_sqrt(bound.get_mpz_t(), BigInt(m / 2).get_mpz_t());
    BigInt r0 = m, r1 = u % m;
    if (r1 < 0) r1 += m;
    BigInt s0 = 0, s1 = 1;
    while (r1 > bound) {
        const BigInt q = r0 / r1;
        BigInt t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (abs(s1) > bound || s1 == 0) return std::nullopt;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rational out(r1, s1);
    out.canonicalize();
    return out;
}

std::vector<BigInt> primitive_vector(std::span<const Rational> v) {
    BigInt l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> out(v.size());
    BigInt g = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        out[k] = v[k].get_num() * (l / v[k].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[k].get_mpz_t());
    }
    if (g == 0) return out;
    int sign = 1;
    for (std::size_t k = v.size(); k-- > 0;) {
        if (sgn(out[k]) != 0) {
            sign = sgn(out[k]);
            break;
        }
    }
    for (auto& x : out) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        if (sign < 0) x = -x;
    }
    return out;
}

std::vector<std::vector<BigInt>> nullspace_exact(const IntMatrix& input) {
    IntMatrix a = input;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    BigInt prev = 1;
    BigInt t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Smallest nonzero entry keeps intermediate growth down.
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (sgn(a(i, c)) == 0) continue;
            if (best == rows || mpz_cmpabs(a(i, c).get_mpz_t(), a(best, c).get_mpz_t()) < 0) best = i;
        }
        if (best == rows) continue;
        if (best != r) {
            for (std::size_t j = c; j < cols; ++j) swap(a(best, j), a(r, j));
        }
        const BigInt& piv = a(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const BigInt lead = a(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                t = piv * a(i, j);
                mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), a(r, j).get_mpz_t());
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = piv;
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<BigInt>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t k = pivot_cols.size(); k-- > 0;) {
            const std::size_t c = pivot_cols[k];
            Rational acc = 0;
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (sgn(x[j]) != 0 && sgn(a(k, j)) != 0) acc += Rational(a(k, j)) * x[j];
            }
            x[c] = -acc / Rational(a(k, c));
        }
        basis.push_back(primitive_vector(x));
    }
    return basis;
}

MultimodularResult kernel_multimodular(const std::function<ModMatrix(std::uint64_t)>& reduce,
                                       const std::function<bool(const std::vector<BigInt>&)>& certify,
                                       const MultimodularOptions& options) {
    MultimodularResult out;
    out.nullity = std::numeric_limits<std::size_t>::max();
    std::uint64_t p = kPrimeCeiling;
    std::size_t ambiguous = 0;
    bool have = false;
    std::size_t free_col = 0;
    std::vector<BigInt> residues;
    BigInt modulus = 1;
    std::optional<std::vector<Rational>> previous;

    while (out.primes_used < options.max_primes) {
        p = prime_below(p);
        const ModKernel k = kernel_mod_p(reduce(p));
        ++out.primes_used;
        out.nullity = std::min(out.nullity, k.nullity);
        if (k.nullity == 0) {
            out.vector.clear();
            return out;
        }
        if (k.nullity > 1) {
            if (!have && ++ambiguous >= options.ambiguity_trials) return out;
            continue;
        }
        if (!have || k.free_column > free_col) {
            // Unlucky primes can only move the free column down.
            have = true;
            free_col = k.free_column;
            residues.assign(k.vector.begin(), k.vector.end());
            modulus = p;
            previous.reset();
        } else if (k.free_column < free_col) {
            continue;
        } else {
            const BigInt bp(static_cast<unsigned long>(p));
            BigInt m_inv;
            mpz_invert(m_inv.get_mpz_t(), BigInt(modulus % bp).get_mpz_t(), bp.get_mpz_t());
            for (std::size_t j = 0; j < residues.size(); ++j) {
                BigInt delta = (BigInt(static_cast<unsigned long>(k.vector[j])) - residues[j]) % bp;
                if (delta < 0) delta += bp;
                delta = delta * m_inv % bp;
                residues[j] += modulus * delta;
            }
            modulus *= bp;
        }

        std::vector<Rational> candidate;
        candidate.reserve(residues.size());
        bool ok = true;
        for (const auto& u : residues) {
            auto q = rational_reconstruct(u, modulus);
            if (!q) {
                ok = false;
                break;
            }
            candidate.push_back(*q);
        }
        if (!ok) {
            previous.reset();
            continue;
        }
        if (previous && *previous == candidate) {
            auto v = primitive_vector(candidate);
            if (certify(v)) {
                out.nullity = 1;
                out.vector = std::move(v);
                return out;
            }
        }
        previous = std::move(candidate);
    }
    out.vector.clear();
    return out;
}

}  // namespace hauptmod::linalg
