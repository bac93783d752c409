#include "hauptmod/series.hpp"

#include "hauptmod/arith.hpp"
#include "hauptmod/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hauptmod {

namespace {

bool is_unit_integer(const Rational& c) {
    return c.get_den() == 1 && abs(c.get_num()) == 1;
}

// Common denominator of all coefficients.
BigInt denominator_lcm(std::span<const Rational> cs) {
    BigInt l = 1;
    for (const auto& c : cs) {
        if (c.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    return l;
}

std::vector<BigInt> scaled_to_integers(std::span<const Rational> cs, const BigInt& l) {
    std::vector<BigInt> out(cs.size());
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (l == 1) {
            out[k] = cs[k].get_num();
        } else {
            out[k] = cs[k].get_num() * (l / cs[k].get_den());
        }
    }
    return out;
}

std::pair<QSeries, QSeries> unify(const QSeries& a, const QSeries& b) {
    const std::int64_t h = std::lcm(a.denom(), b.denom());
    return {a.with_denom(h), b.with_denom(h)};
}

std::string exponent_text(const Rational& e, SeriesFormat format) {
    const std::string body = to_decimal(e);
    if (format == SeriesFormat::Latex) {
        return body.size() == 1 ? body : "{" + body + "}";
    }
    return e.get_den() == 1 && e >= 0 ? body : "(" + body + ")";
}

}  // namespace

std::string to_decimal(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str(10);
}

QSeries::QSeries(std::int64_t denom, std::int64_t val, std::vector<Rational> coefficients)
    : denom_(denom), val_(val), prec_(val + static_cast<std::int64_t>(coefficients.size())),
      coeffs_(std::move(coefficients)) {
    if (denom_ <= 0) throw std::invalid_argument("exponent denominator must be positive");
    strip();
}

QSeries::QSeries(std::int64_t denom, std::int64_t val, std::vector<Rational> coefficients,
                 std::int64_t prec)
    : denom_(denom), val_(val), prec_(prec), coeffs_(std::move(coefficients)) {
    if (denom_ <= 0) throw std::invalid_argument("exponent denominator must be positive");
    if (prec_ <= val_) {
        coeffs_.clear();
        val_ = prec_;
        return;
    }
    coeffs_.resize(static_cast<std::size_t>(prec_ - val_));
    strip();
}

void QSeries::strip() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        val_ = prec_;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        val_ += static_cast<std::int64_t>(lead);
    }
}

QSeries QSeries::zero(std::int64_t prec, std::int64_t denom) {
    return QSeries(denom, prec, {}, prec);
}

QSeries QSeries::one(std::int64_t prec) { return monomial(Rational(1), 0, prec); }

QSeries QSeries::monomial(const Rational& c, std::int64_t exponent, std::int64_t prec,
                          std::int64_t denom) {
    if (exponent >= prec) return zero(prec, denom);
    std::vector<Rational> cs(static_cast<std::size_t>(prec - exponent));
    cs[0] = c;
    return QSeries(denom, exponent, std::move(cs), prec);
}

bool QSeries::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

Rational QSeries::coefficient(std::int64_t e) const {
    if (e >= prec_) {
        std::ostringstream msg;
        msg << "coefficient of q^(" << e << "/" << denom_ << ") requested but series is known only below q^("
            << prec_ << "/" << denom_ << ")";
        throw PrecisionExceeded(msg.str());
    }
    if (e < val_) return Rational(0);
    return coeffs_[static_cast<std::size_t>(e - val_)];
}

Rational QSeries::coefficient_at(const Rational& exponent) const {
    const Rational scaled = exponent * denom_;
    if (scaled.get_den() != 1) {
        if (exponent >= precision_exponent()) {
            throw PrecisionExceeded("coefficient requested beyond precision");
        }
        return Rational(0);
    }
    return coefficient(scaled.get_num().get_si());
}

QSeries QSeries::truncated(std::int64_t prec) const {
    if (prec >= prec_) return *this;
    if (prec <= val_) return zero(prec, denom_);
    std::vector<Rational> cs(coeffs_.begin(), coeffs_.begin() + (prec - val_));
    return QSeries(denom_, val_, std::move(cs), prec);
}

QSeries QSeries::with_denom(std::int64_t h) const {
    if (h == denom_) return *this;
    if (h % denom_ != 0) throw std::invalid_argument("target denominator must be a multiple");
    const std::int64_t f = h / denom_;
    if (is_zero()) return zero(prec_ * f, h);
    std::vector<Rational> cs(static_cast<std::size_t>((prec_ - val_) * f));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) cs[k * f] = coeffs_[k];
    return QSeries(h, val_ * f, std::move(cs), prec_ * f);
}

QSeries QSeries::normalized() const {
    std::int64_t g = denom_;
    for (std::size_t k = 0; k < coeffs_.size() && g > 1; ++k) {
        if (sgn(coeffs_[k]) != 0) g = std::gcd(g, val_ + static_cast<std::int64_t>(k));
    }
    if (is_zero()) g = std::gcd(g, prec_);
    if (g == 1) return *this;
    const std::int64_t h = denom_ / g;
    // Round the bound down so no exponent outside the old range becomes "known".
    const std::int64_t prec = prec_ >= 0 ? prec_ / g : -((-prec_ + g - 1) / g);
    if (is_zero()) return zero(prec, h);
    std::vector<Rational> cs;
    cs.reserve(static_cast<std::size_t>(prec - val_ / g));
    for (std::int64_t e = val_; e < prec * g; e += g) cs.push_back(coeffs_[static_cast<std::size_t>(e - val_)]);
    return QSeries(h, val_ / g, std::move(cs), prec);
}

QSeries QSeries::shifted(std::int64_t k) const {
    QSeries out = *this;
    out.val_ += k;
    out.prec_ += k;
    return out;
}

QSeries QSeries::operator-() const {
    QSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

QSeries QSeries::scaled(const Rational& c) const {
    if (sgn(c) == 0) return zero(prec_, denom_);
    QSeries out = *this;
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

QSeries operator+(const QSeries& a0, const QSeries& b0) {
    auto [a, b] = unify(a0, b0);
    const std::int64_t prec = std::min(a.prec_, b.prec_);
    const std::int64_t val = std::min(a.val_, b.val_);
    if (val >= prec) return QSeries::zero(prec, a.denom_);
    std::vector<Rational> cs(static_cast<std::size_t>(prec - val));
    for (const QSeries* s : {&a, &b}) {
        const std::int64_t stop = std::min(s->prec_, prec);
        for (std::int64_t e = s->val_; e < stop; ++e) {
            cs[static_cast<std::size_t>(e - val)] += s->coeffs_[static_cast<std::size_t>(e - s->val_)];
        }
    }
    return QSeries(a.denom_, val, std::move(cs), prec);
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a0, const QSeries& b0) {
    auto [a, b] = unify(a0, b0);
    const std::int64_t prec = std::min(a.prec_ + b.val_, b.prec_ + a.val_);
    if (a.is_zero() || b.is_zero()) return QSeries::zero(prec, a.denom_);
    const std::int64_t val = a.val_ + b.val_;
    if (val >= prec) return QSeries::zero(prec, a.denom_);
    const auto n = static_cast<std::size_t>(prec - val);

    // Clear denominators and multiply over Z; divide back once at the end.
    const BigInt la = denominator_lcm(a.coeffs_);
    const BigInt lb = denominator_lcm(b.coeffs_);
    const auto ai = scaled_to_integers(a.coeffs_, la);
    const auto bi = scaled_to_integers(b.coeffs_, lb);

    std::vector<BigInt> acc(n);
    const std::size_t nb = std::min(bi.size(), n);
    for (std::size_t i = 0; i < ai.size() && i < n; ++i) {
        if (sgn(ai[i]) == 0) continue;
        const std::size_t stop = std::min(nb, n - i);
        mpz_srcptr x = ai[i].get_mpz_t();
        for (std::size_t j = 0; j < stop; ++j) {
            if (mpz_sgn(bi[j].get_mpz_t()) == 0) continue;
            mpz_addmul(acc[i + j].get_mpz_t(), x, bi[j].get_mpz_t());
        }
    }
    const BigInt scale = la * lb;
    std::vector<Rational> cs(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (scale == 1) {
            cs[k] = Rational(acc[k]);
        } else {
            cs[k] = ratio(acc[k], scale);
            cs[k].canonicalize();
        }
    }
    return QSeries(a.denom_, val, std::move(cs), prec);
}

bool operator==(const QSeries& a0, const QSeries& b0) {
    auto [a, b] = unify(a0, b0);
    return a.prec_ == b.prec_ && a.val_ == b.val_ && a.coeffs_ == b.coeffs_;
}

QSeries add(const QSeries& a, const QSeries& b) { return a + b; }
QSeries mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries invert(const QSeries& a) {
    if (a.is_zero()) throw ZeroSeries();
    const auto cs = a.coefficients();
    const std::size_t n = cs.size();
    std::vector<Rational> out(n);
    if (a.is_integral() && is_unit_integer(cs[0])) {
        // Integer recurrence; a0 = +-1 so no division is needed.
        const BigInt a0 = cs[0].get_num();
        std::vector<BigInt> ai(n), bi(n);
        for (std::size_t k = 0; k < n; ++k) ai[k] = cs[k].get_num();
        bi[0] = a0;
        BigInt acc;
        for (std::size_t k = 1; k < n; ++k) {
            acc = 0;
            for (std::size_t i = 1; i <= k; ++i) {
                if (sgn(ai[i]) == 0) continue;
                mpz_addmul(acc.get_mpz_t(), ai[i].get_mpz_t(), bi[k - i].get_mpz_t());
            }
            bi[k] = -acc * a0;
        }
        for (std::size_t k = 0; k < n; ++k) out[k] = Rational(bi[k]);
    } else {
        const Rational inv0 = 1 / cs[0];
        out[0] = inv0;
        Rational acc;
        for (std::size_t k = 1; k < n; ++k) {
            acc = 0;
            for (std::size_t i = 1; i <= k; ++i) {
                if (sgn(cs[i]) == 0) continue;
                acc += cs[i] * out[k - i];
            }
            out[k] = -acc * inv0;
        }
    }
    return QSeries(a.denom(), -a.valuation(), std::move(out),
                   -a.valuation() + static_cast<std::int64_t>(n));
}

QSeries pow(const QSeries& a, std::int64_t k) {
    if (k < 0) {
        if (a.is_zero()) throw ZeroSeries();
        return pow(invert(a), -k);
    }
    QSeries result = QSeries::monomial(Rational(1), 0, a.precision() - a.valuation(), a.denom());
    if (k == 0) return result;
    QSeries base = a;
    bool first = true;
    while (k > 0) {
        if (k & 1) {
            result = first ? base : result * base;
            first = false;
        }
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

QSeries rescale(const QSeries& a, std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("rescale factor must be positive");
    if (n == 1) return a;
    if (a.is_zero()) return QSeries::zero(a.precision() * n, a.denom());
    const auto cs = a.coefficients();
    std::vector<Rational> out(static_cast<std::size_t>((a.precision() - a.valuation()) * n));
    for (std::size_t k = 0; k < cs.size(); ++k) out[k * static_cast<std::size_t>(n)] = cs[k];
    return QSeries(a.denom(), a.valuation() * n, std::move(out), a.precision() * n);
}

QSeries euler_product(std::int64_t scale, std::int64_t prec) {
    if (scale <= 0) throw std::invalid_argument("euler_product scale must be positive");
    if (prec < 1) throw std::invalid_argument("euler_product precision must be at least 1");
    std::vector<Rational> cs(static_cast<std::size_t>(prec));
    // Generalized pentagonal numbers k(3k-1)/2 for k = 0, 1, -1, 2, -2, ...
    for (std::int64_t k = 0;; ++k) {
        bool any = false;
        for (const std::int64_t m : {k, -k}) {
            if (k == 0 && m != 0) continue;
            const std::int64_t e = scale * (m * (3 * m - 1) / 2);
            if (e < prec) {
                cs[static_cast<std::size_t>(e)] = (k % 2 == 0) ? 1 : -1;
                any = true;
            }
            if (k == 0) break;
        }
        if (!any) break;
    }
    return QSeries(1, 0, std::move(cs), prec);
}

std::optional<Rational> first_difference(const QSeries& a0, const QSeries& b0) {
    auto [a, b] = unify(a0, b0);
    const std::int64_t prec = std::min(a.precision(), b.precision());
    const std::int64_t start = std::min(a.valuation(), b.valuation());
    for (std::int64_t e = start; e < prec; ++e) {
        if (a.coefficient(e) != b.coefficient(e)) return ratio(e, a.denom());
    }
    return std::nullopt;
}

std::string to_string(const QSeries& s, SeriesFormat format) {
    std::ostringstream out;
    bool first = true;
    const auto cs = s.coefficients();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const Rational& c = cs[k];
        if (sgn(c) == 0) continue;
        const Rational e(s.valuation() + static_cast<std::int64_t>(k), s.denom());
        const bool negative = sgn(c) < 0;
        const Rational mag = abs(c);
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const bool constant = sgn(e) == 0;
        if (mag != 1 || constant) {
            if (format == SeriesFormat::Latex && mag.get_den() != 1) {
                out << "\\frac{" << mag.get_num().get_str() << "}{" << mag.get_den().get_str() << "}";
            } else {
                out << to_decimal(mag);
            }
            if (!constant && format == SeriesFormat::Plain) out << "*";
        }
        if (!constant) {
            out << "q";
            if (e != 1) out << "^" << exponent_text(e, format);
        }
    }
    const Rational p = s.precision_exponent();
    if (!first) out << " + ";
    out << "O(q^" << exponent_text(p, format) << ")";
    return out.str();
}

}  // namespace hauptmod
