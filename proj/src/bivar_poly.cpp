#include "hauptmod/bivar_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hauptmod {

BivarPoly::BivarPoly(std::map<Exponents, BigInt> coefficients) {
    for (auto& [e, c] : coefficients) {
        if (e.first < 0 || e.second < 0) throw std::invalid_argument("negative exponent in polynomial");
        if (sgn(c) != 0) coeffs_.emplace(e, std::move(c));
    }
}

BivarPoly BivarPoly::from_terms(const std::vector<std::tuple<int, int, long>>& terms) {
    std::map<Exponents, BigInt> m;
    for (const auto& [i, j, c] : terms) m[{i, j}] += c;
    return BivarPoly(std::move(m));
}

BigInt BivarPoly::coefficient(int i, int j) const {
    const auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

int BivarPoly::deg_x() const {
    int d = 0;
    for (const auto& [e, c] : coeffs_) d = std::max(d, e.first);
    return d;
}

int BivarPoly::deg_y() const {
    int d = 0;
    for (const auto& [e, c] : coeffs_) d = std::max(d, e.second);
    return d;
}

BigInt BivarPoly::content() const {
    BigInt g = 0;
    for (const auto& [e, c] : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

BivarPoly BivarPoly::normalized() const {
    if (is_zero()) return *this;
    const BigInt g = content();
    const int dx = deg_x();
    int sign = 1;
    // std::map orders by (i, j): the first key with i == dx has the least j.
    for (const auto& [e, c] : coeffs_) {
        if (e.first == dx) {
            sign = sgn(c);
            break;
        }
    }
    std::map<Exponents, BigInt> out;
    for (const auto& [e, c] : coeffs_) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        out.emplace(e, sign < 0 ? BigInt(-q) : q);
    }
    return BivarPoly(std::move(out));
}

BivarPoly BivarPoly::transposed() const {
    std::map<Exponents, BigInt> out;
    for (const auto& [e, c] : coeffs_) out.emplace(Exponents{e.second, e.first}, c);
    return BivarPoly(std::move(out));
}

BivarPoly BivarPoly::scaled(const BigInt& k) const {
    std::map<Exponents, BigInt> out;
    for (const auto& [e, c] : coeffs_) out.emplace(e, c * k);
    return BivarPoly(std::move(out));
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    auto out = a.coeffs_;
    for (const auto& [e, c] : b.coeffs_) out[e] += c;
    return BivarPoly(std::move(out));
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + b.scaled(-1); }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    std::map<BivarPoly::Exponents, BigInt> out;
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
        }
    }
    return BivarPoly(std::move(out));
}

std::string to_string(const BivarPoly& f, PolyFormat format) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<BivarPoly::Exponents, BigInt>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        return std::tie(x.first.second, x.first.first) < std::tie(y.first.second, y.first.first);
    });
    const bool latex = format == PolyFormat::Latex;
    auto power = [latex](char var, int e) {
        std::string s(1, var);
        if (e == 1) return s;
        const std::string digits = std::to_string(e);
        return s + "^" + (latex && digits.size() > 1 ? "{" + digits + "}" : digits);
    };
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        const bool negative = sgn(c) < 0;
        const BigInt mag = abs(c);
        if (first) {
            if (negative) out << "-";
        } else if (latex) {
            out << (negative ? "-" : "+");
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        if (mag != 1 || (e.first == 0 && e.second == 0)) factors.push_back(mag.get_str());
        if (e.first > 0) factors.push_back(power('X', e.first));
        if (e.second > 0) factors.push_back(power('Y', e.second));
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k > 0 && !latex) out << "*";
            out << factors[k];
        }
    }
    return out.str();
}

QSeries evaluate(const BivarPoly& f, const QSeries& x0, const QSeries& y0) {
    const std::int64_t h = std::lcm(x0.denom(), y0.denom());
    const QSeries x = x0.with_denom(h);
    const QSeries y = y0.with_denom(h);
    const std::int64_t prec = std::min(x.precision(), y.precision());
    const int dx = f.deg_x(), dy = f.deg_y();
    std::vector<QSeries> ypow;
    ypow.reserve(static_cast<std::size_t>(dy) + 1);
    ypow.push_back(QSeries::monomial(Rational(1), 0, prec, h));
    for (int j = 1; j <= dy; ++j) ypow.push_back(ypow.back() * y);

    std::vector<QSeries> rows(static_cast<std::size_t>(dx) + 1, QSeries::zero(prec, h));
    for (const auto& [e, c] : f.terms()) {
        auto& r = rows[static_cast<std::size_t>(e.first)];
        r = r + ypow[static_cast<std::size_t>(e.second)].scaled(Rational(c));
    }
    QSeries acc = rows[static_cast<std::size_t>(dx)];
    for (int i = dx - 1; i >= 0; --i) acc = acc * x + rows[static_cast<std::size_t>(i)];
    return acc;
}

BivarPoly kronecker_frame(int p) {
    return BivarPoly::from_terms({{p + 1, 0, 1}, {p, p, -1}, {1, 1, -1}, {0, p + 1, 1}});
}

}  // namespace hauptmod
