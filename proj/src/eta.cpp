#include "hauptmod/eta.hpp"

#include "hauptmod/arith.hpp"
#include "hauptmod/errors.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hauptmod {

EtaQuotient::EtaQuotient(std::int64_t level, std::map<std::int64_t, std::int64_t> exponents)
    : level_(level) {
    if (level < 1) throw BadSpec("eta quotient level must be positive");
    for (const auto& [delta, r] : exponents) {
        if (delta < 1 || level % delta != 0) {
            throw BadSpec("eta index " + std::to_string(delta) + " does not divide level " +
                          std::to_string(level));
        }
        if (r != 0) exps_[delta] = r;
    }
}

std::int64_t EtaQuotient::exponent(std::int64_t delta) const {
    const auto it = exps_.find(delta);
    return it == exps_.end() ? 0 : it->second;
}

EtaQuotient EtaQuotient::lifted(std::int64_t new_level) const {
    if (new_level < 1 || new_level % level_ != 0) {
        throw BadSpec("cannot lift level " + std::to_string(level_) + " to " + std::to_string(new_level));
    }
    return EtaQuotient(new_level, exps_);
}

EtaQuotient EtaQuotient::rescaled(std::int64_t n) const {
    if (n < 1) throw std::invalid_argument("rescale factor must be positive");
    std::map<std::int64_t, std::int64_t> e;
    for (const auto& [delta, r] : exps_) e[delta * n] = r;
    return EtaQuotient(level_ * n, std::move(e));
}

EtaQuotient EtaQuotient::parse(const std::string& text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    auto to_int = [&](std::string_view s) {
        s = trim(s);
        std::int64_t v = 0;
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            throw BadSpec("malformed integer '" + std::string(s) + "' in quotient '" + text + "'");
        }
        return v;
    };
    const auto semi = text.find(';');
    if (semi == std::string::npos) throw BadSpec("quotient must look like 'N; d:r, ...': " + text);
    const std::int64_t level = to_int(std::string_view(text).substr(0, semi));
    std::map<std::int64_t, std::int64_t> exps;
    std::string_view rest = std::string_view(text).substr(semi + 1);
    while (!trim(rest).empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) throw BadSpec("expected 'd:r' in quotient '" + text + "'");
        const std::int64_t delta = to_int(item.substr(0, colon));
        if (exps.count(delta)) throw BadSpec("eta index repeated in quotient '" + text + "'");
        exps[delta] = to_int(item.substr(colon + 1));
    }
    return EtaQuotient(level, std::move(exps));
}

std::string EtaQuotient::to_string() const {
    std::ostringstream out;
    out << level_ << ";";
    bool first = true;
    for (const auto& [delta, r] : exps_) {
        out << (first ? " " : ", ") << delta << ":" << r;
        first = false;
    }
    return out.str();
}

EtaQuotient operator*(const EtaQuotient& f, const EtaQuotient& g) {
    const std::int64_t level = std::lcm(f.level_, g.level_);
    auto e = f.exps_;
    for (const auto& [delta, r] : g.exps_) e[delta] += r;
    return EtaQuotient(level, std::move(e));
}

EtaQuotient operator/(const EtaQuotient& f, const EtaQuotient& g) {
    auto inv = g.exps_;
    for (auto& [delta, r] : inv) r = -r;
    return f * EtaQuotient(g.level_, std::move(inv));
}

Rational weight(const EtaQuotient& f) {
    std::int64_t total = 0;
    for (const auto& [delta, r] : f.exponents()) total += r;
    return ratio(total, 2);
}

bool is_modular_function(const EtaQuotient& f) {
    if (weight(f) != 0) return false;
    std::int64_t at_inf = 0, at_zero = 0;
    for (const auto& [delta, r] : f.exponents()) {
        at_inf += delta * r;
        at_zero += (f.level() / delta) * r;
    }
    return at_inf % 24 == 0 && at_zero % 24 == 0;
}

QSeries expand(const EtaQuotient& f, std::int64_t prec) {
    if (prec < 1) throw std::invalid_argument("expansion precision must be at least 1");
    // q-prefactor sum(d r_d)/24, in units of 1/24.
    std::int64_t shift = 0;
    for (const auto& [delta, r] : f.exponents()) shift += delta * r;

    // Product part has integral exponents; it is needed to relative
    // precision prec - shift/24, rounded up.
    const std::int64_t rel = prec * 24 - shift;
    if (rel <= 0) return QSeries::zero(prec * 24, 24).normalized();
    const std::int64_t rel_q = (rel + 23) / 24;

    QSeries numer = QSeries::one(rel_q);
    QSeries denom = QSeries::one(rel_q);
    for (const auto& [delta, r] : f.exponents()) {
        const QSeries e = euler_product(delta, rel_q);
        if (r > 0) numer = numer * pow(e, r);
        else denom = denom * pow(e, -r);
    }
    QSeries body = numer * invert(denom);
    return body.with_denom(24).shifted(shift).truncated(prec * 24).normalized();
}

Rational order_at_cusp(const EtaQuotient& f, const Cusp& x) {
    const std::int64_t n = f.level();
    const Cusp rep = canonical(n, x);
    // Infinity is the class of 1/N.
    const std::int64_t d = rep.is_infinity() ? n : rep.denominator();
    const std::int64_t c = rep.is_infinity() ? 1 : rep.numerator();
    if (d < 1 || n % d != 0 || std::gcd(c, d) != 1) {
        throw CuspNotReduced("cusp " + x.to_string() + " does not reduce to c/d with d | " +
                             std::to_string(n));
    }
    Rational sum = 0;
    for (const auto& [delta, r] : f.exponents()) {
        const std::int64_t g = std::gcd(d, delta);
        sum += ratio(g * g * r, delta);
    }
    Rational order = ratio(n, 24 * d * std::gcd(d, n / d)) * sum;
    order.canonicalize();
    return order;
}

std::vector<CuspOrder> divisor(const EtaQuotient& f) {
    if (!is_modular_function(f)) {
        throw NotModular("eta quotient " + f.to_string() + " is not a modular function on Gamma0(" +
                         std::to_string(f.level()) + ")");
    }
    std::vector<CuspOrder> out;
    for (const Cusp& x : cusp_set(f.level())) {
        Rational ord = order_at_cusp(f, x);
        if (ord.get_den() != 1) {
            throw std::logic_error("non-integral order " + to_decimal(ord) + " at cusp " + x.to_string());
        }
        out.push_back({x, std::move(ord)});
    }
    return out;
}

std::int64_t total_pole_degree(const EtaQuotient& f) {
    std::int64_t total = 0;
    for (const auto& co : divisor(f)) {
        if (sgn(co.order) < 0) total -= co.order.get_num().get_si();
    }
    return total;
}

std::int64_t total_zero_degree(const EtaQuotient& f) {
    std::int64_t total = 0;
    for (const auto& co : divisor(f)) {
        if (sgn(co.order) > 0) total += co.order.get_num().get_si();
    }
    return total;
}

PoleZero pole_zero_class(const Cusp& x) {
    const std::int64_t c = x.denominator();
    if (c % 18 == 0) return PoleZero::Zero;
    const std::int64_t r = c % 6;
    if (r == 2 || r == 4) return PoleZero::Pole;
    return PoleZero::Regular;
}

EtaQuotient named_w() { return EtaQuotient(18, {{1, 1}, {2, -2}, {9, -1}, {18, 2}}); }

EtaQuotient named_X() { return EtaQuotient(6, {{1, 1}, {2, -2}, {3, -1}, {6, 2}}); }

QSeries eisenstein_e4(std::int64_t prec) {
    if (prec < 1) throw std::invalid_argument("precision must be at least 1");
    std::vector<BigInt> sigma3(static_cast<std::size_t>(prec));
    for (std::int64_t d = 1; d < prec; ++d) {
        const BigInt cube = BigInt(d) * d * d;
        for (std::int64_t m = d; m < prec; m += d) sigma3[static_cast<std::size_t>(m)] += cube;
    }
    std::vector<Rational> cs(static_cast<std::size_t>(prec));
    cs[0] = 1;
    for (std::int64_t m = 1; m < prec; ++m) cs[static_cast<std::size_t>(m)] = Rational(240 * sigma3[static_cast<std::size_t>(m)]);
    return QSeries(1, 0, std::move(cs), prec);
}

QSeries named_j(std::int64_t prec) {
    // E4^3 / (q prod (1-q^n)^24); the division by q costs one term.
    const std::int64_t n = std::max<std::int64_t>(prec + 1, 1);
    const QSeries e4 = eisenstein_e4(n);
    const QSeries delta_body = pow(euler_product(1, n), 24);
    return (pow(e4, 3) * invert(delta_body)).shifted(-1).truncated(prec);
}

}  // namespace hauptmod
