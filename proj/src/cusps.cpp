#include "hauptmod/cusps.hpp"

#include "hauptmod/arith.hpp"
#include "hauptmod/errors.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace hauptmod {

namespace {

void require_level(std::int64_t level) {
    if (level < 1) throw std::invalid_argument("level must be positive");
}

}  // namespace

Cusp::Cusp(std::int64_t a, std::int64_t c) {
    if (a == 0 && c == 0) throw std::invalid_argument("0/0 is not a cusp");
    if (c < 0) {
        a = -a;
        c = -c;
    }
    if (c == 0) {
        a_ = 1;
        c_ = 0;
        return;
    }
    const std::int64_t g = std::gcd(a, c);
    a_ = a / g;
    c_ = c / g;
}

std::string Cusp::to_string() const {
    if (c_ == 0) return "inf";
    if (c_ == 1) return std::to_string(a_);
    return std::to_string(a_) + "/" + std::to_string(c_);
}

Cusp Cusp::parse(const std::string& text) {
    if (text == "inf" || text == "oo" || text == "infinity") return Cusp::infinity();
    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
            throw BadSpec("malformed cusp '" + text + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Cusp(parse_int(text), 1);
    const std::string_view view(text);
    const std::int64_t a = parse_int(view.substr(0, slash));
    const std::int64_t c = parse_int(view.substr(slash + 1));
    if (a == 0 && c == 0) throw BadSpec("0/0 is not a cusp");
    return Cusp(a, c);
}

std::vector<Cusp> cusp_set(std::int64_t level) {
    require_level(level);
    std::vector<Cusp> out;
    out.push_back(Cusp::infinity());
    if (level == 1) return out;
    out.emplace_back(0, 1);
    for (const std::int64_t c : arith::divisors(level)) {
        if (c == 1 || c == level) continue;
        const std::int64_t g = std::gcd(c, level / c);
        for (std::int64_t t = 0; t < g; ++t) {
            if (std::gcd(t, g) != 1) continue;
            std::int64_t a = t == 0 ? g : t;
            while (std::gcd(a, c) != 1) a += g;
            out.emplace_back(a, c);
        }
    }
    return out;
}

std::int64_t cusp_count(std::int64_t level) {
    require_level(level);
    std::int64_t total = 0;
    for (const std::int64_t c : arith::divisors(level)) total += arith::euler_phi(std::gcd(c, level / c));
    return total;
}

bool are_equivalent(std::int64_t level, const Cusp& x, const Cusp& y) {
    require_level(level);
    if (level == 1) return true;
    const std::int64_t a = arith::mod(x.numerator(), level);
    const std::int64_t c = arith::mod(x.denominator(), level);
    const std::int64_t a2 = arith::mod(y.numerator(), level);
    const std::int64_t c2 = arith::mod(y.denominator(), level);
    // a' - s^-1 a must lie in the subgroup generated by c mod N, i.e. be a
    // multiple of gcd(c, N); this replaces the inner search over n.
    const std::int64_t step = std::gcd(c, level);
    for (std::int64_t s = 1; s < level; ++s) {
        if (std::gcd(s, level) != 1) continue;
        if (arith::mod(s * c, level) != c2) continue;
        const std::int64_t s_inv = arith::inverse_mod(s, level);
        if (arith::mod(a2 - s_inv * a, level) % step == 0) return true;
    }
    return false;
}

Cusp canonical(std::int64_t level, const Cusp& x) {
    for (const Cusp& rep : cusp_set(level)) {
        if (are_equivalent(level, x, rep)) return rep;
    }
    // Unreachable when cusp_set is a complete system of representatives.
    throw std::logic_error("cusp " + x.to_string() + " has no representative at level " +
                           std::to_string(level));
}

std::int64_t width(std::int64_t level, const Cusp& x) {
    require_level(level);
    const std::int64_t c = x.denominator() % level;
    return level / std::gcd(c * c % level, level);
}

}  // namespace hauptmod
