#include "oracles.hpp"

#include "hauptmod/arith.hpp"
#include "hauptmod/errors.hpp"
#include "hauptmod/eta.hpp"

#include <gtest/gtest.h>

using namespace hauptmod;

namespace {

// Direct expansion: q^(sum d r / 24) times the multiplied-out products.
QSeries product_oracle(const EtaQuotient& f, std::int64_t prec) {
    std::int64_t shift24 = 0;
    for (const auto& [d, r] : f.exponents()) shift24 += d * r;
    std::int64_t terms = prec + 2 + std::max<std::int64_t>(0, -shift24 / 24);
    auto p = oracle::eta_product(f.exponents(), static_cast<std::size_t>(terms));
    std::vector<Rational> c(static_cast<std::size_t>(24 * terms), Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) c[24 * k] = Rational(p[k]);
    return QSeries(24, shift24, std::move(c));
}

::testing::AssertionResult agree_below(const QSeries& a, const QSeries& b, std::int64_t prec) {
    if (a.precision_exponent() < prec || b.precision_exponent() < prec)
        return ::testing::AssertionFailure() << "not enough precision";
    auto d = first_difference(a, b);
    if (d && *d < prec) return ::testing::AssertionFailure() << "differ at q^" << to_decimal(*d);
    return ::testing::AssertionSuccess();
}

EtaQuotient random_quotient(std::mt19937_64& rng, std::int64_t level) {
    std::map<std::int64_t, std::int64_t> e;
    std::uniform_int_distribution<int> r(-3, 3);
    for (auto d : arith::divisors(level)) e[d] = r(rng);
    return EtaQuotient(level, e);
}

}  // namespace

TEST(EtaQuotient, ConstructionAndParse) {
    EXPECT_THROW(EtaQuotient(18, {{5, 1}}), BadSpec);
    EtaQuotient f(18, {{1, 1}, {2, 0}});
    EXPECT_EQ(f.exponents().size(), 1u);
    EXPECT_EQ(EtaQuotient::parse("18; 1:1, 2:-2, 9:-1, 18:2"), named_w());
    EXPECT_EQ(EtaQuotient::parse("6;1:1,2:-2,3:-1,6:2"), named_X());
    EXPECT_THROW(EtaQuotient::parse("18; 1:"), BadSpec);
    EXPECT_THROW(EtaQuotient::parse("nonsense"), BadSpec);
    EXPECT_EQ(EtaQuotient::parse(named_w().to_string()), named_w());
}

TEST(EtaQuotient, Weight) {
    EXPECT_EQ(weight(named_w()), 0);
    EXPECT_EQ(weight(EtaQuotient(1, {{1, 24}})), 12);
    EXPECT_EQ(weight(EtaQuotient()), 0);
}

TEST(EtaQuotient, ModularityConditions) {
    EXPECT_TRUE(is_modular_function(named_w()));
    EXPECT_FALSE(is_modular_function(EtaQuotient(2, {{1, 1}, {2, -1}})));
    EXPECT_TRUE(is_modular_function(EtaQuotient()));
    EXPECT_FALSE(is_modular_function(named_X()));  // X alone is not invariant under Gamma0(6)
}

TEST(Expand, WMatchesPrintedPrefix) {
    QSeries w = expand(named_w(), 8);
    EXPECT_EQ(w.denom(), 1);
    const long want[] = {0, 1, -1, 1, -2, 3, -4, 5};
    for (int k = 0; k < 8; ++k) EXPECT_EQ(w.coefficient(k), want[k]) << "q^" << k;
    EXPECT_EQ(w.precision(), 8);
}

TEST(Expand, XHasQuarterValuation) {
    QSeries x = expand(named_X(), 10);
    EXPECT_EQ(x.denom(), 4);
    EXPECT_EQ(x.valuation_exponent(), Rational(1, 4));
}

TEST(Expand, TrivialQuotientIsOne) { EXPECT_EQ(expand(EtaQuotient(18, {}), 5), QSeries::one(5)); }

TEST(Expand, XMatchesDefiningProduct) {
    // q^(1/4) prod (1-q^(6n-1))(1-q^(6n-5)) / ((1-q^(6n-2))(1-q^(6n-4)))
    const std::size_t n = 52;
    oracle::Poly num(n, 0), den(n, 0);
    num[0] = den[0] = 1;
    auto times = [n](oracle::Poly& p, std::size_t m) {
        for (std::size_t e = n - 1; e >= m; --e) p[e] -= p[e - m];
    };
    for (std::size_t k = 1; 6 * k - 5 < n; ++k) {
        for (std::size_t m : {6 * k - 1, 6 * k - 5})
            if (m < n) times(num, m);
        for (std::size_t m : {6 * k - 2, 6 * k - 4})
            if (m < n) times(den, m);
    }
    oracle::Poly p = oracle::mul(num, oracle::inv(den, n), n);
    std::vector<Rational> c(4 * n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) c[4 * k] = Rational(p[k]);
    QSeries direct(4, 1, std::move(c));
    EXPECT_TRUE(agree_below(expand(named_X(), 50), direct, 50));
}

TEST(Expand, WIsXTimesXOfThreeTau) {
    QSeries x = expand(named_X(), 101);
    QSeries w = expand(named_w(), 100);
    EXPECT_TRUE(agree_below(x * rescale(x, 3), w, 100));
}

TEST(Expand, MatchesDirectProductOracle) {
    std::mt19937_64 rng(11);
    for (std::int64_t level : {1, 2, 6, 12, 18, 36}) {
        for (int t = 0; t < 6; ++t) {
            EtaQuotient f = random_quotient(rng, level);
            ASSERT_TRUE(agree_below(expand(f, 30), product_oracle(f, 30), 30)) << f.to_string();
        }
    }
}

TEST(Expand, IsAHomomorphism) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        EtaQuotient f = random_quotient(rng, 36);
        EtaQuotient g = random_quotient(rng, 36);
        QSeries lhs = expand(f * g, 40);
        QSeries rhs = expand(f, 60) * expand(g, 60);
        ASSERT_TRUE(agree_below(lhs, rhs, 40)) << f.to_string() << " * " << g.to_string();
        ASSERT_TRUE(agree_below(expand(f / g, 60) * expand(g, 60), expand(f, 60), 40));
    }
}

TEST(Expand, RescaleMatchesScaledQuotient) {
    QSeries w = expand(named_w(), 50);
    EXPECT_TRUE(agree_below(rescale(w, 2), expand(named_w().rescaled(2), 100), 100));
    std::mt19937_64 rng(13);
    for (int t = 0; t < 10; ++t) {
        EtaQuotient f = random_quotient(rng, 6);
        for (std::int64_t n : {2, 3, 5}) {
            ASSERT_TRUE(agree_below(rescale(expand(f, 20), n), expand(f.rescaled(n), 20 * n), 20 * n));
        }
    }
}

TEST(Expand, LiftingKeepsExpansion) {
    EXPECT_EQ(expand(named_w().lifted(90), 30), expand(named_w(), 30));
}

TEST(Order, Level18Table) {
    const EtaQuotient w = named_w();
    const std::vector<std::pair<Cusp, int>> table = {{Cusp(), 1},     {Cusp(0, 1), 0}, {Cusp(1, 2), -1},
                                                     {Cusp(1, 3), 0},  {Cusp(2, 3), 0}, {Cusp(1, 6), 0},
                                                     {Cusp(5, 6), 0},  {Cusp(1, 9), 0}};
    for (const auto& [x, ord] : table) EXPECT_EQ(order_at_cusp(w, x), ord) << x.to_string();
    auto div = divisor(w);
    ASSERT_EQ(div.size(), 8u);
    for (std::size_t i = 0; i < div.size(); ++i) {
        EXPECT_EQ(div[i].cusp, table[i].first);
        EXPECT_EQ(div[i].order, table[i].second);
    }
    EXPECT_EQ(total_pole_degree(w), 1);
    EXPECT_EQ(total_zero_degree(w), 1);
}

TEST(Order, PrimeLevelPoles) {
    EXPECT_EQ(order_at_cusp(named_w().lifted(90), Cusp(1, 2)), -5);
    EXPECT_EQ(order_at_cusp(named_w().rescaled(5), Cusp(1, 2)), -1);
    EXPECT_EQ(order_at_cusp(EtaQuotient(1, {{1, 24}}), Cusp()), 1);
    for (std::int64_t p : {5, 7, 11, 13}) {
        EXPECT_EQ(total_pole_degree(named_w().lifted(18 * p)), p + 1);
        EXPECT_EQ(total_pole_degree(named_w().rescaled(p)), p + 1);
    }
}

TEST(Order, Level54) {
    const EtaQuotient w = named_w().lifted(54);
    EXPECT_EQ(order_at_cusp(w, Cusp(1, 2)), -3);
    for (Cusp z : {Cusp(), Cusp(1, 18), Cusp(5, 18)}) EXPECT_EQ(order_at_cusp(w, z), 1) << z.to_string();
    EXPECT_EQ(total_pole_degree(w), 3);
    EXPECT_EQ(total_pole_degree(named_w().rescaled(3)), 3);
    for (const auto& co : divisor(EtaQuotient(54, {}))) EXPECT_EQ(co.order, 0);
}

TEST(Order, NotModularThrows) {
    EXPECT_THROW(divisor(EtaQuotient(2, {{1, 1}, {2, -1}})), NotModular);
    EXPECT_THROW(total_pole_degree(EtaQuotient(2, {{1, 1}, {2, -1}})), NotModular);
}

TEST(Order, OrderAtInfinityIsValuation) {
    std::mt19937_64 rng(17);
    for (std::int64_t level : {6, 12, 18, 36, 54}) {
        for (int t = 0; t < 8; ++t) {
            EtaQuotient f = random_quotient(rng, level);
            EXPECT_EQ(order_at_cusp(f, Cusp()), expand(f, 20).valuation_exponent()) << f.to_string();
        }
    }
}

TEST(Order, PoleZeroClass) {
    EXPECT_EQ(pole_zero_class(Cusp(1, 2)), PoleZero::Pole);
    EXPECT_EQ(pole_zero_class(Cusp(1, 18)), PoleZero::Zero);
    EXPECT_EQ(pole_zero_class(Cusp(1, 3)), PoleZero::Regular);
    EXPECT_EQ(pole_zero_class(Cusp()), PoleZero::Zero);
    EXPECT_EQ(pole_zero_class(Cusp(5, 34)), PoleZero::Pole);
    EXPECT_LT(order_at_cusp(named_w().lifted(306), Cusp(5, 34)), 0);
}

TEST(Order, PoleZeroClassMatchesLigozat) {
    for (std::int64_t n : {1, 2, 3, 5, 7, 11, 13}) {
        const std::int64_t level = 18 * n;
        const EtaQuotient w = named_w().lifted(level);
        for (const auto& x : cusp_set(level)) {
            Rational o = order_at_cusp(w, x);
            PoleZero want = o < 0 ? PoleZero::Pole : o > 0 ? PoleZero::Zero : PoleZero::Regular;
            EXPECT_EQ(pole_zero_class(x), want) << level << " " << x.to_string();
        }
    }
}

TEST(Order, DegreeBalance) {
    for (std::int64_t n : {1, 2, 3, 5, 7, 11, 13}) {
        EtaQuotient w = named_w().lifted(18 * n);
        EXPECT_EQ(total_pole_degree(w), total_zero_degree(w)) << n;
        EXPECT_EQ(total_pole_degree(w), arith::psi(18 * n) / arith::psi(18)) << n;
        EtaQuotient v = named_w().rescaled(n);
        EXPECT_EQ(total_pole_degree(v), total_zero_degree(v)) << n;
    }
}

TEST(NamedJ, PrintedPrefix) {
    QSeries j = named_j(3);
    EXPECT_EQ(j.valuation(), -1);
    EXPECT_EQ(j.coefficient(-1), 1);
    EXPECT_EQ(j.coefficient(0), 744);
    EXPECT_EQ(j.coefficient(1), 196884);
    EXPECT_EQ(j.coefficient(2), 21493760);
    EXPECT_EQ(j.precision(), 3);
}

TEST(NamedJ, E4Prefix) {
    QSeries e = eisenstein_e4(5);
    const long want[] = {1, 240, 2160, 6720, 17520};
    for (int k = 0; k < 5; ++k) EXPECT_EQ(e.coefficient(k), want[k]);
}
