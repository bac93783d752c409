#include "oracles.hpp"

#include "hauptmod/arith.hpp"
#include "hauptmod/cusps.hpp"

#include <gtest/gtest.h>

using namespace hauptmod;

namespace {

std::vector<std::string> names(const std::vector<Cusp>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

bool search(std::int64_t n, const Cusp& x, const Cusp& y) {
    return oracle::equivalent_by_search(n, x.numerator(), x.denominator(), y.numerator(), y.denominator());
}

}  // namespace

TEST(Cusp, Construction) {
    EXPECT_TRUE(Cusp().is_infinity());
    EXPECT_EQ(Cusp(-1, 0), Cusp::infinity());
    EXPECT_EQ(Cusp(2, 4), Cusp(1, 2));
    EXPECT_EQ(Cusp(1, -2), Cusp(-1, 2));
    EXPECT_EQ(Cusp(0, 5), Cusp(0, 1));
    EXPECT_THROW(Cusp(0, 0), std::invalid_argument);
    EXPECT_EQ(Cusp::parse("5/6"), Cusp(5, 6));
    EXPECT_EQ(Cusp::parse("inf"), Cusp());
    EXPECT_EQ(Cusp::parse("0"), Cusp(0, 1));
    EXPECT_EQ(Cusp(5, 6).to_string(), "5/6");
}

TEST(CuspSet, Level18) {
    EXPECT_EQ(names(cusp_set(18)),
              (std::vector<std::string>{"inf", "0", "1/2", "1/3", "2/3", "1/6", "5/6", "1/9"}));
}

TEST(CuspSet, Level36) {
    EXPECT_EQ(names(cusp_set(36)), (std::vector<std::string>{"inf", "0", "1/2", "1/3", "2/3", "1/4", "1/6",
                                                             "5/6", "1/9", "1/12", "5/12", "1/18"}));
}

TEST(CuspSet, Level1And54And90) {
    EXPECT_EQ(names(cusp_set(1)), std::vector<std::string>{"inf"});
    EXPECT_EQ(cusp_set(54).size(), 12u);
    // the published list for Gamma0(90), matched class by class
    std::vector<Cusp> printed = {Cusp(), Cusp(0, 1), Cusp(1, 2), Cusp(1, 3), Cusp(2, 3), Cusp(1, 6),
                                 Cusp(5, 6), Cusp(1, 9), Cusp(1, 18), Cusp(1, 5), Cusp(1, 10), Cusp(1, 15),
                                 Cusp(2, 15), Cusp(1, 30), Cusp(11, 30), Cusp(1, 45)};
    auto ours = cusp_set(90);
    ASSERT_EQ(ours.size(), 16u);
    for (const auto& x : printed) {
        int hits = 0;
        for (const auto& y : ours) hits += are_equivalent(90, x, y);
        EXPECT_EQ(hits, 1) << x.to_string();
    }
}

TEST(CuspSet, CountFormula) {
    for (std::int64_t n = 1; n <= 200; ++n) {
        std::int64_t want = 0;
        for (auto c : arith::divisors(n)) want += arith::euler_phi(std::gcd(c, n / c));
        ASSERT_EQ(static_cast<std::int64_t>(cusp_set(n).size()), want) << n;
        ASSERT_EQ(cusp_count(n), want) << n;
    }
}

TEST(CuspSet, WidthsSumToIndex) {
    for (std::int64_t n = 1; n <= 200; ++n) {
        std::int64_t total = 0;
        for (const auto& x : cusp_set(n)) total += width(n, x);
        ASSERT_EQ(total, arith::psi(n)) << n;
    }
}

TEST(CuspSet, PartitionProperty) {
    for (std::int64_t n = 1; n <= 60; ++n) {
        const auto reps = cusp_set(n);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t k = i + 1; k < reps.size(); ++k)
                ASSERT_FALSE(are_equivalent(n, reps[i], reps[k])) << n;
        for (std::int64_t c = 0; c <= 2 * n; ++c) {
            for (std::int64_t a = -2 * n; a <= 2 * n; ++a) {
                if (std::gcd(a, c) != 1) continue;
                Cusp x(a, c);
                int hits = 0;
                for (const auto& r : reps) hits += are_equivalent(n, x, r);
                ASSERT_EQ(hits, 1) << "N=" << n << " x=" << x.to_string();
            }
        }
    }
}

TEST(Equivalence, Examples) {
    EXPECT_FALSE(are_equivalent(18, Cusp(1, 2), Cusp(5, 6)));
    EXPECT_TRUE(are_equivalent(18, Cusp(5, 6), Cusp(5, 6)));
    EXPECT_TRUE(are_equivalent(18, Cusp(7, 2), Cusp(1, 2)));
    EXPECT_TRUE(are_equivalent(1, Cusp(0, 1), Cusp()));
}

TEST(Equivalence, AgreesWithExhaustiveSearch) {
    std::mt19937_64 rng(314159);
    for (int t = 0; t < 3000; ++t) {
        std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 60)(rng);
        auto draw = [&] {
            for (;;) {
                std::int64_t c = std::uniform_int_distribution<std::int64_t>(0, 3 * n)(rng);
                std::int64_t a = std::uniform_int_distribution<std::int64_t>(-3 * n, 3 * n)(rng);
                if (std::gcd(a, c) == 1) return Cusp(a, c);
            }
        };
        Cusp x = draw(), y = draw();
        bool want = search(n, x, y);
        ASSERT_EQ(are_equivalent(n, x, y), want) << n << " " << x.to_string() << " " << y.to_string();
    }
}

TEST(Equivalence, IsAnEquivalenceRelation) {
    std::mt19937_64 rng(2718);
    for (int t = 0; t < 2000; ++t) {
        std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 120)(rng);
        auto draw = [&] {
            for (;;) {
                std::int64_t c = std::uniform_int_distribution<std::int64_t>(0, 2 * n)(rng);
                std::int64_t a = std::uniform_int_distribution<std::int64_t>(-2 * n, 2 * n)(rng);
                if (std::gcd(a, c) == 1) return Cusp(a, c);
            }
        };
        // draw y and z from x's class often enough to exercise transitivity
        Cusp x = draw(), y = draw(), z = draw();
        ASSERT_TRUE(are_equivalent(n, x, x));
        ASSERT_EQ(are_equivalent(n, x, y), are_equivalent(n, y, x));
        if (are_equivalent(n, x, y) && are_equivalent(n, y, z)) ASSERT_TRUE(are_equivalent(n, x, z));
        Cusp cx = canonical(n, x);
        ASSERT_TRUE(are_equivalent(n, x, cx));
        ASSERT_EQ(canonical(n, cx), cx);
        ASSERT_EQ(are_equivalent(n, x, y), canonical(n, x) == canonical(n, y));
    }
}

TEST(Canonical, Examples) {
    EXPECT_EQ(canonical(18, Cusp(1, 20)), Cusp(1, 2));
    EXPECT_EQ(canonical(18, Cusp()), Cusp());
    EXPECT_EQ(canonical(18, Cusp(1, 18)), Cusp());
    EXPECT_EQ(canonical(18, Cusp(1, 4)), Cusp(1, 2));
}

TEST(Width, Examples) {
    EXPECT_EQ(width(18, Cusp()), 1);
    EXPECT_EQ(width(18, Cusp(0, 1)), 18);
    EXPECT_EQ(width(18, Cusp(1, 2)), 9);
    EXPECT_EQ(width(18, Cusp(1, 9)), 2);
}
