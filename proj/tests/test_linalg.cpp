#include "hauptmod/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hauptmod;
using namespace hauptmod::linalg;

namespace {

BigInt dot_row(const IntMatrix& m, std::size_t r, const std::vector<BigInt>& v) {
    BigInt s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
    return s;
}

bool annihilates(const IntMatrix& m, const std::vector<BigInt>& v) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (dot_row(m, r, v) != 0) return false;
    return true;
}

ModMatrix reduce(const IntMatrix& m, std::uint64_t p) {
    ModMatrix out(m.rows(), m.cols(), p);
    BigInt t;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            t = m(r, c) % BigInt(static_cast<unsigned long>(p));
            if (t < 0) t += static_cast<unsigned long>(p);
            out(r, c) = t.get_ui();
        }
    return out;
}

// rows x cols matrix whose kernel is (generically) spanned by k.
IntMatrix planted(std::mt19937_64& rng, std::size_t rows, const std::vector<BigInt>& k, std::size_t cols) {
    // random rows, each scaled and shifted along a pivot coordinate of k so
    // that row . k = 0; one kernel vector only
    std::uniform_int_distribution<int> d(-20, 20);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<BigInt> row(cols);
        for (auto& x : row) x = d(rng);
        std::size_t piv = 0;
        while (k[piv] == 0) ++piv;
        BigInt s = 0;
        for (std::size_t c = 0; c < cols; ++c) s += row[c] * k[c];
        for (std::size_t c = 0; c < cols; ++c) row[c] *= k[piv];
        row[piv] -= s;
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

}  // namespace

TEST(Exact, IdentityHasTrivialKernel) {
    IntMatrix m(3, 3);
    for (int i = 0; i < 3; ++i) m(i, i) = 1;
    EXPECT_TRUE(nullspace_exact(m).empty());
}

TEST(Exact, ZeroMatrixHasFullKernel) {
    IntMatrix m(2, 4);
    EXPECT_EQ(nullspace_exact(m).size(), 4u);
}

TEST(Exact, SmallExample) {
    IntMatrix m(2, 3);
    // x + 2y + 3z = 0, 4x + 5y + 6z = 0  ->  (1, -2, 1)
    m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3;
    m(1, 0) = 4, m(1, 1) = 5, m(1, 2) = 6;
    auto k = nullspace_exact(m);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], (std::vector<BigInt>{1, -2, 1}));
}

TEST(Exact, RecoversPlantedKernel) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 40; ++t) {
        std::size_t cols = 3 + t % 8;
        std::vector<BigInt> v(cols);
        for (auto& x : v) x = d(rng);
        v.back() = 1 + std::abs(d(rng));
        IntMatrix m = planted(rng, cols + 4, v, cols);
        auto k = nullspace_exact(m);
        ASSERT_EQ(k.size(), 1u);
        ASSERT_TRUE(annihilates(m, k[0]));
        // proportional to v
        for (std::size_t i = 0; i < cols; ++i)
            for (std::size_t j = 0; j < cols; ++j) ASSERT_EQ(k[0][i] * v[j], k[0][j] * v[i]);
    }
}

TEST(ModP, NullityCounts) {
    const std::uint64_t p = prime_below(1u << 28);
    ModMatrix id(4, 4, p);
    for (int i = 0; i < 4; ++i) id(i, i) = 1;
    EXPECT_EQ(kernel_mod_p(id).nullity, 0u);
    EXPECT_EQ(kernel_mod_p(ModMatrix(3, 5, p)).nullity, 5u);
}

TEST(ModP, PrimeBelow) {
    EXPECT_EQ(prime_below(10), 7u);
    EXPECT_EQ(prime_below(8), 7u);
    EXPECT_EQ(prime_below(1u << 28), 268435399u);
}

TEST(Reconstruct, RoundTrips) {
    std::mt19937_64 rng(9);
    BigInt m = BigInt(268435399) * BigInt(268435367);
    std::uniform_int_distribution<long> d(-50000, 50000);
    for (int t = 0; t < 200; ++t) {
        long a = d(rng), b = std::abs(d(rng)) + 1;
        Rational q(a, b);
        q.canonicalize();
        BigInt inv;
        BigInt den = q.get_den();
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
        BigInt u = (q.get_num() * inv) % m;
        if (u < 0) u += m;
        auto r = rational_reconstruct(u, m);
        ASSERT_TRUE(r.has_value());
        ASSERT_EQ(*r, q);
    }
}

TEST(Primitive, ClearsDenominatorsAndSign) {
    std::vector<Rational> v = {Rational(1, 2), Rational(-3, 4), Rational(0), Rational(-1, 6)};
    for (auto& x : v) x.canonicalize();
    auto p = primitive_vector(v);
    EXPECT_EQ(p, (std::vector<BigInt>{-6, 9, 0, 2}));
}

TEST(Multimodular, MatchesExactRoute) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> d(-1000, 1000);
    for (int t = 0; t < 20; ++t) {
        std::size_t cols = 4 + t % 10;
        std::vector<BigInt> v(cols);
        for (auto& x : v) x = BigInt(d(rng)) * d(rng) * d(rng);
        v.back() = 1 + std::abs(d(rng));
        IntMatrix m = planted(rng, cols + 3, v, cols);
        auto exact = nullspace_exact(m);
        ASSERT_EQ(exact.size(), 1u);
        auto mm = kernel_multimodular([&](std::uint64_t p) { return reduce(m, p); },
                                      [&](const std::vector<BigInt>& c) { return annihilates(m, c); });
        ASSERT_EQ(mm.nullity, 1u);
        ASSERT_EQ(mm.vector, exact[0]);
    }
}

TEST(Multimodular, ReportsAmbiguity) {
    // rows drawn from a rank-3 lattice in Z^5
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> d(-6, 6);
    const long base[3][5] = {{1, 0, 2, -1, 3}, {0, 1, 1, 4, -2}, {2, -1, 0, 1, 1}};
    IntMatrix m(8, 5);
    for (std::size_t r = 0; r < 8; ++r) {
        int k[3] = {d(rng), d(rng), d(rng)};
        for (std::size_t c = 0; c < 5; ++c) m(r, c) = k[0] * base[0][c] + k[1] * base[1][c] + k[2] * base[2][c];
    }
    EXPECT_EQ(nullspace_exact(m).size(), 2u);
    auto mm = kernel_multimodular([&](std::uint64_t p) { return reduce(m, p); },
                                  [&](const std::vector<BigInt>& c) { return annihilates(m, c); });
    EXPECT_EQ(mm.nullity, 2u);
    EXPECT_TRUE(mm.vector.empty());
}

TEST(Multimodular, ReportsEmptyKernel) {
    IntMatrix m(3, 3);
    m(0, 0) = 2, m(1, 1) = 3, m(2, 2) = 5, m(0, 2) = 7;
    auto mm = kernel_multimodular([&](std::uint64_t p) { return reduce(m, p); },
                                  [&](const std::vector<BigInt>& c) { return annihilates(m, c); });
    EXPECT_EQ(mm.nullity, 0u);
    EXPECT_TRUE(mm.vector.empty());
}
