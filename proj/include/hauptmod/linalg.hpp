#pragma once

// Exact nullspace computation for integer matrices.
//
// Two independent routes:
//   * nullspace_exact: fraction-free (Bareiss) echelon form over Z followed by
//     rational back-substitution.
//   * kernel_multimodular: echelon form modulo word-size primes, Chinese
//     remaindering and rational reconstruction. The caller certifies the
//     reconstructed vector exactly; a prime with nullity 1 bounds the rational
//     nullity by 1, so a certified vector pins the nullspace down completely.

#include "hauptmod/series.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace hauptmod::linalg {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Row-major matrix of residues modulo a prime below 2^31.
class ModMatrix {
public:
    ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t prime)
        : rows_(rows), cols_(cols), prime_(prime), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint64_t prime() const noexcept { return prime_; }
    std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

private:
    std::size_t rows_, cols_;
    std::uint64_t prime_;
    std::vector<std::uint64_t> data_;
};

/// Basis of {x : M x = 0} over Q, each vector primitive in Z^cols with a
/// positive last nonzero entry.
std::vector<std::vector<BigInt>> nullspace_exact(const IntMatrix& m);

struct ModKernel {
    std::size_t nullity = 0;
    /// Column index of the last non-pivot column (valid when nullity >= 1).
    std::size_t free_column = 0;
    /// Kernel vector with entry free_column equal to 1 (filled when nullity == 1).
    std::vector<std::uint64_t> vector;
};

/// Kernel of a matrix over F_p by incremental row echelon form.
ModKernel kernel_mod_p(const ModMatrix& m);

/// Largest odd prime strictly below n (n > 3).
std::uint64_t prime_below(std::uint64_t n);

/// a/b with |a|, b <= sqrt(m/2) and a = u b mod m, if one exists.
std::optional<Rational> rational_reconstruct(const BigInt& u, const BigInt& m);

/// Clears denominators and content; the last nonzero entry is made positive.
std::vector<BigInt> primitive_vector(std::span<const Rational> v);

struct MultimodularResult {
    /// Smallest nullity seen modulo any prime; an upper bound for the
    /// rational nullity.
    std::size_t nullity = 0;
    /// Certified primitive kernel vector (empty unless nullity == 1).
    std::vector<BigInt> vector;
    std::size_t primes_used = 0;
};

struct MultimodularOptions {
    std::size_t max_primes = 200;
    /// Primes tried before a nullity > 1 is reported.
    std::size_t ambiguity_trials = 3;
};

/// `reduce(p)` returns the matrix modulo p; `certify(v)` checks a candidate
/// primitive vector exactly.
MultimodularResult kernel_multimodular(
    const std::function<ModMatrix(std::uint64_t)>& reduce,
    const std::function<bool(const std::vector<BigInt>&)>& certify,
    const MultimodularOptions& options = {});

}  // namespace hauptmod::linalg
