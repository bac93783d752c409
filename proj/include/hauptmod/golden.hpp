#pragma once

// Reference modular equations of w(tau) for levels 2, 3, 5, 7, 11 and 13.
//
// Levels 2 and 3 are stored as flat coefficient lists. Prime levels p >= 5
// are stored in their published factored shape: the coefficients of the inner
// factor G in (X^p - Y)(X - Y^p) - p X Y G(X, Y).

#include <cstdint>
#include <string>
#include <vector>

namespace hauptmod::golden {

struct Term {
    int i;
    int j;
    long coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

enum class Form { Flat, KroneckerFrame };

struct Equation {
    std::int64_t level = 0;
    Form form = Form::Flat;
    std::vector<Term> terms;
    friend bool operator==(const Equation&, const Equation&) = default;
};

/// The six embedded reference equations, in increasing level.
const std::vector<Equation>& builtin_equations();

/// FNV-1a digest of a canonical text rendering, printed in reports.
std::string checksum(const std::vector<Equation>& equations);

}  // namespace hauptmod::golden
