#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "exactalg/rational.hpp"

namespace exactalg {

// Dense exact matrix over Rational, row-major.
struct RatMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Rational> a;

    static RatMatrix zero(size_t r, size_t c);
    static RatMatrix identity(size_t n);

    Rational& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Rational& at(size_t i, size_t j) const { return a[i * cols + j]; }

    RatMatrix operator*(const RatMatrix& o) const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;
    bool operator==(const RatMatrix& o) const = default;
};

struct LinearSolution {
    std::vector<Rational> x;  // one solution of A x = b (free variables 0)
};

// Certificate that A x = b is unsolvable: a functional with y^T A = 0 and
// y^T b != 0.
struct LinearObstruction {
    std::vector<Rational> y;
};

// Exact Gaussian elimination with solution or certified obstruction.
std::variant<LinearSolution, LinearObstruction> solve_linear(const RatMatrix& A,
                                                             const std::vector<Rational>& b);

std::optional<RatMatrix> invert(const RatMatrix& A);

size_t rank(RatMatrix A);

}  // namespace exactalg
