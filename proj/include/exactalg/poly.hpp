#pragma once

#include <map>
#include <string>
#include <vector>

#include "exactalg/rational.hpp"

namespace exactalg {

// Sparse multivariate polynomial over Rational in variables x1..xn.
// Keys are exponent vectors of length nvars; zero coefficients are never
// stored (normalize() enforces this). nvars == 0 gives the constants.
struct PolyScalar {
    int nvars = 0;
    std::map<std::vector<int>, Rational> terms;

    static PolyScalar zero(int n);
    static PolyScalar constant(int n, const Rational& c);
    static PolyScalar variable(int n, int j);  // x_j, 1-based, 1 <= j <= n

    void normalize();
    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // 0 for the zero polynomial

    PolyScalar operator+(const PolyScalar& o) const;
    PolyScalar operator-(const PolyScalar& o) const;
    PolyScalar operator-() const;
    PolyScalar operator*(const PolyScalar& o) const;
    PolyScalar scale(const Rational& c) const;

    // Partial derivative with respect to x_j (1-based).
    PolyScalar derive(int j) const;

    bool operator==(const PolyScalar& o) const = default;

    std::string to_string() const;
};

}  // namespace exactalg
