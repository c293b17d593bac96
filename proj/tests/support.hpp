#pragma once

// Shared helpers for the test suites: seeded random generators for exact
// polynomials and graded cochain elements, kept deliberately small so test
// values stay readable when something fails.

#include <random>
#include <vector>

#include "exactalg/cochain.hpp"
#include "exactalg/poly.hpp"

namespace testsupport {

using exactalg::CochainElem;
using exactalg::ExtMonomial;
using exactalg::PolyScalar;
using exactalg::Rational;

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

// Random polynomial in n variables, total degree <= 2, few terms.
inline PolyScalar random_poly(int n, std::mt19937& rng) {
    PolyScalar p = PolyScalar::zero(n);
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> expo(0, 2);
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        int budget = 2;
        for (int j = 0; j < n; ++j) {
            const int x = std::min(expo(rng), budget);
            e[static_cast<size_t>(j)] = x;
            budget -= x;
        }
        PolyScalar term = PolyScalar::zero(n);
        term.terms[e] = random_rational(rng);
        term.normalize();
        p = p + term;
    }
    return p;
}

// Random eta-monomial of the given size on indices 1..r (strictly increasing).
inline ExtMonomial random_monomial(int r, int size, std::mt19937& rng) {
    std::vector<int> all;
    for (int i = 1; i <= r; ++i) all.push_back(i);
    std::shuffle(all.begin(), all.end(), rng);
    ExtMonomial m(all.begin(), all.begin() + size);
    std::sort(m.begin(), m.end());
    return m;
}

// Random homogeneous cochain of eta-degree `deg`.
inline CochainElem random_homogeneous(int n, int r, int deg, std::mt19937& rng) {
    CochainElem out = CochainElem::zero(n, r);
    if (deg > r) return out;
    std::uniform_int_distribution<int> nterms(1, 2);
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        ExtMonomial m = random_monomial(r, deg, rng);
        out = out + CochainElem::monomial(n, r, m, random_poly(n, rng));
    }
    return out;
}

// Random cochain, possibly inhomogeneous.
inline CochainElem random_cochain(int n, int r, std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, r);
    CochainElem out = random_homogeneous(n, r, deg(rng), rng);
    out = out + random_homogeneous(n, r, deg(rng), rng);
    return out;
}

}  // namespace testsupport
