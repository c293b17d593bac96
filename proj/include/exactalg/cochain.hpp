#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactalg/poly.hpp"

namespace exactalg {

struct NotHomogeneous : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strictly increasing list of eta indices (1-based); the empty list is the
// unit monomial.
using ExtMonomial = std::vector<int>;

// Sign produced when concatenating two increasing monomials and reordering
// into increasing order. Returns 0 when an index repeats; otherwise fills
// `out` and returns +1/-1 by inversion count.
int merge_sign(const ExtMonomial& a, const ExtMonomial& b, ExtMonomial& out);

// Element of the graded-commutative ring R = polynomial coefficients tensored
// with the exterior algebra on eta^1..eta^r. Keys are increasing eta
// monomials, values are nonzero polynomials in x1..xn. The eta-degree of a
// term is the monomial length; polynomials sit in degree zero.
struct CochainElem {
    int nvars = 0;
    int netas = 0;
    std::map<ExtMonomial, PolyScalar> terms;

    static CochainElem zero(int n, int r);
    static CochainElem unit(int n, int r);
    static CochainElem from_poly(int r, const PolyScalar& p);
    static CochainElem eta(int n, int r, int i);
    static CochainElem monomial(int n, int r, ExtMonomial m, const PolyScalar& p);

    void normalize();
    bool is_zero() const { return terms.empty(); }

    CochainElem operator+(const CochainElem& o) const;
    CochainElem operator-(const CochainElem& o) const;
    CochainElem operator-() const;
    CochainElem operator*(const CochainElem& o) const;  // graded ring product
    CochainElem scale(const Rational& c) const;

    // Coefficientwise d/dx_j (an even derivation of the ring).
    CochainElem poly_derive(int j) const;

    // Interior derivative contracting eta^k from the left (odd derivation).
    CochainElem int_derive(int k) const;

    std::map<int, CochainElem> homogeneous_parts() const;
    bool is_homogeneous() const;
    // Eta-degree of a homogeneous element; 0 for the zero element; throws
    // NotHomogeneous on mixed elements.
    int grade_of() const;

    bool operator==(const CochainElem& o) const = default;

    std::string to_string() const;
};

inline CochainElem ring_mul(const CochainElem& a, const CochainElem& b) { return a * b; }

}  // namespace exactalg
