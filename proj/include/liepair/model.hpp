#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "exactalg/cochain.hpp"
#include "exactalg/poly.hpp"

namespace liepair {

struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Local model of an inclusion A < L of Lie algebroids over a polynomial chart
// R^n. The frame e_1..e_{r+r'} of L is adapted: the first r elements span A,
// the images of the last r' span the quotient B = L/A. All structure data
// are polynomial.
struct LiePairModel {
    std::string name;
    int n = 0;       // chart dimension (0 = point)
    int r = 0;       // rank of A
    int rprime = 0;  // rank of B

    // rho[i][j]: x_j-component of the anchor of e_{i+1} (0-based storage).
    std::vector<std::vector<exactalg::PolyScalar>> rho;
    // c[i][j][k]: coefficient of e_{k+1} in [e_{i+1}, e_{j+1}].
    std::vector<std::vector<std::vector<exactalg::PolyScalar>>> c;

    int rank_L() const { return r + rprime; }

    static LiePairModel zero_model(int n, int r, int rprime);

    const exactalg::PolyScalar& cijk(int i, int j, int k) const;
    const exactalg::PolyScalar& rho_comp(int i, int j) const;
    void set_c(int i, int j, int k, const exactalg::PolyScalar& v);
    // Sets c_ij^k = v and c_ji^k = -v in one go.
    void set_c_pair(int i, int j, int k, const exactalg::PolyScalar& v);
    void set_rho(int i, int j, const exactalg::PolyScalar& v);

    // Derivative of f along the anchor vector field of frame element e_i.
    exactalg::PolyScalar anchor_apply(int i, const exactalg::PolyScalar& f) const;
    exactalg::CochainElem anchor_apply(int i, const exactalg::CochainElem& f) const;
};

struct ValidationIssue {
    std::string invariant;     // antisymmetry | subalgebra-closure |
                               // anchor-compatibility | jacobi
    std::vector<int> indices;  // offending frame/coordinate indices (1-based)
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

// Checks the four structure equations: antisymmetry of c, closure of the
// A-A bracket inside A, anchor compatibility, and the Jacobi identity.
ValidationReport validate(const LiePairModel& m);

// Pair over a point: a Lie algebra of dimension r + rprime whose first r
// basis vectors span a subalgebra. Entries give c_ij^k for i < j; the
// antisymmetric mirror is filled in automatically. Throws ModelError if the
// data fail validation.
LiePairModel make_point_pair(
    int r, int rprime,
    const std::vector<std::tuple<int, int, int, exactalg::PolyScalar>>& entries,
    const std::string& name);

// Foliation chart R^n with leaves spanned by the first k coordinates:
// L = the tangent algebroid in the coordinate frame, A = the leafwise part.
LiePairModel make_foliation(int n, int k, const std::string& name = "");

// Lie algebra action: an r-dimensional Lie algebra with structure constants
// f[a][b][c] acting on R^n through polynomial vector fields
// fields[a] = sum_t fields[a][t] d/dx_t. L is the action algebroid
// g x R^n + T R^n with A = the action part; B has rank n. Throws ModelError
// when the fields do not represent the Lie algebra (bracket mismatch) or
// validation fails.
LiePairModel make_action(int n, int r,
                         const std::vector<std::vector<std::vector<exactalg::Rational>>>& f,
                         const std::vector<std::vector<exactalg::PolyScalar>>& fields,
                         const std::string& name);

}  // namespace liepair
