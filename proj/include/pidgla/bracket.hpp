#pragma once

#include <stdexcept>
#include <vector>

#include "pidgla/picontext.hpp"

namespace pidgla {

struct ConstraintViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A graded vector field on the base chart extended by the odd fiber
// directions: hor[j] is the coefficient of d/dx_{j+1}, vert[a] the
// coefficient of d/d(eta^{a+1}). The degree is the cohomological degree of
// the field (its coefficients live in CE degree `degree` for hor and
// `degree + 1` for vert).
struct VectorFieldA1 {
    int degree = 0;
    std::vector<exactalg::CochainElem> hor;
    std::vector<exactalg::CochainElem> vert;

    static VectorFieldA1 zero(int n, int r, int degree);
};

exactalg::CochainElem field_apply(const VectorFieldA1& z,
                                  const exactalg::CochainElem& f);
VectorFieldA1 field_commutator(const VectorFieldA1& z1,
                               const VectorFieldA1& z2);

// The CE differential as a graded vector field (degree 1).
VectorFieldA1 d_A_field(const liepair::LiePairModel& m);

// A degree-d section of the pullback algebroid in field form: an anchor
// field together with CE-coefficient components lsec[l-1] along the ambient
// frame e_l. The field's horizontal part must equal the anchor applied to
// lsec.
struct PairSection {
    int degree = 0;
    VectorFieldA1 field;
    std::vector<exactalg::CochainElem> lsec;
};

PairSection make_pair_section(const PiContext& ctx, const VectorFieldA1& field,
                              const std::vector<exactalg::CochainElem>& lsec,
                              int degree);

// Converts a module element of pure degree `degree` (coefficients times e_l
// in degree `degree`, coefficients times deta_l in degree `degree + 1`) into
// field form; the deta components become vertical coefficients.
PairSection pair_of(const PiContext& ctx, const hpl::ModuleElem& w,
                    int degree);

// Inverse bridge: rebuilds the module element. Throws ConstraintViolation if
// the horizontal part is not the anchor image of lsec.
hpl::ModuleElem section_of(const PiContext& ctx, const PairSection& ps);

// The degree-1 section implementing d_A itself (lsec_l = eta^l for l <= r).
PairSection d_section(const PiContext& ctx);

// Graded bracket of two sections:
//   field part: graded commutator,
//   frame part: Z1(l2_m) - (-1)^{d1 d2} Z2(l1_m) + sum_{i,j} l1_i l2_j c_ij^m.
PairSection pi_bracket(const liepair::LiePairModel& m, const PairSection& pa,
                       const PairSection& pb);

}  // namespace pidgla
