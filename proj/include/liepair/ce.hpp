#pragma once

#include "exactalg/cochain.hpp"
#include "liepair/model.hpp"

namespace liepair {

// Chevalley-Eilenberg differential of the subalgebroid A acting on
// CE cochains (polynomial coefficients, exterior eta variables):
//   d f = sum_{i<=r, j<=n} rho_i^j eta^i df/dx_j
//         - 1/2 sum_{i,j,k<=r} c_ij^k eta^i eta^j i_k(f).
// Squares to zero whenever the model validates.
exactalg::CochainElem ce_differential(const LiePairModel& m, const exactalg::CochainElem& f);

}  // namespace liepair
