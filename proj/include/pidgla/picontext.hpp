#pragma once

#include <stdexcept>

#include "hpl/contraction.hpp"
#include "hpl/module.hpp"
#include "liepair/model.hpp"
#include "liepair/moduleform.hpp"

namespace pidgla {

// The pullback complex of a Lie pair: a free module W over the CE ring with
// generators deta_1..deta_r in degree -1 and e_1..e_{r+r'} in degree 0,
// carrying the total differential Q (a derivation over the CE differential)
//   Q(deta_l) = sum_{i,k<=r} c_il^k eta^i deta_k + e_l
//   Q(e_l)    = 1/2 sum_{i,j,k<=r} rho_l(c_ij^k) eta^i eta^j deta_k
//               + sum_{i<=r, k} eta^i c_il^k e_k
// together with the split pair i_A (deta_l -> e_l) and p_A (e_l -> deta_l for
// l <= r), whose projector retains exactly the e_j with j > r.
struct PiContext {
    liepair::LiePairModel model;
    std::shared_ptr<const hpl::ModuleSpec> spec;
    hpl::TableOp Q;
    hpl::TableOp i_A;
    hpl::TableOp p_A;

    int deta_index(int l) const { return l - 1; }
    int e_index(int l) const { return model.r + l - 1; }

    // Bridges to coefficient forms valued in the quotient frame.
    hpl::ModuleElem i_B(const liepair::ModuleForm& omega) const;
    liepair::ModuleForm p_B(const hpl::ModuleElem& w) const;

    hpl::Contraction basic_contraction() const;
    // Q - i_A, the perturbation of the basic contraction whose total
    // differential is Q.
    hpl::TableOp perturbation() const;
};

PiContext make_pi_context(const liepair::LiePairModel& m);

struct ClosedFormMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Perturbs the basic contraction by Q - i_A and cross-checks every series
// against its closed form: h_p = p_A, sigma_p = i_B p_B, tau_p = id - p_A Q
// on the retained generators, and the small differential = the Bott
// derivative. Throws ClosedFormMismatch on any disagreement.
hpl::PerturbedContraction perturbed_pi_contraction(const PiContext& ctx);

}  // namespace pidgla
