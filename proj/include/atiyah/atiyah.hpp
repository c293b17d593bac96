#pragma once

#include "atiyah/connection.hpp"
#include "hpl/constructions.hpp"
#include "pidgla/picontext.hpp"

namespace atiyah {

// Everything the transfer computation needs for one model: the pullback
// complex with its perturbed contraction, the two-fold tensor square of that
// contraction, and the hom contraction from the square into the complex.
struct Setup {
    liepair::LiePairModel model;
    pidgla::PiContext ctx;
    hpl::PerturbedContraction pert;
    hpl::Contraction cw;        // (W, Q; h) after perturbation
    hpl::TensorContraction cww; // W (x) W
    hpl::HomContraction chom;   // Hom(W (x) W, W)
};

Setup make_setup(const liepair::LiePairModel& m);

// Defining formula of the cocycle on elements; `lam` must be homogeneous of
// total degree `lam_degree`.
hpl::ModuleElem at_apply(const Setup& s, const Connection& conn, const hpl::ModuleElem& lam,
                         int lam_degree, const hpl::ModuleElem& eps);

// The cocycle assembled as an element of the hom module, tabulated on
// generator pairs.
hpl::ModuleElem dgla_atiyah(const Setup& s, const Connection& conn);

// Evaluate a hom element on a pair of complex elements.
hpl::ModuleElem eval2(const Setup& s, const hpl::ModuleElem& theta, const hpl::ModuleElem& x,
                      const hpl::ModuleElem& y);

// Transfer maps between the hom module over the complex and hom-valued forms
// over the quotient: proj12 composes with the perturbed inclusion on both
// source slots and the quotient projection on the value; incl12 goes the
// other way.
liepair::ModuleForm proj12(const Setup& s, const hpl::ModuleElem& theta);
hpl::ModuleElem incl12(const Setup& s, const liepair::ModuleForm& th);

struct TheoremBResult {
    bool equal = false;
    liepair::ModuleForm transferred;
    liepair::ModuleForm pair_side;
    liepair::ModuleForm residual;
};

// Builds the connection for `t`, assembles the cocycle upstairs, transfers it
// down, and compares with the pair cocycle computed directly.
TheoremBResult compare_theoremB(const Setup& s, const ConnectionTable& t);

}  // namespace atiyah
