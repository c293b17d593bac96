#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hpl/module.hpp"

namespace hpl {

// Contraction data (W, delta; h): a differential of degree +1 and a homotopy
// of degree -1 on the same free module, subject to
//   delta^2 = 0,  h^2 = 0,  h delta h = h.
// The induced projector id - delta h - h delta is then idempotent and
// annihilates h from both sides; its image plays the role of the small
// subcomplex, with inclusion and retraction both realized inside W.
struct Contraction {
    std::shared_ptr<const ModuleSpec> spec;
    TableOp delta;
    TableOp h;

    ModuleElem projector(const ModuleElem& x) const;
};

struct AxiomFailure {
    std::string axiom;
    std::string generator;
};

// Checks the three defining identities and the derived projector identities
// on every generator, and on coefficient multiples of generators when the
// ring is nontrivial (exercising the Leibniz bookkeeping).
std::vector<AxiomFailure> verify_contraction(const Contraction& c);

struct NotAPerturbation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonNilpotent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Homological perturbation of a contraction by a degree +1 operator
// `partial` with (delta + partial)^2 = 0. The perturbed data are the sums
//   h_p     = sum_k h (-partial h)^k
//   sigma_p = sum_k proj (-partial h)^k          (retraction onto the small image)
//   tau_p   = sum_k (-h partial)^k               (inclusion; defined on the small image)
//   delta_p = delta + sum_k proj partial (-h partial)^k   (small differential)
// computed exactly; the series must terminate within `max_iter` applications
// or NonNilpotent is thrown. h_p and sigma_p are R-linear and are tabulated
// on generators at construction time.
struct PerturbedContraction {
    Contraction base;
    TableOp partial;
    int max_iter = 64;

    TableOp h_op;      // tabulated h_p, degree -1, linear
    TableOp sigma_op;  // tabulated sigma_p, degree 0, linear
    TableOp delta_full_op;

    ModuleElem delta_full(const ModuleElem& x) const { return delta_full_op.apply(x); }
    ModuleElem h_p(const ModuleElem& x) const { return h_op.apply(x); }
    ModuleElem sigma_p(const ModuleElem& x) const { return sigma_op.apply(x); }
    // The next two expect arguments in the small image (values of sigma_p).
    ModuleElem tau_p(const ModuleElem& v) const;
    ModuleElem delta_p(const ModuleElem& v) const;

    // The perturbed big complex (W, delta + partial; h_p) as a contraction.
    Contraction as_contraction() const;
};

PerturbedContraction perturb(const Contraction& c, const TableOp& partial,
                             int max_iter = 64);

}  // namespace hpl
