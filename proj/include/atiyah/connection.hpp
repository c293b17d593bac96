#pragma once

#include <string>
#include <vector>

#include "liepair/moduleform.hpp"
#include "pidgla/picontext.hpp"

namespace atiyah {

// Christoffel data for a connection on the pullback complex, stored against
// the adapted frame with polynomial entries:
//
//   g(i,j,k)    : nabla_{e_i} e_j       = sum_k g(i,j,k) e_k
//   g_la(i,j,k) : nabla_{e_i} deta_j    = sum_{k<=r} g_la(i,j,k) deta_k
//   g_al(i,j,k) : nabla_{deta_i} e_j    = sum_{k<=r} g_al(i,j,k) deta_k
//
// together with nabla_{deta_i} deta_j = 0. A table is admissible when the
// frame block extends the quotient representation of the subalgebroid:
// g(i,j,k) = c_ij^k for i <= r < j, k, and g(i,j,k) = 0 for j > r >= k. The
// remaining slots are free.
struct ConnectionTable {
    int n = 0, r = 0, rprime = 0;
    std::vector<exactalg::PolyScalar> gamma;     // rank^3
    std::vector<exactalg::PolyScalar> gamma_la;  // rank * r * r
    std::vector<exactalg::PolyScalar> gamma_al;  // r * rank * r

    int rank() const { return r + rprime; }

    const exactalg::PolyScalar& g(int i, int j, int k) const;
    const exactalg::PolyScalar& g_la(int i, int j, int k) const;
    const exactalg::PolyScalar& g_al(int i, int j, int k) const;
    void set_g(int i, int j, int k, const exactalg::PolyScalar& v);
    void set_g_la(int i, int j, int k, const exactalg::PolyScalar& v);
    void set_g_al(int i, int j, int k, const exactalg::PolyScalar& v);
};

// All-zero free slots; the forced frame block is filled from the model.
ConnectionTable default_table(const liepair::LiePairModel& m);

// Seeded draw with small polynomial entries in every free slot, including the
// two auxiliary tables. Deterministic in (model, seed).
ConnectionTable random_admissible(const liepair::LiePairModel& m, unsigned seed);

// Empty when the table has the right shape and its forced blocks match the
// structure functions; otherwise one message per violated slot.
std::vector<std::string> admissibility_issues(const liepair::LiePairModel& m,
                                              const ConnectionTable& t);

// The connection as an operator pair on module elements: coefficient action
// by the anchor on frame slots and by contraction on vertical slots, values
// on generators tabulated from the Christoffel data.
struct Connection {
    liepair::LiePairModel model;
    std::shared_ptr<const hpl::ModuleSpec> spec;
    ConnectionTable table;
    // cov[g][h] = nabla_{gen g} gen h.
    std::vector<std::vector<hpl::ModuleElem>> cov;

    // rho(gen g) applied to a ring element: horizontal derivation for frame
    // generators, interior product for vertical ones.
    exactalg::CochainElem coeff_action(int g, const exactalg::CochainElem& f) const;

    // nabla_lambda epsilon, linear over the ring in the first slot and a
    // derivation over the coefficient action in the second.
    hpl::ModuleElem apply(const hpl::ModuleElem& lambda, const hpl::ModuleElem& eps) const;
};

Connection make_connection(const pidgla::PiContext& ctx, const ConnectionTable& t);

// Quotient-side covariant derivative along e_l of a quotient-valued form.
liepair::ModuleForm pair_cov_B(const liepair::LiePairModel& m, const ConnectionTable& t,
                               int l, const liepair::ModuleForm& w);

// Coefficient of e_k in R(e_p, e_i) applied to the class of e_j, for the
// induced quotient connection; j, k range over the quotient frame.
exactalg::PolyScalar curvature_coeff(const liepair::LiePairModel& m, const ConnectionTable& t,
                                     int p, int i, int j, int k);

// The pair cocycle as a hom-valued one-form: slot {i,j,k} carries
// sum_p eta^p R(e_p, e_i)-coefficient of e_k on the class of e_j.
liepair::ModuleForm pair_atiyah(const liepair::LiePairModel& m, const ConnectionTable& t);

}  // namespace atiyah
