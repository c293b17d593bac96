#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "atiyah/atiyah.hpp"
#include "atiyah/connection.hpp"
#include "hpl/constructions.hpp"
#include "liepair/model.hpp"
#include "liepair/moduleform.hpp"

namespace todd {

enum class Side { pair, dgla };

// An alternating k-form on the fiber module with endomorphism values: an
// element of the tensor module Lambda^k(fiber dual) (x) End(fiber).
struct MultiHom {
    int k = 0;
    hpl::ModuleElem elem;
};

// The wedge-form calculus of one side of the comparison. The fiber complex is
// either the quotient frame with the Bott differential (pair side) or the
// pullback complex with its total differential and perturbed homotopy (dgla
// side); on top of it sit the dual module, the endomorphism module, and the
// exterior powers of the dual together with their tensor products with End.
struct World {
    liepair::LiePairModel model;
    Side side = Side::pair;
    atiyah::ConnectionTable table;

    hpl::Contraction fiber;
    hpl::HomContraction dual;  // Hom(fiber, unit line)
    hpl::HomContraction endo;  // End(fiber)
    std::vector<hpl::LambdaContraction> lam;      // k = 0..kmax
    std::vector<hpl::TensorContraction> lamend;   // Lambda^k (x) End, k = 0..kmax

    // Pullback-side machinery (null on the pair side).
    std::shared_ptr<atiyah::Setup> setup;

    // Exterior powers are tabulated through this arity.
    int kmax() const { return static_cast<int>(lam.size()) - 1; }
};

World make_world(const liepair::LiePairModel& m, const atiyah::ConnectionTable& t, Side side);

// Pair-side bridges between module-valued CE forms and their wedge-calculus
// representations.
hpl::ModuleElem b_form_elem(const World& w, const liepair::ModuleForm& f);
hpl::ModuleElem lambda_form_elem(const World& w, const liepair::ModuleForm& f);
MultiHom hom_form_multihom(const World& w, const liepair::ModuleForm& f);

// Endomorphism helpers.
hpl::ModuleElem end_identity(const World& w);
hpl::ModuleElem end_compose(const World& w, const hpl::ModuleElem& a, const hpl::ModuleElem& b);
// Supertrace with the fiber parity of the generators (even frame directions,
// odd shifted directions); on the pair side this is the ordinary trace.
exactalg::CochainElem str_end(const World& w, const hpl::ModuleElem& phi);

MultiHom identity_multihom(const World& w);
// The arity-one cocycle of the side: the pair cocycle of the stored table, or
// the one computed upstairs on the pullback complex.
MultiHom atiyah_multihom(const World& w);
// Graded product: wedge on the form legs, composition on the End legs.
MultiHom multihom_product(const World& w, const MultiHom& x, const MultiHom& y);
MultiHom wedge_end_power(const World& w, const MultiHom& theta, int k);
hpl::ModuleElem supertrace(const World& w, const MultiHom& phi);

// str(At^k) or tr(at^k); throws std::out_of_range for k < 0 or k > r and
// certifies closedness before returning.
hpl::ModuleElem scalar_class(const World& w, int k);
hpl::ModuleElem scalar_class(const liepair::LiePairModel& m, const atiyah::ConnectionTable& t,
                             Side side, int k);

// Truncated exponential exp(sum_m t_m scalar_class(m)) in the wedge algebra;
// returns the components of arity 0..K. K = -1 means the default K = r.
std::vector<hpl::ModuleElem> todd_cocycle(const World& w, int K = -1);
std::vector<hpl::ModuleElem> todd_cocycle(const liepair::LiePairModel& m,
                                          const atiyah::ConnectionTable& t, Side side,
                                          int K = -1);

// A degree-0 linear map between modules over the same coefficient ring,
// tabulated on the source generators.
struct CrossOp {
    std::shared_ptr<const hpl::ModuleSpec> src, dst;
    std::vector<hpl::ModuleElem> table;

    hpl::ModuleElem apply(const hpl::ModuleElem& x) const;
};

struct LambdaMaps {
    int k = 0;
    CrossOp T_lambda;       // pair -> dgla on arity-k forms
    CrossOp Pi_lambda;      // dgla -> pair
    hpl::TableOp H_lambda;  // homotopy on the dgla side
    CrossOp That;           // pair -> dgla on arity-k (x) End
};

LambdaMaps lambda_maps(const World& pairw, const World& dglaw, int k);
LambdaMaps lambda_maps(const liepair::LiePairModel& m, int k);

struct Certificate {
    std::string name;
    bool pass = true;
    std::vector<std::string> details;
};

// Exhaustive check that the supertrace commutes with the transfer on every
// generator pair of every arity up to r.
Certificate trace_lemma_check(const liepair::LiePairModel& m);

// Split into pieces of homogeneous total degree (generator degree plus
// coefficient eta-degree).
std::map<int, hpl::ModuleElem> degree_parts(const hpl::ModuleElem& x);

}  // namespace todd
