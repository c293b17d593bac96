#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exactalg/cochain.hpp"
#include "exactalg/rational.hpp"
#include "hpl/module.hpp"
#include "liepair/model.hpp"
#include "liepair/moduleform.hpp"

namespace todd {

struct NotClosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPointCase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rational basis of the total-degree-d slice of a module over a point: pairs
// of a generator and an eta monomial. Throws NotPointCase when the ring has
// polynomial variables.
struct DegreeBasis {
    std::shared_ptr<const hpl::ModuleSpec> spec;
    int degree = 0;
    std::vector<std::pair<int, exactalg::ExtMonomial>> items;
    std::vector<std::string> names;

    // Coordinates of an element of this exact degree; throws
    // std::invalid_argument when a term lies outside the slice.
    std::vector<exactalg::Rational> coords(const hpl::ModuleElem& x) const;
};

DegreeBasis degree_basis(const std::shared_ptr<const hpl::ModuleSpec>& spec, int degree);

struct ExactnessResult {
    bool exact = false;
    hpl::ModuleElem witness;  // delta(witness) == z when exact
    // Otherwise: a functional on the degree basis of the first failing slice
    // that annihilates the image of delta but pairs nontrivially with z.
    std::vector<exactalg::Rational> obstruction;
    std::vector<std::string> obstruction_basis;
    int obstruction_degree = 0;
};

// Solve delta(xi) = z exactly over a point, slice by slice in total degree.
// Throws NotClosed when delta(z) != 0 and NotPointCase when the ring has
// polynomial variables.
ExactnessResult exactness_solve(const hpl::TableOp& delta, const hpl::ModuleElem& z);

// Exact CE cohomology dimensions over a point with coefficients in the tagged
// module (lambda_k selects the arity for alternating-form coefficients), for
// form degrees qlo..qhi. Throws NotPointCase when n > 0.
std::vector<std::size_t> ce_cohomology_dims(const liepair::LiePairModel& m,
                                            liepair::ModuleTag tag, int lambda_k, int qlo,
                                            int qhi);

}  // namespace todd
