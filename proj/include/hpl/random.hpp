#pragma once

#include <vector>

#include "hpl/contraction.hpp"

namespace hpl {

// Seeded random contraction over the trivial ring (constant coefficients),
// built as a split normal form conjugated by a random unipotent
// degree-preserving change of basis. Generators carry a level marking that
// the random perturbation below respects.
struct RandomContraction {
    Contraction c;
    std::vector<int> levels;
};

RandomContraction make_random_contraction(unsigned seed);

// Degree +1 perturbation of the form phi delta phi^{-1} - delta with phi
// unipotent and strictly level-raising, so (delta + partial)^2 = 0 holds by
// construction and partial h is nilpotent.
TableOp make_random_perturbation(const RandomContraction& rc, unsigned seed);

}  // namespace hpl
