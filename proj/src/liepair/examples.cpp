#include "liepair/examples.hpp"

namespace liepair::examples {

using exactalg::PolyScalar;
using exactalg::Rational;

LiePairModel abelian_pair() { return make_point_pair(1, 1, {}, "abelian"); }

LiePairModel dim2_nonabelian() {
    return make_point_pair(1, 1, {{1, 2, 2, PolyScalar::constant(0, 1)}}, "dim2-nonabelian");
}

LiePairModel sl2_borel() {
    // Basis e1 = h, e2 = e, e3 = f with [h,e] = 2e, [h,f] = -2f, [e,f] = h;
    // A is the Borel subalgebra spanned by h, e.
    return make_point_pair(2, 1,
                           {{1, 2, 2, PolyScalar::constant(0, 2)},
                            {1, 3, 3, PolyScalar::constant(0, -2)},
                            {2, 3, 1, PolyScalar::constant(0, 1)}},
                           "sl2-borel");
}

LiePairModel foliation_chart() { return make_foliation(2, 1, "foliation-chart"); }

LiePairModel gl1_action() {
    std::vector<std::vector<std::vector<Rational>>> f(
        1, std::vector<std::vector<Rational>>(1, std::vector<Rational>(1, Rational(0))));
    std::vector<std::vector<PolyScalar>> fields = {{PolyScalar::variable(1, 1)}};
    return make_action(1, 1, f, fields, "gl1-action");
}

}  // namespace liepair::examples
