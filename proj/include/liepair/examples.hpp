#pragma once

#include "liepair/model.hpp"

namespace liepair::examples {

// The five bundled local models, built programmatically. The JSON files under
// models/ round-trip to exactly these.

LiePairModel abelian_pair();      // point, r = 1, r' = 1, everything zero
LiePairModel dim2_nonabelian();   // point, [e1,e2] = e2, A = <e1>
LiePairModel sl2_borel();         // point, sl2 with A = the Borel <h,e>
LiePairModel foliation_chart();   // R^2 foliated by x2 = const
LiePairModel gl1_action();        // gl1 acting on R by x d/dx

}  // namespace liepair::examples
