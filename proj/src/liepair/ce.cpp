#include "liepair/ce.hpp"

namespace liepair {

using exactalg::CochainElem;
using exactalg::Rational;

CochainElem ce_differential(const LiePairModel& m, const CochainElem& f) {
    CochainElem out = CochainElem::zero(f.nvars, f.netas);
    for (int i = 1; i <= m.r; ++i) {
        const CochainElem df = m.anchor_apply(i, f);
        if (!df.is_zero()) out = out + CochainElem::eta(f.nvars, f.netas, i) * df;
    }
    for (int i = 1; i <= m.r; ++i)
        for (int j = 1; j <= m.r; ++j) {
            if (i == j) continue;
            for (int k = 1; k <= m.r; ++k) {
                const auto& cc = m.cijk(i, j, k);
                if (cc.is_zero()) continue;
                CochainElem term = CochainElem::eta(f.nvars, f.netas, i) *
                                   CochainElem::eta(f.nvars, f.netas, j) * f.int_derive(k);
                term = term * CochainElem::from_poly(f.netas, cc);
                out = out - term.scale(Rational(1, 2));
            }
        }
    return out;
}

}  // namespace liepair
