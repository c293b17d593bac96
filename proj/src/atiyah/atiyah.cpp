#include "atiyah/atiyah.hpp"

#include <vector>

namespace atiyah {

using exactalg::CochainElem;
using exactalg::Rational;
using hpl::ModuleElem;
using liepair::LiePairModel;
using liepair::ModuleForm;
using liepair::ModuleTag;

Setup make_setup(const LiePairModel& m) {
    Setup s;
    s.model = m;
    s.ctx = pidgla::make_pi_context(m);
    s.pert = pidgla::perturbed_pi_contraction(s.ctx);
    s.cw = s.pert.as_contraction();
    s.cww = hpl::tensor_contraction({&s.cw, &s.cw});
    s.chom = hpl::hom_contraction(s.cww.c, s.cw);
    return s;
}

ModuleElem at_apply(const Setup& s, const Connection& conn, const ModuleElem& lam,
                    int lam_degree, const ModuleElem& eps) {
    const int sgn = ((lam_degree % 2) + 2) % 2 == 0 ? 1 : -1;
    return s.ctx.Q.apply(conn.apply(lam, eps)) - conn.apply(s.ctx.Q.apply(lam), eps) -
           conn.apply(lam, s.ctx.Q.apply(eps)).scale(Rational(sgn));
}

ModuleElem dgla_atiyah(const Setup& s, const Connection& conn) {
    ModuleElem out = ModuleElem::zero(s.chom.index->spec);
    const auto& tuples = s.cww.index->tuples;
    for (size_t ti = 0; ti < tuples.size(); ++ti) {
        const int a = tuples[ti][0];
        const int b = tuples[ti][1];
        const ModuleElem v =
            at_apply(s, conn, ModuleElem::gen(s.ctx.spec, a), s.ctx.spec->degree_of(a),
                     ModuleElem::gen(s.ctx.spec, b));
        for (const auto& [t, f] : v.comps)
            out = out + ModuleElem::gen(s.chom.index->spec,
                                        s.chom.index->gen_of(static_cast<int>(ti), t))
                            .left_mul(f);
    }
    return out;
}

ModuleElem eval2(const Setup& s, const ModuleElem& theta, const ModuleElem& x,
                 const ModuleElem& y) {
    return s.chom.index->eval(theta, hpl::tensor_list(*s.cww.index, {x, y}));
}

ModuleForm proj12(const Setup& s, const ModuleElem& theta) {
    const LiePairModel& m = s.model;
    ModuleForm out = ModuleForm::zero(ModuleTag::HomBBtoB, m);
    std::vector<ModuleElem> tau;
    for (int j = m.r + 1; j <= m.rank_L(); ++j)
        tau.push_back(s.pert.tau_p(ModuleElem::gen(s.ctx.spec, s.ctx.e_index(j))));
    for (int i = m.r + 1; i <= m.rank_L(); ++i)
        for (int j = m.r + 1; j <= m.rank_L(); ++j) {
            const ModuleForm v = s.ctx.p_B(eval2(
                s, theta, tau[static_cast<size_t>(i - m.r - 1)],
                tau[static_cast<size_t>(j - m.r - 1)]));
            for (const auto& [key, f] : v.comps)
                if (!f.is_zero()) out.comps[{i, j, key[0]}] = f;
        }
    return out;
}

ModuleElem incl12(const Setup& s, const ModuleForm& th) {
    const LiePairModel& m = s.model;
    ModuleElem out = ModuleElem::zero(s.chom.index->spec);
    for (int i = m.r + 1; i <= m.rank_L(); ++i)
        for (int j = m.r + 1; j <= m.rank_L(); ++j) {
            const int ti = s.cww.index->gen_of({s.ctx.e_index(i), s.ctx.e_index(j)});
            ModuleElem v = ModuleElem::zero(s.ctx.spec);
            for (int k = m.r + 1; k <= m.rank_L(); ++k) {
                const CochainElem f = th.comp({i, j, k});
                if (f.is_zero()) continue;
                v = v + s.pert.tau_p(ModuleElem::gen(s.ctx.spec, s.ctx.e_index(k)))
                            .left_mul(f);
            }
            for (const auto& [t, f] : v.comps)
                out = out +
                      ModuleElem::gen(s.chom.index->spec, s.chom.index->gen_of(ti, t))
                          .left_mul(f);
        }
    return out;
}

TheoremBResult compare_theoremB(const Setup& s, const ConnectionTable& t) {
    TheoremBResult res;
    const Connection conn = make_connection(s.ctx, t);
    res.transferred = proj12(s, dgla_atiyah(s, conn));
    res.pair_side = pair_atiyah(s.model, t);
    res.residual = res.transferred - res.pair_side;
    res.equal = res.residual.is_zero();
    return res;
}

}  // namespace atiyah
