#include "pidgla/bracket.hpp"

#include <cstdlib>
#include <string>
#include <utility>

namespace pidgla {

using exactalg::CochainElem;
using exactalg::PolyScalar;
using hpl::ModuleElem;

namespace {

int parity(int d) { return ((d % 2) + 2) % 2; }

}  // namespace

VectorFieldA1 VectorFieldA1::zero(int n, int r, int degree) {
    VectorFieldA1 z;
    z.degree = degree;
    z.hor.assign(static_cast<size_t>(n), CochainElem::zero(n, r));
    z.vert.assign(static_cast<size_t>(r), CochainElem::zero(n, r));
    return z;
}

exactalg::CochainElem field_apply(const VectorFieldA1& z,
                                  const exactalg::CochainElem& f) {
    CochainElem out = CochainElem::zero(f.nvars, f.netas);
    for (size_t j = 0; j < z.hor.size(); ++j)
        out = out + z.hor[j] * f.poly_derive(static_cast<int>(j) + 1);
    for (size_t a = 0; a < z.vert.size(); ++a)
        out = out + z.vert[a] * f.int_derive(static_cast<int>(a) + 1);
    return out;
}

VectorFieldA1 field_commutator(const VectorFieldA1& z1, const VectorFieldA1& z2) {
    const int n = static_cast<int>(z1.hor.size());
    const int r = static_cast<int>(z1.vert.size());
    VectorFieldA1 out = VectorFieldA1::zero(n, r, z1.degree + z2.degree);
    // [Z1, Z2] = Z1 Z2 - (-1)^{p1 p2} Z2 Z1, read off on ring generators.
    const bool flip = parity(z1.degree) * parity(z2.degree) == 1;
    for (int j = 0; j < n; ++j) {
        CochainElem second = field_apply(z2, z1.hor[static_cast<size_t>(j)]);
        if (!flip) second = -second;
        out.hor[static_cast<size_t>(j)] =
            field_apply(z1, z2.hor[static_cast<size_t>(j)]) + second;
    }
    for (int a = 0; a < r; ++a) {
        CochainElem second = field_apply(z2, z1.vert[static_cast<size_t>(a)]);
        if (!flip) second = -second;
        out.vert[static_cast<size_t>(a)] =
            field_apply(z1, z2.vert[static_cast<size_t>(a)]) + second;
    }
    return out;
}

VectorFieldA1 d_A_field(const liepair::LiePairModel& m) {
    VectorFieldA1 z = VectorFieldA1::zero(m.n, m.r, 1);
    for (int j = 1; j <= m.n; ++j) {
        CochainElem h = CochainElem::zero(m.n, m.r);
        for (int i = 1; i <= m.r; ++i) {
            const PolyScalar& rij = m.rho_comp(i, j);
            if (!rij.is_zero()) h = h + CochainElem::monomial(m.n, m.r, {i}, rij);
        }
        z.hor[static_cast<size_t>(j - 1)] = h;
    }
    for (int a = 1; a <= m.r; ++a) {
        CochainElem v = CochainElem::zero(m.n, m.r);
        for (int i = 1; i <= m.r; ++i)
            for (int j = i + 1; j <= m.r; ++j) {
                const PolyScalar& cv = m.cijk(i, j, a);
                if (!cv.is_zero())
                    v = v - CochainElem::monomial(m.n, m.r, {i, j}, cv);
            }
        z.vert[static_cast<size_t>(a - 1)] = v;
    }
    return z;
}

PairSection make_pair_section(const PiContext& ctx, const VectorFieldA1& field,
                              const std::vector<exactalg::CochainElem>& lsec,
                              int degree) {
    const auto& m = ctx.model;
    if (static_cast<int>(field.hor.size()) != m.n ||
        static_cast<int>(field.vert.size()) != m.r ||
        static_cast<int>(lsec.size()) != m.rank_L())
        throw ConstraintViolation("section component sizes do not match the model");
    for (int j = 1; j <= m.n; ++j) {
        CochainElem want = CochainElem::zero(m.n, m.r);
        for (int l = 1; l <= m.rank_L(); ++l) {
            const PolyScalar& rlj = m.rho_comp(l, j);
            if (rlj.is_zero()) continue;
            want = want + lsec[static_cast<size_t>(l - 1)] *
                              CochainElem::from_poly(m.r, rlj);
        }
        if (!(field.hor[static_cast<size_t>(j - 1)] == want))
            throw ConstraintViolation(
                "horizontal part is not the anchor image of the frame part (x" +
                std::to_string(j) + ")");
    }
    PairSection ps;
    ps.degree = degree;
    ps.field = field;
    ps.lsec = lsec;
    return ps;
}

PairSection pair_of(const PiContext& ctx, const hpl::ModuleElem& w, int degree) {
    const auto& m = ctx.model;
    VectorFieldA1 field = VectorFieldA1::zero(m.n, m.r, degree);
    std::vector<CochainElem> lsec(static_cast<size_t>(m.rank_L()),
                                  CochainElem::zero(m.n, m.r));
    for (const auto& [g, f] : w.comps) {
        if (g < m.r) {
            field.vert[static_cast<size_t>(g)] = field.vert[static_cast<size_t>(g)] + f;
        } else {
            const int l = g - m.r + 1;
            lsec[static_cast<size_t>(l - 1)] = lsec[static_cast<size_t>(l - 1)] + f;
            for (int j = 1; j <= m.n; ++j) {
                const PolyScalar& rlj = m.rho_comp(l, j);
                if (rlj.is_zero()) continue;
                field.hor[static_cast<size_t>(j - 1)] =
                    field.hor[static_cast<size_t>(j - 1)] +
                    f * CochainElem::from_poly(m.r, rlj);
            }
        }
    }
    return make_pair_section(ctx, field, lsec, degree);
}

hpl::ModuleElem section_of(const PiContext& ctx, const PairSection& ps) {
    const auto& m = ctx.model;
    // Re-validate the anchor constraint before dropping the horizontal data.
    make_pair_section(ctx, ps.field, ps.lsec, ps.degree);
    ModuleElem out = ModuleElem::zero(ctx.spec);
    for (int l = 1; l <= m.rank_L(); ++l)
        out = out + ModuleElem::gen(ctx.spec, ctx.e_index(l))
                        .left_mul(ps.lsec[static_cast<size_t>(l - 1)]);
    for (int a = 1; a <= m.r; ++a)
        out = out + ModuleElem::gen(ctx.spec, ctx.deta_index(a))
                        .left_mul(ps.field.vert[static_cast<size_t>(a - 1)]);
    return out;
}

PairSection d_section(const PiContext& ctx) {
    const auto& m = ctx.model;
    std::vector<CochainElem> lsec(static_cast<size_t>(m.rank_L()),
                                  CochainElem::zero(m.n, m.r));
    for (int l = 1; l <= m.r; ++l)
        lsec[static_cast<size_t>(l - 1)] = CochainElem::eta(m.n, m.r, l);
    return make_pair_section(ctx, d_A_field(m), lsec, 1);
}

PairSection pi_bracket(const liepair::LiePairModel& m, const PairSection& pa,
                       const PairSection& pb) {
    const bool flip = parity(pa.degree) * parity(pb.degree) == 1;
    PairSection out;
    out.degree = pa.degree + pb.degree;
    out.field = field_commutator(pa.field, pb.field);
    out.lsec.assign(static_cast<size_t>(m.rank_L()), CochainElem::zero(m.n, m.r));
    for (int k = 1; k <= m.rank_L(); ++k) {
        CochainElem second = field_apply(pb.field, pa.lsec[static_cast<size_t>(k - 1)]);
        if (!flip) second = -second;
        CochainElem acc =
            field_apply(pa.field, pb.lsec[static_cast<size_t>(k - 1)]) + second;
        for (int i = 1; i <= m.rank_L(); ++i)
            for (int j = 1; j <= m.rank_L(); ++j) {
                const PolyScalar& cv = m.cijk(i, j, k);
                if (cv.is_zero()) continue;
                acc = acc + pa.lsec[static_cast<size_t>(i - 1)] *
                                pb.lsec[static_cast<size_t>(j - 1)] *
                                CochainElem::from_poly(m.r, cv);
            }
        out.lsec[static_cast<size_t>(k - 1)] = acc;
    }
    return out;
}

}  // namespace pidgla
