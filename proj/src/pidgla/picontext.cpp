#include "pidgla/picontext.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "liepair/ce.hpp"

namespace pidgla {

using exactalg::CochainElem;
using exactalg::PolyScalar;
using hpl::ModuleElem;
using hpl::TableOp;

namespace {

std::function<CochainElem(const CochainElem&)> ce_diff_of(
    const liepair::LiePairModel& m) {
    return [m](const CochainElem& f) { return liepair::ce_differential(m, f); };
}

}  // namespace

hpl::ModuleElem PiContext::i_B(const liepair::ModuleForm& omega) const {
    if (omega.tag != liepair::ModuleTag::B)
        throw std::invalid_argument("i_B expects a B-valued form");
    ModuleElem out = ModuleElem::zero(spec);
    for (const auto& [key, coeff] : omega.comps) {
        if (key.size() != 1)
            throw std::invalid_argument("malformed B-form component key");
        out = out + ModuleElem::gen(spec, e_index(key[0])).left_mul(coeff);
    }
    return out;
}

liepair::ModuleForm PiContext::p_B(const hpl::ModuleElem& w) const {
    liepair::ModuleForm out = liepair::ModuleForm::zero(liepair::ModuleTag::B, model);
    for (int j = model.r + 1; j <= model.rank_L(); ++j) {
        const CochainElem coeff = w.comp(e_index(j));
        if (!coeff.is_zero()) out.comps[{j}] = coeff;
    }
    return out;
}

hpl::Contraction PiContext::basic_contraction() const { return {spec, i_A, p_A}; }

hpl::TableOp PiContext::perturbation() const {
    std::vector<ModuleElem> table;
    table.reserve(spec->gens.size());
    for (size_t g = 0; g < spec->gens.size(); ++g)
        table.push_back(Q.table[g] - i_A.table[g]);
    return TableOp::leibniz_op(spec, 1, std::move(table), ce_diff_of(model));
}

PiContext make_pi_context(const liepair::LiePairModel& m) {
    PiContext ctx;
    ctx.model = m;

    std::vector<hpl::Generator> gens;
    for (int l = 1; l <= m.r; ++l)
        gens.push_back({"deta" + std::to_string(l), -1});
    for (int l = 1; l <= m.rank_L(); ++l)
        gens.push_back({"e" + std::to_string(l), 0});
    ctx.spec = hpl::make_spec(m.n, m.r, std::move(gens));

    const size_t ngens = ctx.spec->gens.size();
    std::vector<ModuleElem> q_table(ngens, ModuleElem::zero(ctx.spec));
    std::vector<ModuleElem> ia_table(ngens, ModuleElem::zero(ctx.spec));
    std::vector<ModuleElem> pa_table(ngens, ModuleElem::zero(ctx.spec));

    for (int l = 1; l <= m.r; ++l) {
        // i_A sends deta_l to e_l; p_A sends e_l back for l <= r.
        ia_table[static_cast<size_t>(ctx.deta_index(l))] =
            ModuleElem::gen(ctx.spec, ctx.e_index(l));
        pa_table[static_cast<size_t>(ctx.e_index(l))] =
            ModuleElem::gen(ctx.spec, ctx.deta_index(l));

        // Q(deta_l) = sum_{i,k <= r} c_il^k eta^i deta_k + e_l.
        ModuleElem q = ModuleElem::gen(ctx.spec, ctx.e_index(l));
        for (int i = 1; i <= m.r; ++i)
            for (int k = 1; k <= m.r; ++k) {
                const PolyScalar& cv = m.cijk(i, l, k);
                if (cv.is_zero()) continue;
                q = q + ModuleElem::gen(ctx.spec, ctx.deta_index(k))
                            .left_mul(CochainElem::monomial(m.n, m.r, {i}, cv));
            }
        q_table[static_cast<size_t>(ctx.deta_index(l))] = q;
    }

    for (int l = 1; l <= m.rank_L(); ++l) {
        // Q(e_l) = sum_{i<j<=r, k<=r} rho_l(c_ij^k) eta^i eta^j deta_k
        //          + sum_{i<=r, k} c_il^k eta^i e_k.
        ModuleElem q = ModuleElem::zero(ctx.spec);
        for (int i = 1; i <= m.r; ++i)
            for (int j = i + 1; j <= m.r; ++j)
                for (int k = 1; k <= m.r; ++k) {
                    const PolyScalar dc = m.anchor_apply(l, m.cijk(i, j, k));
                    if (dc.is_zero()) continue;
                    q = q + ModuleElem::gen(ctx.spec, ctx.deta_index(k))
                                .left_mul(CochainElem::monomial(m.n, m.r, {i, j}, dc));
                }
        for (int i = 1; i <= m.r; ++i)
            for (int k = 1; k <= m.rank_L(); ++k) {
                const PolyScalar& cv = m.cijk(i, l, k);
                if (cv.is_zero()) continue;
                q = q + ModuleElem::gen(ctx.spec, ctx.e_index(k))
                            .left_mul(CochainElem::monomial(m.n, m.r, {i}, cv));
            }
        q_table[static_cast<size_t>(ctx.e_index(l))] = q;
    }

    ctx.Q = TableOp::leibniz_op(ctx.spec, 1, std::move(q_table), ce_diff_of(m));
    ctx.i_A = TableOp::linear(ctx.spec, 1, std::move(ia_table));
    ctx.p_A = TableOp::linear(ctx.spec, -1, std::move(pa_table));
    return ctx;
}

hpl::PerturbedContraction perturbed_pi_contraction(const PiContext& ctx) {
    hpl::PerturbedContraction p =
        hpl::perturb(ctx.basic_contraction(), ctx.perturbation());
    const auto& m = ctx.model;

    for (size_t g = 0; g < ctx.spec->gens.size(); ++g) {
        const std::string& name = ctx.spec->gens[g].name;
        if (!(p.h_op.table[g] == ctx.p_A.table[g]))
            throw ClosedFormMismatch("perturbed homotopy differs from p_A on " + name);
        ModuleElem want = ModuleElem::zero(ctx.spec);
        if (static_cast<int>(g) >= ctx.e_index(m.r + 1))
            want = ModuleElem::gen(ctx.spec, static_cast<int>(g));
        if (!(p.sigma_op.table[g] == want))
            throw ClosedFormMismatch("perturbed retraction differs from p_B on " + name);
    }

    for (int j = m.r + 1; j <= m.rank_L(); ++j) {
        const ModuleElem ej = ModuleElem::gen(ctx.spec, ctx.e_index(j));
        const ModuleElem tau = p.tau_p(ej);
        const ModuleElem want = ej - ctx.p_A.apply(ctx.Q.apply(ej));
        if (!(tau == want))
            throw ClosedFormMismatch("perturbed inclusion differs from id - p_A Q on e" +
                                     std::to_string(j));

        liepair::ModuleForm omega =
            liepair::ModuleForm::zero(liepair::ModuleTag::B, m);
        omega.comps[{j}] = CochainElem::unit(m.n, m.r);
        const ModuleElem lhs = p.delta_p(ctx.i_B(omega));
        const ModuleElem rhs =
            ctx.i_B(liepair::module_covariant_derivative(m, omega));
        if (!(lhs == rhs))
            throw ClosedFormMismatch(
                "small differential differs from the Bott derivative on e" +
                std::to_string(j));
    }
    return p;
}

}  // namespace pidgla
