#include "hpl/contraction.hpp"

#include <utility>

namespace hpl {

using exactalg::CochainElem;
using exactalg::PolyScalar;

ModuleElem Contraction::projector(const ModuleElem& x) const {
    return x - delta.apply(h.apply(x)) - h.apply(delta.apply(x));
}

namespace {

// Generator together with a few ring multiples, to exercise coefficient
// bookkeeping when the ring is nontrivial.
std::vector<ModuleElem> axiom_samples(const std::shared_ptr<const ModuleSpec>& spec,
                                      int g) {
    std::vector<ModuleElem> out;
    const ModuleElem e = ModuleElem::gen(spec, g);
    out.push_back(e);
    if (spec->nvars >= 1) {
        const PolyScalar x1 = PolyScalar::variable(spec->nvars, 1);
        out.push_back(e.left_mul(CochainElem::from_poly(spec->netas, x1)));
    }
    if (spec->netas >= 1)
        out.push_back(e.left_mul(CochainElem::eta(spec->nvars, spec->netas, 1)));
    if (spec->netas >= 2) {
        const CochainElem e12 = CochainElem::eta(spec->nvars, spec->netas, 1) *
                                CochainElem::eta(spec->nvars, spec->netas, 2);
        out.push_back(e.left_mul(e12));
    }
    return out;
}

}  // namespace

std::vector<AxiomFailure> verify_contraction(const Contraction& c) {
    std::vector<AxiomFailure> failures;
    for (size_t g = 0; g < c.spec->gens.size(); ++g) {
        const std::string& name = c.spec->gens[g].name;
        for (const ModuleElem& x : axiom_samples(c.spec, static_cast<int>(g))) {
            auto record = [&](const char* axiom) {
                failures.push_back({axiom, name});
            };
            if (!c.delta.apply(c.delta.apply(x)).is_zero()) record("delta^2 = 0");
            if (!c.h.apply(c.h.apply(x)).is_zero()) record("h^2 = 0");
            if (!(c.h.apply(c.delta.apply(c.h.apply(x))) == c.h.apply(x)))
                record("h delta h = h");
            const ModuleElem px = c.projector(x);
            if (!c.projector(c.h.apply(x)).is_zero()) record("proj h = 0");
            if (!c.h.apply(px).is_zero()) record("h proj = 0");
            if (!(c.projector(px) == px)) record("proj idempotent");
        }
    }
    return failures;
}

namespace {

// Runs the shared geometric series for h_p and sigma_p on one element:
// z_0 = x, z_{k+1} = -partial(h(z_k)); h_p = sum h(z_k), sigma_p = sum proj(z_k).
struct SeriesResult {
    ModuleElem h_value;
    ModuleElem sigma_value;
};

SeriesResult run_series(const Contraction& base, const TableOp& partial,
                        const ModuleElem& x, int max_iter) {
    SeriesResult r{ModuleElem::zero(x.spec), ModuleElem::zero(x.spec)};
    ModuleElem z = x;
    for (int k = 0; k <= max_iter; ++k) {
        if (z.is_zero()) return r;
        r.h_value = r.h_value + base.h.apply(z);
        r.sigma_value = r.sigma_value + base.projector(z);
        z = partial.apply(base.h.apply(z)).negate();
    }
    throw NonNilpotent("perturbation series did not terminate within max_iter");
}

}  // namespace

ModuleElem PerturbedContraction::tau_p(const ModuleElem& v) const {
    ModuleElem out = ModuleElem::zero(v.spec);
    ModuleElem w = v;
    for (int k = 0; k <= max_iter; ++k) {
        if (w.is_zero()) return out;
        out = out + w;
        w = base.h.apply(partial.apply(w)).negate();
    }
    throw NonNilpotent("inclusion series did not terminate within max_iter");
}

ModuleElem PerturbedContraction::delta_p(const ModuleElem& v) const {
    ModuleElem out = base.delta.apply(v);
    ModuleElem w = v;
    for (int k = 0; k <= max_iter; ++k) {
        if (w.is_zero()) return out;
        out = out + base.projector(partial.apply(w));
        w = base.h.apply(partial.apply(w)).negate();
    }
    throw NonNilpotent("small differential series did not terminate within max_iter");
}

Contraction PerturbedContraction::as_contraction() const {
    return Contraction{base.spec, delta_full_op, h_op};
}

PerturbedContraction perturb(const Contraction& c, const TableOp& partial, int max_iter) {
    // Total differential and its square on generator samples.
    std::vector<ModuleElem> dtable;
    for (size_t g = 0; g < c.spec->gens.size(); ++g) {
        const ModuleElem e = ModuleElem::gen(c.spec, static_cast<int>(g));
        dtable.push_back(c.delta.apply(e) + partial.apply(e));
    }
    std::function<CochainElem(const CochainElem&)> full_ring;
    if (c.delta.leibniz && partial.leibniz) {
        auto d1 = c.delta.ring_diff;
        auto d2 = partial.ring_diff;
        full_ring = [d1, d2](const CochainElem& f) { return d1(f) + d2(f); };
    } else if (c.delta.leibniz) {
        full_ring = c.delta.ring_diff;
    } else if (partial.leibniz) {
        full_ring = partial.ring_diff;
    }
    TableOp dfull = full_ring
                        ? TableOp::leibniz_op(c.spec, 1, dtable, full_ring)
                        : TableOp::linear(c.spec, 1, dtable);

    for (size_t g = 0; g < c.spec->gens.size(); ++g) {
        const ModuleElem e = ModuleElem::gen(c.spec, static_cast<int>(g));
        std::vector<ModuleElem> samples = {e};
        if (c.spec->netas >= 1)
            samples.push_back(
                e.left_mul(CochainElem::eta(c.spec->nvars, c.spec->netas, 1)));
        for (const ModuleElem& s : samples)
            if (!dfull.apply(dfull.apply(s)).is_zero())
                throw NotAPerturbation("(delta + partial)^2 != 0 on generator " +
                                       c.spec->gens[g].name);
    }

    std::vector<ModuleElem> htable, stable;
    for (size_t g = 0; g < c.spec->gens.size(); ++g) {
        const SeriesResult r = run_series(
            c, partial, ModuleElem::gen(c.spec, static_cast<int>(g)), max_iter);
        htable.push_back(r.h_value);
        stable.push_back(r.sigma_value);
    }

    PerturbedContraction p;
    p.base = c;
    p.partial = partial;
    p.max_iter = max_iter;
    p.h_op = TableOp::linear(c.spec, -1, std::move(htable));
    p.sigma_op = TableOp::linear(c.spec, 0, std::move(stable));
    p.delta_full_op = std::move(dfull);
    return p;
}

}  // namespace hpl
