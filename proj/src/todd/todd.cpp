#include "todd/todd.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "liepair/ce.hpp"
#include "todd/series.hpp"

namespace todd {

using exactalg::CochainElem;
using exactalg::PolyScalar;
using exactalg::Rational;
using hpl::Contraction;
using hpl::ModuleElem;
using hpl::TableOp;
using liepair::LiePairModel;
using liepair::ModuleForm;
using liepair::ModuleTag;

namespace {

int sign_pow(long e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

// The coefficient ring as a one-generator module in degree 0, with the CE
// differential acting on coefficients. Duals are hom modules into this line.
Contraction unit_contraction(const LiePairModel& m) {
    auto spec = hpl::make_spec(m.n, m.r, {{"1", 0}});
    TableOp delta = TableOp::leibniz_op(
        spec, 1, {ModuleElem::zero(spec)},
        [m](const CochainElem& f) { return liepair::ce_differential(m, f); });
    TableOp h = TableOp::linear(spec, -1, {ModuleElem::zero(spec)});
    return Contraction{spec, std::move(delta), std::move(h)};
}

// The quotient frame in degree 0 with the Bott differential and the trivial
// homotopy.
Contraction pair_fiber(const LiePairModel& m) {
    std::vector<hpl::Generator> gens;
    for (int j = m.r + 1; j <= m.rank_L(); ++j)
        gens.push_back({"eb" + std::to_string(j), 0});
    auto spec = hpl::make_spec(m.n, m.r, std::move(gens));
    std::vector<ModuleElem> table;
    for (int j = m.r + 1; j <= m.rank_L(); ++j) {
        ModuleElem v = ModuleElem::zero(spec);
        for (int a = 1; a <= m.r; ++a)
            for (int k = m.r + 1; k <= m.rank_L(); ++k) {
                const PolyScalar& c = m.cijk(a, j, k);
                if (c.is_zero()) continue;
                v = v + ModuleElem::gen(spec, k - m.r - 1)
                            .left_mul(CochainElem::monomial(m.n, m.r, {a}, c));
            }
        table.push_back(v);
    }
    TableOp delta = TableOp::leibniz_op(
        spec, 1, std::move(table),
        [m](const CochainElem& f) { return liepair::ce_differential(m, f); });
    TableOp h = TableOp::linear(
        spec, -1, std::vector<ModuleElem>(static_cast<size_t>(m.rprime), ModuleElem::zero(spec)));
    return Contraction{spec, std::move(delta), std::move(h)};
}

int fiber_gens(const World& w) { return static_cast<int>(w.fiber.spec->gens.size()); }

}  // namespace

World make_world(const LiePairModel& m, const atiyah::ConnectionTable& t, Side side) {
    World w;
    w.model = m;
    w.side = side;
    w.table = t;
    if (side == Side::dgla) {
        w.setup = std::make_shared<atiyah::Setup>(atiyah::make_setup(m));
        w.fiber = w.setup->cw;
    } else {
        w.fiber = pair_fiber(m);
    }
    const Contraction unit = unit_contraction(m);
    w.dual = hpl::hom_contraction(w.fiber, unit);
    w.endo = hpl::hom_contraction(w.fiber, w.fiber);
    const int kmax = std::max(m.r, 2);
    w.lam.reserve(static_cast<size_t>(kmax) + 1);
    w.lamend.reserve(static_cast<size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        w.lam.push_back(hpl::exterior_contraction(w.dual.c, k));
        w.lamend.push_back(hpl::tensor_contraction({&w.lam.back().c, &w.endo.c}));
    }
    return w;
}

ModuleElem b_form_elem(const World& w, const ModuleForm& f) {
    if (f.tag != ModuleTag::B) throw std::invalid_argument("b_form_elem: wrong module tag");
    ModuleElem out = ModuleElem::zero(w.fiber.spec);
    for (const auto& [key, c] : f.comps)
        out = out + ModuleElem::gen(w.fiber.spec, key[0] - w.model.r - 1).left_mul(c);
    return out;
}

ModuleElem lambda_form_elem(const World& w, const ModuleForm& f) {
    if (f.tag != ModuleTag::LambdaBDual)
        throw std::invalid_argument("lambda_form_elem: wrong module tag");
    if (f.lambda_k < 0 || f.lambda_k > w.kmax())
        throw std::out_of_range("lambda_form_elem: arity beyond tabulated range");
    const auto& idx = *w.lam[static_cast<size_t>(f.lambda_k)].index;
    ModuleElem out = ModuleElem::zero(idx.spec);
    for (const auto& [key, c] : f.comps) {
        std::vector<int> tuple;
        for (int j : key) tuple.push_back(j - w.model.r - 1);
        out = out + ModuleElem::gen(idx.spec, idx.gen_of(tuple)).left_mul(c);
    }
    return out;
}

MultiHom hom_form_multihom(const World& w, const ModuleForm& f) {
    if (f.tag != ModuleTag::HomBBtoB)
        throw std::invalid_argument("hom_form_multihom: wrong module tag");
    const auto& te = *w.lamend[1].index;
    const auto& lam1 = *w.lam[1].index;
    ModuleElem out = ModuleElem::zero(te.spec);
    for (const auto& [key, c] : f.comps) {
        const int lg = lam1.gen_of({key[0] - w.model.r - 1});
        const int eg = w.endo.index->gen_of(key[1] - w.model.r - 1, key[2] - w.model.r - 1);
        out = out + ModuleElem::gen(te.spec, te.gen_of({lg, eg})).left_mul(c);
    }
    return MultiHom{1, out};
}

ModuleElem end_identity(const World& w) {
    ModuleElem out = ModuleElem::zero(w.endo.index->spec);
    for (int g = 0; g < fiber_gens(w); ++g)
        out = out + ModuleElem::gen(w.endo.index->spec, w.endo.index->gen_of(g, g));
    return out;
}

ModuleElem end_compose(const World& w, const ModuleElem& a, const ModuleElem& b) {
    ModuleElem out = ModuleElem::zero(w.endo.index->spec);
    for (int s = 0; s < fiber_gens(w); ++s) {
        const ModuleElem v =
            w.endo.index->eval(a, w.endo.index->eval(b, ModuleElem::gen(w.fiber.spec, s)));
        for (const auto& [t, f] : v.comps)
            out = out + ModuleElem::gen(w.endo.index->spec, w.endo.index->gen_of(s, t)).left_mul(f);
    }
    return out;
}

CochainElem str_end(const World& w, const ModuleElem& phi) {
    CochainElem out = CochainElem::zero(w.model.n, w.model.r);
    for (const auto& [g, f] : phi.comps) {
        const auto [s, t] = w.endo.index->st_of(g);
        if (s != t) continue;
        out = out + (sign_pow(w.fiber.spec->degree_of(s)) == 1 ? f : -f);
    }
    return out;
}

MultiHom identity_multihom(const World& w) {
    const auto& te = *w.lamend[0].index;
    ModuleElem out = ModuleElem::zero(te.spec);
    for (int g = 0; g < fiber_gens(w); ++g)
        out = out + ModuleElem::gen(te.spec, te.gen_of({0, w.endo.index->gen_of(g, g)}));
    return MultiHom{0, out};
}

MultiHom atiyah_multihom(const World& w) {
    if (w.side == Side::pair)
        return hom_form_multihom(w, atiyah::pair_atiyah(w.model, w.table));

    const atiyah::Connection conn = atiyah::make_connection(w.setup->ctx, w.table);
    const ModuleElem theta = atiyah::dgla_atiyah(*w.setup, conn);
    // Reinterpret Hom(W (x) W, W) inside Lambda^1(W*) (x) End(W): the matrix
    // unit on the source pair (a, b) with value t maps to a* (x) E[b -> t]
    // with the Koszul sign (-1)^{|a| |E[b->t]|} of the natural isomorphism.
    const auto& te = *w.lamend[1].index;
    const auto& lam1 = *w.lam[1].index;
    ModuleElem out = ModuleElem::zero(te.spec);
    for (const auto& [g, f] : theta.comps) {
        const auto [src, t] = w.setup->chom.index->st_of(g);
        const auto& tup = w.setup->cww.index->tuple_of(src);
        const int a = tup[0], b = tup[1];
        const int sgn = sign_pow(static_cast<long>(w.fiber.spec->degree_of(a)) *
                                 (w.fiber.spec->degree_of(t) - w.fiber.spec->degree_of(b)));
        const int lg = lam1.gen_of({a});
        const int eg = w.endo.index->gen_of(b, t);
        out = out +
              ModuleElem::gen(te.spec, te.gen_of({lg, eg})).left_mul(f).scale(Rational(sgn));
    }
    return MultiHom{1, out};
}

MultiHom multihom_product(const World& w, const MultiHom& x, const MultiHom& y) {
    const int k = x.k + y.k;
    if (x.k < 0 || y.k < 0 || k > w.kmax())
        throw std::out_of_range("multihom_product: arity beyond tabulated range");
    const auto& tx = *w.lamend[static_cast<size_t>(x.k)].index;
    const auto& ty = *w.lamend[static_cast<size_t>(y.k)].index;
    const auto& to = *w.lamend[static_cast<size_t>(k)].index;
    const auto& lix = *w.lam[static_cast<size_t>(x.k)].index;
    const auto& liy = *w.lam[static_cast<size_t>(y.k)].index;
    const auto& lio = *w.lam[static_cast<size_t>(k)].index;

    ModuleElem out = ModuleElem::zero(to.spec);
    for (const auto& [gx, fx] : x.elem.comps) {
        const auto& tupx = tx.tuple_of(gx);
        const int Ax = tupx[0], Ex = tupx[1];
        const int degA = lix.spec->degree_of(Ax);
        const int degE = w.endo.index->spec->degree_of(Ex);
        const auto [sx, txv] = w.endo.index->st_of(Ex);
        for (const auto& [gy, fy] : y.elem.comps) {
            const auto& tupy = ty.tuple_of(gy);
            const int Ay = tupy[0], Ey = tupy[1];
            const auto [sy, tyv] = w.endo.index->st_of(Ey);
            if (sx != tyv) continue;  // compositions E_x o E_y need src(E_x) = dst(E_y)
            const int Eo = w.endo.index->gen_of(sy, txv);

            std::vector<int> word = lix.tuple_of(Ax);
            const auto& wy = liy.tuple_of(Ay);
            word.insert(word.end(), wy.begin(), wy.end());
            const auto [csgn, lg] = lio.canonical(std::move(word));
            if (csgn == 0) continue;

            const int degB = liy.spec->degree_of(Ay);
            const int target = to.gen_of({lg, Eo});
            // (f (A (x) E)) (g (B (x) F)): g crosses A (x) E, then E crosses B.
            for (const auto& [dg, part] : fy.homogeneous_parts()) {
                const int sgn = csgn * sign_pow(static_cast<long>(dg) * (degA + degE) +
                                                static_cast<long>(degE) * degB);
                out = out +
                      ModuleElem::gen(to.spec, target).left_mul(fx * part).scale(Rational(sgn));
            }
        }
    }
    return MultiHom{k, out};
}

MultiHom wedge_end_power(const World& w, const MultiHom& theta, int k) {
    if (k < 0 || theta.k * k > w.kmax())
        throw std::out_of_range("wedge_end_power: arity beyond tabulated range");
    MultiHom acc = identity_multihom(w);
    for (int i = 0; i < k; ++i) acc = multihom_product(w, acc, theta);
    return acc;
}

ModuleElem supertrace(const World& w, const MultiHom& phi) {
    if (phi.k < 0 || phi.k > w.kmax())
        throw std::out_of_range("supertrace: arity beyond tabulated range");
    const auto& te = *w.lamend[static_cast<size_t>(phi.k)].index;
    const auto& spec = w.lam[static_cast<size_t>(phi.k)].index->spec;
    ModuleElem out = ModuleElem::zero(spec);
    for (const auto& [g, f] : phi.elem.comps) {
        const auto& tup = te.tuple_of(g);
        const auto [s, t] = w.endo.index->st_of(tup[1]);
        if (s != t) continue;
        out = out + ModuleElem::gen(spec, tup[0])
                        .left_mul(f)
                        .scale(Rational(sign_pow(w.fiber.spec->degree_of(s))));
    }
    return out;
}

ModuleElem scalar_class(const World& w, int k) {
    if (k < 0 || k > w.model.r) throw std::out_of_range("scalar_class: arity out of range");
    const ModuleElem s = supertrace(w, wedge_end_power(w, atiyah_multihom(w), k));
    if (!w.lam[static_cast<size_t>(k)].c.delta.apply(s).is_zero())
        throw std::runtime_error("scalar_class: closedness certificate failed");
    return s;
}

ModuleElem scalar_class(const LiePairModel& m, const atiyah::ConnectionTable& t, Side side,
                        int k) {
    return scalar_class(make_world(m, t, side), k);
}

std::vector<ModuleElem> todd_cocycle(const World& w, int K) {
    if (K < 0) K = w.model.r;
    if (K > w.model.r) throw std::out_of_range("todd_cocycle: truncation beyond the rank");
    const Series ts = todd_log_series(K);

    auto zeros = [&] {
        std::vector<ModuleElem> v;
        for (int k = 0; k <= K; ++k)
            v.push_back(ModuleElem::zero(w.lam[static_cast<size_t>(k)].index->spec));
        return v;
    };

    // S = sum_m t_m str(At^m), arities 1..K.
    std::vector<ModuleElem> S = zeros();
    for (int k = 1; k <= K; ++k) S[static_cast<size_t>(k)] = scalar_class(w, k).scale(ts[static_cast<size_t>(k)]);

    // exp(S) = 1 + sum_j S^j / j!, truncated beyond arity K.
    std::vector<ModuleElem> result = zeros();
    const ModuleElem unit = ModuleElem::gen(w.lam[0].index->spec, 0);
    result[0] = unit;
    std::vector<ModuleElem> term = zeros();
    term[0] = unit;
    Rational invfact(1);
    for (int j = 1; j <= K; ++j) {
        std::vector<ModuleElem> next = zeros();
        for (int p = 0; p <= K; ++p) {
            if (term[static_cast<size_t>(p)].is_zero()) continue;
            for (int q = 1; p + q <= K; ++q) {
                if (S[static_cast<size_t>(q)].is_zero()) continue;
                next[static_cast<size_t>(p + q)] =
                    next[static_cast<size_t>(p + q)] +
                    hpl::lambda_wedge(*w.lam[static_cast<size_t>(p)].index,
                                      term[static_cast<size_t>(p)],
                                      *w.lam[static_cast<size_t>(q)].index,
                                      S[static_cast<size_t>(q)]);
            }
        }
        term = std::move(next);
        invfact /= j;
        for (int kk = 0; kk <= K; ++kk)
            result[static_cast<size_t>(kk)] =
                result[static_cast<size_t>(kk)] + term[static_cast<size_t>(kk)].scale(invfact);
    }
    return result;
}

std::vector<ModuleElem> todd_cocycle(const LiePairModel& m, const atiyah::ConnectionTable& t,
                                     Side side, int K) {
    return todd_cocycle(make_world(m, t, side), K);
}

ModuleElem CrossOp::apply(const ModuleElem& x) const {
    ModuleElem out = ModuleElem::zero(dst);
    for (const auto& [g, f] : x.comps) out = out + table[static_cast<size_t>(g)].left_mul(f);
    return out;
}

LambdaMaps lambda_maps(const World& pairw, const World& dglaw, int k) {
    if (pairw.side != Side::pair || dglaw.side != Side::dgla || !dglaw.setup)
        throw std::invalid_argument("lambda_maps: expects a pair world and a dgla world");
    if (k < 0 || k > pairw.kmax() || k > dglaw.kmax())
        throw std::out_of_range("lambda_maps: arity beyond tabulated range");

    const int r = pairw.model.r;
    const pidgla::PiContext& ctx = dglaw.setup->ctx;
    const hpl::PerturbedContraction& pert = dglaw.setup->pert;
    const int nfp = fiber_gens(pairw);
    const int nfd = fiber_gens(dglaw);

    LambdaMaps out;
    out.k = k;

    // Sections of the retained frame through the perturbed inclusion.
    std::vector<ModuleElem> tau;
    for (int j = 0; j < nfp; ++j)
        tau.push_back(pert.tau_p(ModuleElem::gen(dglaw.fiber.spec, ctx.e_index(r + 1 + j))));

    // Factor-level transfers of the dual modules: T sends the quotient dual
    // generators onto the retained frame duals, Pi pairs against the sections.
    std::vector<ModuleElem> pi_dual;
    for (int d = 0; d < nfd; ++d) {
        ModuleElem img = ModuleElem::zero(pairw.dual.index->spec);
        const ModuleElem F = ModuleElem::gen(dglaw.dual.index->spec, d);
        for (int j = 0; j < nfp; ++j) {
            const CochainElem c = dglaw.dual.index->eval(F, tau[static_cast<size_t>(j)]).comp(0);
            if (!c.is_zero())
                img = img + ModuleElem::gen(pairw.dual.index->spec, j).left_mul(c);
        }
        pi_dual.push_back(img);
    }

    const auto& pli = *pairw.lam[static_cast<size_t>(k)].index;
    const auto& dli = *dglaw.lam[static_cast<size_t>(k)].index;

    out.T_lambda = CrossOp{pli.spec, dli.spec, {}};
    for (const auto& tup : pli.tuples) {
        std::vector<int> up;
        for (int j : tup) up.push_back(ctx.e_index(r + 1 + j));
        out.T_lambda.table.push_back(ModuleElem::gen(dli.spec, dli.gen_of(up)));
    }

    out.Pi_lambda = CrossOp{dli.spec, pli.spec, {}};
    for (const auto& tup : dli.tuples) {
        if (k == 0) {
            out.Pi_lambda.table.push_back(ModuleElem::gen(pli.spec, 0));
            continue;
        }
        std::vector<ModuleElem> factors;
        for (int d : tup) factors.push_back(pi_dual[static_cast<size_t>(d)]);
        out.Pi_lambda.table.push_back(hpl::wedge_list(pli, factors));
    }

    out.H_lambda = dglaw.lam[static_cast<size_t>(k)].c.h;

    // Endomorphism transfer: push the quotient values through the section.
    std::vector<ModuleElem> tend;
    const int npe = static_cast<int>(pairw.endo.index->spec->gens.size());
    for (int eg = 0; eg < npe; ++eg) {
        const ModuleElem E = ModuleElem::gen(pairw.endo.index->spec, eg);
        ModuleElem img = ModuleElem::zero(dglaw.endo.index->spec);
        for (int b = 0; b < nfd; ++b) {
            const ModuleForm pb = ctx.p_B(ModuleElem::gen(dglaw.fiber.spec, b));
            if (pb.is_zero()) continue;
            const ModuleElem vpair = pairw.endo.index->eval(E, b_form_elem(pairw, pb));
            if (vpair.is_zero()) continue;
            ModuleForm vform = ModuleForm::zero(ModuleTag::B, pairw.model);
            for (const auto& [g, f] : vpair.comps) vform.comps[{r + 1 + g}] = f;
            const ModuleElem vb = pert.tau_p(ctx.i_B(vform));
            for (const auto& [t, f] : vb.comps)
                img = img + ModuleElem::gen(dglaw.endo.index->spec,
                                            dglaw.endo.index->gen_of(b, t))
                                .left_mul(f);
        }
        tend.push_back(img);
    }

    const auto& pte = *pairw.lamend[static_cast<size_t>(k)].index;
    const auto& dte = *dglaw.lamend[static_cast<size_t>(k)].index;
    out.That = CrossOp{pte.spec, dte.spec, {}};
    for (const auto& tup : pte.tuples)
        out.That.table.push_back(hpl::tensor_list(
            dte, {out.T_lambda.table[static_cast<size_t>(tup[0])],
                  tend[static_cast<size_t>(tup[1])]}));

    return out;
}

LambdaMaps lambda_maps(const LiePairModel& m, int k) {
    const atiyah::ConnectionTable t = atiyah::default_table(m);
    return lambda_maps(make_world(m, t, Side::pair), make_world(m, t, Side::dgla), k);
}

Certificate trace_lemma_check(const LiePairModel& m) {
    Certificate cert;
    cert.name = "trace-lemma";
    const atiyah::ConnectionTable t = atiyah::default_table(m);
    const World pw = make_world(m, t, Side::pair);
    const World dw = make_world(m, t, Side::dgla);
    for (int k = 0; k <= m.r; ++k) {
        const LambdaMaps maps = lambda_maps(pw, dw, k);
        const auto& spec = pw.lamend[static_cast<size_t>(k)].index->spec;
        size_t checked = 0;
        for (int g = 0; g < static_cast<int>(spec->gens.size()); ++g) {
            const ModuleElem x = ModuleElem::gen(spec, g);
            const ModuleElem lhs = supertrace(dw, MultiHom{k, maps.That.apply(x)});
            const ModuleElem rhs = maps.T_lambda.apply(supertrace(pw, MultiHom{k, x}));
            if (lhs == rhs) {
                ++checked;
            } else {
                cert.pass = false;
                cert.details.push_back("arity " + std::to_string(k) + ", generator " +
                                       spec->gens[static_cast<size_t>(g)].name +
                                       ": supertrace does not commute with the transfer");
            }
        }
        cert.details.push_back("arity " + std::to_string(k) + ": " + std::to_string(checked) +
                               " generator pairs verified");
    }
    return cert;
}

std::map<int, ModuleElem> degree_parts(const ModuleElem& x) {
    std::map<int, ModuleElem> out;
    for (const auto& [g, f] : x.comps) {
        const int base = x.spec->degree_of(g);
        for (const auto& [d, part] : f.homogeneous_parts()) {
            auto it = out.find(base + d);
            if (it == out.end())
                out.emplace(base + d, ModuleElem::gen(x.spec, g).left_mul(part));
            else
                it->second = it->second + ModuleElem::gen(x.spec, g).left_mul(part);
        }
    }
    return out;
}

}  // namespace todd
