#include "atiyah/connection.hpp"

#include <random>
#include <stdexcept>

namespace atiyah {

using exactalg::CochainElem;
using exactalg::PolyScalar;
using exactalg::Rational;
using hpl::ModuleElem;
using liepair::LiePairModel;
using liepair::ModuleForm;
using liepair::ModuleTag;

namespace {

int sign_pow(long e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

size_t idx3(int i, int j, int k, int dj, int dk) {
    return (static_cast<size_t>(i - 1) * static_cast<size_t>(dj) +
            static_cast<size_t>(j - 1)) *
               static_cast<size_t>(dk) +
           static_cast<size_t>(k - 1);
}

void check_range(int v, int lo, int hi, const char* what) {
    if (v < lo || v > hi) throw std::out_of_range(std::string(what) + ": index out of range");
}

}  // namespace

const PolyScalar& ConnectionTable::g(int i, int j, int k) const {
    check_range(i, 1, rank(), "ConnectionTable::g i");
    check_range(j, 1, rank(), "ConnectionTable::g j");
    check_range(k, 1, rank(), "ConnectionTable::g k");
    return gamma[idx3(i, j, k, rank(), rank())];
}

const PolyScalar& ConnectionTable::g_la(int i, int j, int k) const {
    check_range(i, 1, rank(), "ConnectionTable::g_la i");
    check_range(j, 1, r, "ConnectionTable::g_la j");
    check_range(k, 1, r, "ConnectionTable::g_la k");
    return gamma_la[idx3(i, j, k, r, r)];
}

const PolyScalar& ConnectionTable::g_al(int i, int j, int k) const {
    check_range(i, 1, r, "ConnectionTable::g_al i");
    check_range(j, 1, rank(), "ConnectionTable::g_al j");
    check_range(k, 1, r, "ConnectionTable::g_al k");
    return gamma_al[idx3(i, j, k, rank(), r)];
}

void ConnectionTable::set_g(int i, int j, int k, const PolyScalar& v) {
    check_range(i, 1, rank(), "ConnectionTable::set_g i");
    check_range(j, 1, rank(), "ConnectionTable::set_g j");
    check_range(k, 1, rank(), "ConnectionTable::set_g k");
    gamma[idx3(i, j, k, rank(), rank())] = v;
}

void ConnectionTable::set_g_la(int i, int j, int k, const PolyScalar& v) {
    check_range(i, 1, rank(), "ConnectionTable::set_g_la i");
    check_range(j, 1, r, "ConnectionTable::set_g_la j");
    check_range(k, 1, r, "ConnectionTable::set_g_la k");
    gamma_la[idx3(i, j, k, r, r)] = v;
}

void ConnectionTable::set_g_al(int i, int j, int k, const PolyScalar& v) {
    check_range(i, 1, r, "ConnectionTable::set_g_al i");
    check_range(j, 1, rank(), "ConnectionTable::set_g_al j");
    check_range(k, 1, r, "ConnectionTable::set_g_al k");
    gamma_al[idx3(i, j, k, rank(), r)] = v;
}

ConnectionTable default_table(const LiePairModel& m) {
    ConnectionTable t;
    t.n = m.n;
    t.r = m.r;
    t.rprime = m.rprime;
    const int rk = t.rank();
    const PolyScalar z = PolyScalar::zero(m.n);
    t.gamma.assign(static_cast<size_t>(rk) * rk * rk, z);
    t.gamma_la.assign(static_cast<size_t>(rk) * t.r * t.r, z);
    t.gamma_al.assign(static_cast<size_t>(t.r) * rk * t.r, z);
    for (int i = 1; i <= m.r; ++i)
        for (int j = m.r + 1; j <= rk; ++j)
            for (int k = m.r + 1; k <= rk; ++k) t.set_g(i, j, k, m.cijk(i, j, k));
    return t;
}

ConnectionTable random_admissible(const LiePairModel& m, unsigned seed) {
    ConnectionTable t = default_table(m);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    auto draw = [&]() {
        PolyScalar p = PolyScalar::constant(m.n, coeff(rng));
        if (m.n >= 1 && rng() % 3 == 0)
            p = p + PolyScalar::constant(m.n, coeff(rng)) *
                        PolyScalar::variable(m.n, 1 + static_cast<int>(rng() % m.n));
        return p;
    };
    const int rk = t.rank();
    for (int i = 1; i <= rk; ++i)
        for (int j = 1; j <= rk; ++j)
            for (int k = 1; k <= rk; ++k) {
                const bool forced = j > m.r && (k <= m.r || i <= m.r);
                if (!forced) t.set_g(i, j, k, draw());
            }
    for (int i = 1; i <= rk; ++i)
        for (int j = 1; j <= m.r; ++j)
            for (int k = 1; k <= m.r; ++k) t.set_g_la(i, j, k, draw());
    for (int i = 1; i <= m.r; ++i)
        for (int j = 1; j <= rk; ++j)
            for (int k = 1; k <= m.r; ++k) t.set_g_al(i, j, k, draw());
    return t;
}

std::vector<std::string> admissibility_issues(const LiePairModel& m, const ConnectionTable& t) {
    std::vector<std::string> issues;
    const int rk = m.rank_L();
    if (t.n != m.n || t.r != m.r || t.rprime != m.rprime ||
        t.gamma.size() != static_cast<size_t>(rk) * rk * rk ||
        t.gamma_la.size() != static_cast<size_t>(rk) * m.r * m.r ||
        t.gamma_al.size() != static_cast<size_t>(m.r) * rk * m.r) {
        issues.push_back("table shape does not match the model");
        return issues;
    }
    auto slot = [](int i, int j, int k) {
        return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
    };
    for (int i = 1; i <= rk; ++i)
        for (int j = m.r + 1; j <= rk; ++j)
            for (int k = 1; k <= rk; ++k) {
                if (k <= m.r) {
                    if (!t.g(i, j, k).is_zero())
                        issues.push_back("slot " + slot(i, j, k) +
                                         " must vanish to descend to the quotient");
                } else if (i <= m.r) {
                    if (!(t.g(i, j, k) - m.cijk(i, j, k)).is_zero())
                        issues.push_back("slot " + slot(i, j, k) +
                                         " must equal the structure function");
                }
            }
    return issues;
}

CochainElem Connection::coeff_action(int g, const CochainElem& f) const {
    if (g < model.r) return f.int_derive(g + 1);
    return model.anchor_apply(g - model.r + 1, f);
}

ModuleElem Connection::apply(const ModuleElem& lambda, const ModuleElem& eps) const {
    ModuleElem out = ModuleElem::zero(spec);
    for (const auto& [gl, fl] : lambda.comps) {
        const int par = ((spec->degree_of(gl) % 2) + 2) % 2;
        ModuleElem term = ModuleElem::zero(spec);
        for (const auto& [h, u] : eps.comps) {
            const CochainElem ru = coeff_action(gl, u);
            if (!ru.is_zero()) term = term + ModuleElem::gen(spec, h).left_mul(ru);
            const ModuleElem& cv = cov[static_cast<size_t>(gl)][static_cast<size_t>(h)];
            if (cv.is_zero()) continue;
            for (const auto& [d, part] : u.homogeneous_parts())
                term = term + cv.left_mul(part).scale(Rational(sign_pow(
                                  static_cast<long>(par) * static_cast<long>(d))));
        }
        out = out + term.left_mul(fl);
    }
    return out;
}

Connection make_connection(const pidgla::PiContext& ctx, const ConnectionTable& t) {
    const auto issues = admissibility_issues(ctx.model, t);
    if (!issues.empty())
        throw std::invalid_argument("make_connection: " + issues.front());
    Connection c;
    c.model = ctx.model;
    c.spec = ctx.spec;
    c.table = t;
    const LiePairModel& m = ctx.model;
    const int rk = m.rank_L();
    const size_t ngens = ctx.spec->gens.size();
    c.cov.assign(ngens, std::vector<ModuleElem>(ngens, ModuleElem::zero(ctx.spec)));
    auto deta = [&](int l) { return ModuleElem::gen(ctx.spec, ctx.deta_index(l)); };
    for (int i = 1; i <= rk; ++i) {
        const size_t gi = static_cast<size_t>(ctx.e_index(i));
        for (int j = 1; j <= rk; ++j) {
            ModuleElem v = ModuleElem::zero(ctx.spec);
            for (int k = 1; k <= rk; ++k) {
                const PolyScalar& p = t.g(i, j, k);
                if (!p.is_zero())
                    v = v + ModuleElem::gen(ctx.spec, ctx.e_index(k))
                                .left_mul(CochainElem::from_poly(m.r, p));
            }
            c.cov[gi][static_cast<size_t>(ctx.e_index(j))] = v;
        }
        for (int j = 1; j <= m.r; ++j) {
            ModuleElem v = ModuleElem::zero(ctx.spec);
            for (int k = 1; k <= m.r; ++k) {
                const PolyScalar& p = t.g_la(i, j, k);
                if (!p.is_zero())
                    v = v + deta(k).left_mul(CochainElem::from_poly(m.r, p));
            }
            c.cov[gi][static_cast<size_t>(ctx.deta_index(j))] = v;
        }
    }
    for (int a = 1; a <= m.r; ++a) {
        const size_t ga = static_cast<size_t>(ctx.deta_index(a));
        for (int j = 1; j <= rk; ++j) {
            ModuleElem v = ModuleElem::zero(ctx.spec);
            for (int k = 1; k <= m.r; ++k) {
                const PolyScalar& p = t.g_al(a, j, k);
                if (!p.is_zero())
                    v = v + deta(k).left_mul(CochainElem::from_poly(m.r, p));
            }
            c.cov[ga][static_cast<size_t>(ctx.e_index(j))] = v;
        }
    }
    return c;
}

ModuleForm pair_cov_B(const LiePairModel& m, const ConnectionTable& t, int l,
                      const ModuleForm& w) {
    if (w.tag != ModuleTag::B)
        throw std::invalid_argument("pair_cov_B: expected a quotient-valued form");
    ModuleForm out = ModuleForm::zero(ModuleTag::B, m);
    const int rk = m.rank_L();
    for (int j = m.r + 1; j <= rk; ++j) {
        const CochainElem f = w.comp({j});
        if (f.is_zero()) continue;
        const CochainElem rf = m.anchor_apply(l, f);
        if (!rf.is_zero()) out.comps[{j}] = out.comp({j}) + rf;
        for (int k = m.r + 1; k <= rk; ++k) {
            const PolyScalar& p = t.g(l, j, k);
            if (p.is_zero()) continue;
            out.comps[{k}] = out.comp({k}) + f * CochainElem::from_poly(m.r, p);
        }
    }
    for (auto it = out.comps.begin(); it != out.comps.end();)
        it = it->second.is_zero() ? out.comps.erase(it) : std::next(it);
    return out;
}

PolyScalar curvature_coeff(const LiePairModel& m, const ConnectionTable& t, int p, int i,
                           int j, int k) {
    const int rk = m.rank_L();
    PolyScalar out = m.anchor_apply(p, t.g(i, j, k)) - m.anchor_apply(i, t.g(p, j, k));
    for (int q = m.r + 1; q <= rk; ++q)
        out = out + t.g(i, j, q) * t.g(p, q, k) - t.g(p, j, q) * t.g(i, q, k);
    for (int q = 1; q <= rk; ++q) out = out - m.cijk(p, i, q) * t.g(q, j, k);
    return out;
}

ModuleForm pair_atiyah(const LiePairModel& m, const ConnectionTable& t) {
    ModuleForm out = ModuleForm::zero(ModuleTag::HomBBtoB, m);
    const int rk = m.rank_L();
    for (int i = m.r + 1; i <= rk; ++i)
        for (int j = m.r + 1; j <= rk; ++j)
            for (int k = m.r + 1; k <= rk; ++k) {
                CochainElem v = CochainElem::zero(m.n, m.r);
                for (int p = 1; p <= m.r; ++p) {
                    const PolyScalar c = curvature_coeff(m, t, p, i, j, k);
                    if (!c.is_zero()) v = v + CochainElem::monomial(m.n, m.r, {p}, c);
                }
                if (!v.is_zero()) out.comps[{i, j, k}] = v;
            }
    return out;
}

}  // namespace atiyah
