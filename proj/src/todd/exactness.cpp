#include "todd/exactness.hpp"

#include <bit>
#include <variant>

#include "exactalg/linsolve.hpp"
#include "todd/todd.hpp"

namespace todd {

using exactalg::CochainElem;
using exactalg::ExtMonomial;
using exactalg::PolyScalar;
using exactalg::RatMatrix;
using exactalg::Rational;
using hpl::ModuleElem;
using hpl::ModuleSpec;
using liepair::LiePairModel;
using liepair::ModuleForm;
using liepair::ModuleTag;

namespace {

void require_point(int nvars) {
    if (nvars != 0)
        throw NotPointCase("the module is infinite-dimensional over a polynomial chart");
}

std::string mono_name(const ExtMonomial& mono) {
    if (mono.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < mono.size(); ++i) {
        if (i > 0) s += "^";
        s += "eta" + std::to_string(mono[i]);
    }
    return s;
}

ModuleElem basis_elem(const DegreeBasis& basis, size_t i) {
    const auto& [g, mono] = basis.items[i];
    return ModuleElem::gen(basis.spec, g)
        .left_mul(CochainElem::monomial(basis.spec->nvars, basis.spec->netas, mono,
                                        PolyScalar::constant(basis.spec->nvars, 1)));
}

}  // namespace

std::vector<Rational> DegreeBasis::coords(const ModuleElem& x) const {
    std::vector<Rational> out(items.size(), Rational(0));
    for (const auto& [g, f] : x.comps)
        for (const auto& [mono, p] : f.terms) {
            bool found = false;
            for (size_t i = 0; i < items.size(); ++i)
                if (items[i].first == g && items[i].second == mono) {
                    out[i] = p.constant_value();
                    found = true;
                    break;
                }
            if (!found)
                throw std::invalid_argument("coords: element has a term outside the slice");
        }
    return out;
}

DegreeBasis degree_basis(const std::shared_ptr<const ModuleSpec>& spec, int degree) {
    require_point(spec->nvars);
    DegreeBasis basis;
    basis.spec = spec;
    basis.degree = degree;
    const int ne = spec->netas;
    for (int g = 0; g < static_cast<int>(spec->gens.size()); ++g) {
        const int need = degree - spec->degree_of(g);
        if (need < 0 || need > ne) continue;
        for (unsigned mask = 0; mask < (1u << ne); ++mask) {
            if (std::popcount(mask) != need) continue;
            ExtMonomial mono;
            for (int i = 0; i < ne; ++i)
                if (mask & (1u << i)) mono.push_back(i + 1);
            basis.items.emplace_back(g, mono);
            basis.names.push_back(spec->gens[static_cast<size_t>(g)].name + "@" +
                                  mono_name(mono));
        }
    }
    return basis;
}

ExactnessResult exactness_solve(const hpl::TableOp& delta, const ModuleElem& z) {
    require_point(delta.spec->nvars);
    ExactnessResult res;
    res.witness = ModuleElem::zero(delta.spec);
    if (z.is_zero()) {
        res.exact = true;
        return res;
    }
    if (!delta.apply(z).is_zero()) throw NotClosed("exactness_solve: input is not closed");

    res.exact = true;
    for (const auto& [d, zd] : degree_parts(z)) {
        const DegreeBasis src = degree_basis(delta.spec, d - 1);
        const DegreeBasis dst = degree_basis(delta.spec, d);
        const std::vector<Rational> b = dst.coords(zd);

        RatMatrix A = RatMatrix::zero(dst.items.size(), src.items.size());
        for (size_t j = 0; j < src.items.size(); ++j) {
            const std::vector<Rational> col = dst.coords(delta.apply(basis_elem(src, j)));
            for (size_t i = 0; i < col.size(); ++i) A.at(i, j) = col[i];
        }

        const auto sol = exactalg::solve_linear(A, b);
        if (const auto* ok = std::get_if<exactalg::LinearSolution>(&sol)) {
            for (size_t j = 0; j < src.items.size(); ++j)
                if (ok->x[j] != 0)
                    res.witness = res.witness + basis_elem(src, j).scale(ok->x[j]);
        } else {
            res.exact = false;
            res.witness = ModuleElem::zero(delta.spec);
            res.obstruction = std::get<exactalg::LinearObstruction>(sol).y;
            res.obstruction_basis = dst.names;
            res.obstruction_degree = d;
            return res;
        }
    }
    return res;
}

namespace {

// Flattened rational basis of the degree-q piece of the CE complex with
// coefficients in the tagged module, over a point.
struct FormBasis {
    std::vector<std::pair<std::vector<int>, ExtMonomial>> items;  // (module key, eta subset)
};

FormBasis form_basis(const std::vector<std::vector<int>>& keys, int r, int q) {
    FormBasis basis;
    if (q < 0 || q > r) return basis;
    for (const auto& key : keys)
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            if (std::popcount(mask) != q) continue;
            ExtMonomial mono;
            for (int i = 0; i < r; ++i)
                if (mask & (1u << i)) mono.push_back(i + 1);
            basis.items.emplace_back(key, mono);
        }
    return basis;
}

std::vector<Rational> form_coords(const FormBasis& basis, const ModuleForm& w) {
    std::vector<Rational> out(basis.items.size(), Rational(0));
    for (const auto& [key, v] : w.comps)
        for (const auto& [mono, p] : v.terms) {
            bool found = false;
            for (size_t i = 0; i < basis.items.size(); ++i)
                if (basis.items[i].first == key && basis.items[i].second == mono) {
                    out[i] = p.constant_value();
                    found = true;
                    break;
                }
            if (!found)
                throw std::invalid_argument("form_coords: term outside the degree slice");
        }
    return out;
}

}  // namespace

std::vector<std::size_t> ce_cohomology_dims(const LiePairModel& m, ModuleTag tag, int lambda_k,
                                            int qlo, int qhi) {
    require_point(m.n);
    if (qlo < 0 || qhi < qlo)
        throw std::invalid_argument("ce_cohomology_dims: bad degree range");

    std::vector<std::vector<int>> keys;
    switch (tag) {
        case ModuleTag::B:
            for (int k = m.r + 1; k <= m.rank_L(); ++k) keys.push_back({k});
            break;
        case ModuleTag::HomBBtoB:
            for (int i = m.r + 1; i <= m.rank_L(); ++i)
                for (int j = m.r + 1; j <= m.rank_L(); ++j)
                    for (int k = m.r + 1; k <= m.rank_L(); ++k) keys.push_back({i, j, k});
            break;
        case ModuleTag::LambdaBDual:
            keys = ModuleForm::zero_lambda(lambda_k, m).canonical_lambda_keys();
            break;
    }

    auto blank = [&] {
        return tag == ModuleTag::LambdaBDual ? ModuleForm::zero_lambda(lambda_k, m)
                                             : ModuleForm::zero(tag, m);
    };

    // Matrix of the covariant derivative C^q -> C^{q+1} in the flat bases.
    auto matrix_of = [&](int q, const FormBasis& bq, const FormBasis& bq1) {
        RatMatrix M = RatMatrix::zero(bq1.items.size(), bq.items.size());
        (void)q;
        for (size_t j = 0; j < bq.items.size(); ++j) {
            ModuleForm w = blank();
            w.comps[bq.items[j].first] = CochainElem::monomial(
                m.n, m.r, bq.items[j].second, PolyScalar::constant(m.n, 1));
            const std::vector<Rational> col =
                form_coords(bq1, liepair::module_covariant_derivative(m, w));
            for (size_t i = 0; i < col.size(); ++i) M.at(i, j) = col[i];
        }
        return M;
    };

    std::vector<std::size_t> dims;
    FormBasis below = form_basis(keys, m.r, qlo - 1);
    FormBasis cur = form_basis(keys, m.r, qlo);
    std::size_t rank_below = exactalg::rank(matrix_of(qlo - 1, below, cur));
    for (int q = qlo; q <= qhi; ++q) {
        FormBasis next = form_basis(keys, m.r, q + 1);
        const std::size_t rank_cur = exactalg::rank(matrix_of(q, cur, next));
        dims.push_back(cur.items.size() - rank_cur - rank_below);
        rank_below = rank_cur;
        cur = std::move(next);
    }
    return dims;
}

}  // namespace todd
