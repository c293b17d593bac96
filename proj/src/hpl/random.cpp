#include "hpl/random.hpp"

#include <random>
#include <string>

#include "exactalg/linsolve.hpp"

namespace hpl {

using exactalg::Rational;
using exactalg::RatMatrix;

namespace {

std::vector<ModuleElem> matrix_to_table(const std::shared_ptr<const ModuleSpec>& spec,
                                        const RatMatrix& m) {
    std::vector<ModuleElem> table;
    for (size_t g = 0; g < spec->gens.size(); ++g) {
        ModuleElem e = ModuleElem::zero(spec);
        for (size_t r = 0; r < m.rows; ++r)
            if (m.at(r, g) != 0)
                e = e + ModuleElem::gen(spec, static_cast<int>(r)).scale(m.at(r, g));
        table.push_back(std::move(e));
    }
    return table;
}

RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b, int sgn) {
    RatMatrix out = a;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] += sgn * b.a[i];
    return out;
}

}  // namespace

RandomContraction make_random_contraction(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> core_deg(-1, 2);
    std::uniform_int_distribution<int> pair_deg(-1, 1);
    std::uniform_int_distribution<int> coeff(-2, 2);

    const int A = core_deg(rng);
    const int B = pair_deg(rng);
    const int nlevels = 3;

    std::vector<Generator> gens;
    std::vector<int> levels;
    for (int l = 0; l < nlevels; ++l) {
        const std::string suf = std::to_string(l);
        gens.push_back({"c" + suf, A});
        gens.push_back({"u" + suf, B});
        gens.push_back({"v" + suf, B + 1});
        levels.insert(levels.end(), {l, l, l});
    }
    auto spec = make_spec(0, 0, gens);
    const size_t N = gens.size();

    RatMatrix d0 = RatMatrix::zero(N, N), h0 = RatMatrix::zero(N, N);
    for (int l = 0; l < nlevels; ++l) {
        const size_t u = static_cast<size_t>(3 * l + 1), v = static_cast<size_t>(3 * l + 2);
        d0.at(v, u) = 1;
        h0.at(u, v) = 1;
    }

    // Unipotent degree- and level-preserving change of basis.
    RatMatrix nil = RatMatrix::zero(N, N);
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i + 1; j < N; ++j)
            if (levels[i] == levels[j] && gens[i].degree == gens[j].degree)
                nil.at(j, i) = coeff(rng);
    const RatMatrix id = RatMatrix::identity(N);
    const RatMatrix g = mat_add(id, nil, +1);
    const RatMatrix ginv = mat_add(id, nil, -1);  // cells have size <= 2, so nil^2 = 0

    const RatMatrix dp = g * d0 * ginv;
    const RatMatrix hp = g * h0 * ginv;

    RandomContraction out;
    out.levels = levels;
    out.c = Contraction{spec, TableOp::linear(spec, 1, matrix_to_table(spec, dp)),
                        TableOp::linear(spec, -1, matrix_to_table(spec, hp))};
    return out;
}

TableOp make_random_perturbation(const RandomContraction& rc, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2);

    const auto& spec = rc.c.spec;
    const size_t N = spec->gens.size();
    const RatMatrix id = RatMatrix::identity(N);

    // Reconstruct the big differential as a matrix.
    RatMatrix dmat = RatMatrix::zero(N, N);
    for (size_t g = 0; g < N; ++g)
        for (const auto& [r, f] : rc.c.delta.table[g].comps)
            dmat.at(static_cast<size_t>(r), g) = f.terms.at({}).constant_value();

    for (int attempt = 0; attempt < 20; ++attempt) {
        RatMatrix nu = RatMatrix::zero(N, N);
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j)
                if (rc.levels[j] > rc.levels[i] &&
                    spec->gens[i].degree == spec->gens[j].degree)
                    nu.at(j, i) = coeff(rng);
        const RatMatrix phi = mat_add(id, nu, +1);
        const RatMatrix nu2 = nu * nu;
        const RatMatrix phinv = mat_add(mat_add(id, nu, -1), nu2, +1);
        const RatMatrix partial = mat_add(phi * dmat * phinv, dmat, -1);

        bool nonzero = false;
        for (const Rational& x : partial.a)
            if (x != 0) {
                nonzero = true;
                break;
            }
        if (nonzero || attempt == 19)
            return TableOp::linear(spec, 1, matrix_to_table(spec, partial));
    }
    return TableOp::linear(spec, 1, matrix_to_table(spec, RatMatrix::zero(N, N)));
}

}  // namespace hpl
