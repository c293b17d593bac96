#include "liepair/model.hpp"

#include <sstream>

namespace liepair {

using exactalg::CochainElem;
using exactalg::PolyScalar;
using exactalg::Rational;

LiePairModel LiePairModel::zero_model(int n, int r, int rprime) {
    LiePairModel m;
    m.n = n;
    m.r = r;
    m.rprime = rprime;
    const int q = r + rprime;
    m.rho.assign(static_cast<size_t>(q),
                 std::vector<PolyScalar>(static_cast<size_t>(n), PolyScalar::zero(n)));
    m.c.assign(static_cast<size_t>(q),
               std::vector<std::vector<PolyScalar>>(
                   static_cast<size_t>(q),
                   std::vector<PolyScalar>(static_cast<size_t>(q), PolyScalar::zero(n))));
    return m;
}

const PolyScalar& LiePairModel::cijk(int i, int j, int k) const {
    return c.at(static_cast<size_t>(i - 1)).at(static_cast<size_t>(j - 1)).at(
        static_cast<size_t>(k - 1));
}

const PolyScalar& LiePairModel::rho_comp(int i, int j) const {
    return rho.at(static_cast<size_t>(i - 1)).at(static_cast<size_t>(j - 1));
}

void LiePairModel::set_c(int i, int j, int k, const PolyScalar& v) {
    c.at(static_cast<size_t>(i - 1)).at(static_cast<size_t>(j - 1)).at(
        static_cast<size_t>(k - 1)) = v;
}

void LiePairModel::set_c_pair(int i, int j, int k, const PolyScalar& v) {
    set_c(i, j, k, v);
    set_c(j, i, k, -v);
}

void LiePairModel::set_rho(int i, int j, const PolyScalar& v) {
    rho.at(static_cast<size_t>(i - 1)).at(static_cast<size_t>(j - 1)) = v;
}

PolyScalar LiePairModel::anchor_apply(int i, const PolyScalar& f) const {
    PolyScalar out = PolyScalar::zero(n);
    for (int j = 1; j <= n; ++j) out = out + rho_comp(i, j) * f.derive(j);
    return out;
}

CochainElem LiePairModel::anchor_apply(int i, const CochainElem& f) const {
    CochainElem out = CochainElem::zero(f.nvars, f.netas);
    for (int j = 1; j <= n; ++j)
        out = out + f.poly_derive(j) * CochainElem::from_poly(f.netas, rho_comp(i, j));
    return out;
}

std::string ValidationReport::to_string() const {
    if (issues.empty()) return "ok";
    std::ostringstream os;
    for (const auto& issue : issues) {
        os << issue.invariant << " (";
        for (size_t t = 0; t < issue.indices.size(); ++t)
            os << (t ? "," : "") << issue.indices[t];
        os << "): " << issue.detail << "\n";
    }
    return os.str();
}

ValidationReport validate(const LiePairModel& m) {
    ValidationReport rep;
    const int q = m.rank_L();

    // Shape sanity first; malformed tables are reported once and abort the
    // structural checks (indices would be meaningless).
    if (static_cast<int>(m.rho.size()) != q || static_cast<int>(m.c.size()) != q) {
        rep.issues.push_back({"shape", {}, "anchor/structure tables have wrong rank"});
        return rep;
    }

    // c_ij^k = -c_ji^k (including the i = j diagonal).
    for (int i = 1; i <= q; ++i)
        for (int j = i; j <= q; ++j)
            for (int k = 1; k <= q; ++k)
                if (!(m.cijk(i, j, k) + m.cijk(j, i, k)).is_zero())
                    rep.issues.push_back({"antisymmetry",
                                          {i, j, k},
                                          "c(" + std::to_string(i) + "," + std::to_string(j) +
                                              ") + c(" + std::to_string(j) + "," +
                                              std::to_string(i) + ") != 0"});

    // A is a subalgebroid: the A-A bracket has no B-component.
    for (int i = 1; i <= m.r; ++i)
        for (int j = i + 1; j <= m.r; ++j)
            for (int k = m.r + 1; k <= q; ++k)
                if (!m.cijk(i, j, k).is_zero())
                    rep.issues.push_back(
                        {"subalgebra-closure", {i, j, k}, "A-A bracket leaks into B"});

    // Anchor compatibility: rho([e_i,e_j]) = [rho(e_i), rho(e_j)].
    for (int i = 1; i <= q; ++i)
        for (int j = i + 1; j <= q; ++j)
            for (int s = 1; s <= m.n; ++s) {
                PolyScalar lhs =
                    m.anchor_apply(i, m.rho_comp(j, s)) - m.anchor_apply(j, m.rho_comp(i, s));
                PolyScalar rhs = PolyScalar::zero(m.n);
                for (int k = 1; k <= q; ++k) rhs = rhs + m.cijk(i, j, k) * m.rho_comp(k, s);
                if (!(lhs - rhs).is_zero())
                    rep.issues.push_back({"anchor-compatibility",
                                          {i, j, s},
                                          "rho([e_i,e_j]) differs from the field bracket"});
            }

    // Jacobi with anchor terms, cyclic over (i,j,k).
    for (int i = 1; i <= q; ++i)
        for (int j = i + 1; j <= q; ++j)
            for (int k = j + 1; k <= q; ++k)
                for (int mm = 1; mm <= q; ++mm) {
                    PolyScalar total = PolyScalar::zero(m.n);
                    const int cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
                    for (const auto& t : cyc) {
                        total = total + m.anchor_apply(t[0], m.cijk(t[1], t[2], mm));
                        for (int l = 1; l <= q; ++l)
                            total = total + m.cijk(t[1], t[2], l) * m.cijk(t[0], l, mm);
                    }
                    if (!total.is_zero())
                        rep.issues.push_back(
                            {"jacobi", {i, j, k, mm}, "cyclic Jacobi sum is nonzero"});
                }

    return rep;
}

LiePairModel make_point_pair(
    int r, int rprime, const std::vector<std::tuple<int, int, int, PolyScalar>>& entries,
    const std::string& name) {
    LiePairModel m = LiePairModel::zero_model(0, r, rprime);
    m.name = name;
    for (const auto& [i, j, k, v] : entries) m.set_c_pair(i, j, k, v);
    const auto rep = validate(m);
    if (!rep.ok()) throw ModelError("make_point_pair(" + name + "): " + rep.to_string());
    return m;
}

LiePairModel make_foliation(int n, int k, const std::string& name) {
    if (k < 1 || k > n) throw ModelError("make_foliation: need 1 <= k <= n");
    LiePairModel m = LiePairModel::zero_model(n, k, n - k);
    m.name = name.empty() ? ("foliation-" + std::to_string(n) + "-" + std::to_string(k)) : name;
    for (int i = 1; i <= n; ++i) m.set_rho(i, i, PolyScalar::constant(n, 1));
    const auto rep = validate(m);
    if (!rep.ok()) throw ModelError("make_foliation: " + rep.to_string());
    return m;
}

LiePairModel make_action(int n, int r,
                         const std::vector<std::vector<std::vector<Rational>>>& f,
                         const std::vector<std::vector<PolyScalar>>& fields,
                         const std::string& name) {
    if (static_cast<int>(f.size()) != r || static_cast<int>(fields.size()) != r)
        throw ModelError("make_action: table sizes do not match r");

    // The assignment a -> fields[a] must be a Lie algebra morphism into
    // polynomial vector fields: [X_a, X_b] = sum_c f_ab^c X_c.
    auto field_apply = [&](int a, const PolyScalar& g) {
        PolyScalar out = PolyScalar::zero(n);
        for (int t = 1; t <= n; ++t)
            out = out + fields[static_cast<size_t>(a - 1)][static_cast<size_t>(t - 1)] *
                            g.derive(t);
        return out;
    };
    for (int a = 1; a <= r; ++a)
        for (int b = a + 1; b <= r; ++b)
            for (int t = 1; t <= n; ++t) {
                PolyScalar lhs =
                    field_apply(a, fields[static_cast<size_t>(b - 1)][static_cast<size_t>(t - 1)]) -
                    field_apply(b, fields[static_cast<size_t>(a - 1)][static_cast<size_t>(t - 1)]);
                PolyScalar rhs = PolyScalar::zero(n);
                for (int cc = 1; cc <= r; ++cc)
                    rhs = rhs + PolyScalar::constant(
                                    n, f[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)]
                                         [static_cast<size_t>(cc - 1)]) *
                                    fields[static_cast<size_t>(cc - 1)][static_cast<size_t>(t - 1)];
                if (!(lhs - rhs).is_zero())
                    throw ModelError("make_action(" + name +
                                     "): fields do not represent the Lie algebra (generators " +
                                     std::to_string(a) + "," + std::to_string(b) + ")");
            }

    LiePairModel m = LiePairModel::zero_model(n, r, n);
    m.name = name;
    // Anchor: action fields for the g-part, the coordinate frame for T R^n.
    for (int a = 1; a <= r; ++a)
        for (int t = 1; t <= n; ++t)
            m.set_rho(a, t, fields[static_cast<size_t>(a - 1)][static_cast<size_t>(t - 1)]);
    for (int s = 1; s <= n; ++s) m.set_rho(r + s, s, PolyScalar::constant(n, 1));
    // Brackets: g-part from f; [a, d/dx_s] = -d(fields_a)/dx_s; frame part 0.
    for (int a = 1; a <= r; ++a)
        for (int b = 1; b <= r; ++b)
            for (int cc = 1; cc <= r; ++cc)
                m.set_c(a, b, cc,
                        PolyScalar::constant(n, f[static_cast<size_t>(a - 1)]
                                                  [static_cast<size_t>(b - 1)]
                                                  [static_cast<size_t>(cc - 1)]));
    for (int a = 1; a <= r; ++a)
        for (int s = 1; s <= n; ++s)
            for (int t = 1; t <= n; ++t) {
                PolyScalar d =
                    fields[static_cast<size_t>(a - 1)][static_cast<size_t>(t - 1)].derive(s);
                if (d.is_zero()) continue;
                m.set_c(a, r + s, r + t, -d);
                m.set_c(r + s, a, r + t, d);
            }

    const auto rep = validate(m);
    if (!rep.ok()) throw ModelError("make_action(" + name + "): " + rep.to_string());
    return m;
}

}  // namespace liepair
