#include "liepair/moduleform.hpp"

#include <algorithm>
#include <cassert>

#include "liepair/ce.hpp"

namespace liepair {

using exactalg::CochainElem;

ModuleForm ModuleForm::zero(ModuleTag tag, const LiePairModel& m) {
    ModuleForm w;
    w.tag = tag;
    w.n = m.n;
    w.r = m.r;
    w.rprime = m.rprime;
    return w;
}

ModuleForm ModuleForm::zero_lambda(int k, const LiePairModel& m) {
    ModuleForm w = zero(ModuleTag::LambdaBDual, m);
    w.lambda_k = k;
    return w;
}

std::vector<std::vector<int>> ModuleForm::canonical_lambda_keys() const {
    std::vector<std::vector<int>> keys;
    std::vector<int> cur;
    // increasing lambda_k-subsets of {r+1, ..., r+rprime}
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == lambda_k) {
            keys.push_back(cur);
            return;
        }
        for (int j = next; j <= r + rprime; ++j) {
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, r + 1);
    return keys;
}

bool ModuleForm::is_zero() const {
    for (const auto& [key, v] : comps)
        if (!v.is_zero()) return false;
    return true;
}

ModuleForm ModuleForm::operator+(const ModuleForm& o) const {
    assert(tag == o.tag && lambda_k == o.lambda_k);
    ModuleForm out = *this;
    for (const auto& [key, v] : o.comps) {
        auto it = out.comps.find(key);
        if (it == out.comps.end())
            out.comps[key] = v;
        else
            it->second = it->second + v;
    }
    return out;
}

ModuleForm ModuleForm::operator-(const ModuleForm& o) const { return *this + o.negate(); }

ModuleForm ModuleForm::negate() const {
    ModuleForm out = *this;
    for (auto& [key, v] : out.comps) v = -v;
    return out;
}

ModuleForm ModuleForm::scale_cochain(const CochainElem& f) const {
    ModuleForm out = *this;
    for (auto& [key, v] : out.comps) v = f * v;
    return out;
}

bool ModuleForm::operator==(const ModuleForm& o) const { return (*this - o).is_zero(); }

CochainElem ModuleForm::comp(const std::vector<int>& key) const {
    auto it = comps.find(key);
    if (it != comps.end()) return it->second;
    return CochainElem::zero(n, r);
}

namespace {

// Evaluate an alternating form table at an arbitrary B-index tuple: sort the
// tuple (B slots are even, so plain antisymmetry) and look up the canonical
// key. Repeated indices give zero.
CochainElem lambda_lookup(const ModuleForm& w, std::vector<int> key) {
    int sign = 1;
    for (size_t t = 0; t + 1 < key.size(); ++t)
        for (size_t u = 0; u + 1 < key.size() - t; ++u)
            if (key[u] > key[u + 1]) {
                std::swap(key[u], key[u + 1]);
                sign = -sign;
            }
    for (size_t t = 0; t + 1 < key.size(); ++t)
        if (key[t] == key[t + 1]) return CochainElem::zero(w.n, w.r);
    CochainElem v = w.comp(key);
    return sign < 0 ? -v : v;
}

}  // namespace

ModuleForm module_covariant_derivative(const LiePairModel& m, const ModuleForm& w) {
    ModuleForm out = w;
    out.comps.clear();

    const auto eta = [&](int a) { return CochainElem::eta(m.n, m.r, a); };
    const auto pc = [&](const exactalg::PolyScalar& p) {
        return CochainElem::from_poly(m.r, p);
    };

    switch (w.tag) {
        case ModuleTag::B: {
            for (int k = m.r + 1; k <= m.rank_L(); ++k) {
                CochainElem v = ce_differential(m, w.comp({k}));
                for (int a = 1; a <= m.r; ++a)
                    for (int j = m.r + 1; j <= m.rank_L(); ++j) {
                        const auto& cc = m.cijk(a, j, k);
                        if (cc.is_zero()) continue;
                        v = v + eta(a) * w.comp({j}) * pc(cc);
                    }
                if (!v.is_zero()) out.comps[{k}] = v;
            }
            break;
        }
        case ModuleTag::HomBBtoB: {
            for (int i = m.r + 1; i <= m.rank_L(); ++i)
                for (int j = m.r + 1; j <= m.rank_L(); ++j)
                    for (int k = m.r + 1; k <= m.rank_L(); ++k) {
                        CochainElem v = ce_differential(m, w.comp({i, j, k}));
                        for (int a = 1; a <= m.r; ++a) {
                            // value transport, then pull-back on both slots
                            for (int l = m.r + 1; l <= m.rank_L(); ++l) {
                                const auto& cv = m.cijk(a, l, k);
                                if (!cv.is_zero())
                                    v = v + eta(a) * w.comp({i, j, l}) * pc(cv);
                                const auto& ci = m.cijk(a, i, l);
                                if (!ci.is_zero())
                                    v = v - eta(a) * w.comp({l, j, k}) * pc(ci);
                                const auto& cj = m.cijk(a, j, l);
                                if (!cj.is_zero())
                                    v = v - eta(a) * w.comp({i, l, k}) * pc(cj);
                            }
                        }
                        if (!v.is_zero()) out.comps[{i, j, k}] = v;
                    }
            break;
        }
        case ModuleTag::LambdaBDual: {
            for (const auto& key : w.canonical_lambda_keys()) {
                CochainElem v = ce_differential(m, w.comp(key));
                for (int a = 1; a <= m.r; ++a)
                    for (size_t t = 0; t < key.size(); ++t)
                        for (int jp = m.r + 1; jp <= m.rank_L(); ++jp) {
                            const auto& cc = m.cijk(a, key[t], jp);
                            if (cc.is_zero()) continue;
                            std::vector<int> key2 = key;
                            key2[t] = jp;
                            const CochainElem val = lambda_lookup(w, key2);
                            if (val.is_zero()) continue;
                            v = v - eta(a) * val * pc(cc);
                        }
                if (!v.is_zero()) out.comps[key] = v;
            }
            break;
        }
    }

    for (auto it = out.comps.begin(); it != out.comps.end();) {
        it->second.normalize();
        if (it->second.is_zero())
            it = out.comps.erase(it);
        else
            ++it;
    }
    return out;
}

}  // namespace liepair
