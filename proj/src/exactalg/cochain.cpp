#include "exactalg/cochain.hpp"

#include <cassert>
#include <sstream>

namespace exactalg {

int merge_sign(const ExtMonomial& a, const ExtMonomial& b, ExtMonomial& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    // Merge two increasing lists; each element of b jumps over the elements
    // of a that remain to its right, contributing one inversion apiece.
    size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
            inversions += static_cast<long>(a.size() - i);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return (inversions % 2 == 0) ? 1 : -1;
}

CochainElem CochainElem::zero(int n, int r) {
    CochainElem e;
    e.nvars = n;
    e.netas = r;
    return e;
}

CochainElem CochainElem::unit(int n, int r) {
    return monomial(n, r, {}, PolyScalar::constant(n, 1));
}

CochainElem CochainElem::from_poly(int r, const PolyScalar& p) {
    CochainElem e = zero(p.nvars, r);
    if (!p.is_zero()) e.terms[{}] = p;
    return e;
}

CochainElem CochainElem::eta(int n, int r, int i) {
    if (i < 1 || i > r) throw std::invalid_argument("CochainElem::eta: index out of range");
    return monomial(n, r, {i}, PolyScalar::constant(n, 1));
}

CochainElem CochainElem::monomial(int n, int r, ExtMonomial m, const PolyScalar& p) {
    for (size_t k = 0; k < m.size(); ++k) {
        if (m[k] < 1 || m[k] > r)
            throw std::invalid_argument("CochainElem::monomial: eta index out of range");
        if (k + 1 < m.size() && m[k] >= m[k + 1])
            throw std::invalid_argument("CochainElem::monomial: indices must strictly increase");
    }
    CochainElem e = zero(n, r);
    if (!p.is_zero()) e.terms[std::move(m)] = p;
    return e;
}

void CochainElem::normalize() {
    for (auto it = terms.begin(); it != terms.end();) {
        it->second.normalize();
        if (it->second.is_zero())
            it = terms.erase(it);
        else
            ++it;
    }
}

CochainElem CochainElem::operator+(const CochainElem& o) const {
    assert(nvars == o.nvars && netas == o.netas);
    CochainElem out = *this;
    for (const auto& [m, p] : o.terms) {
        auto it = out.terms.find(m);
        if (it == out.terms.end())
            out.terms[m] = p;
        else
            it->second = it->second + p;
    }
    out.normalize();
    return out;
}

CochainElem CochainElem::operator-(const CochainElem& o) const { return *this + (-o); }

CochainElem CochainElem::operator-() const {
    CochainElem out = *this;
    for (auto& [m, p] : out.terms) p = -p;
    return out;
}

CochainElem CochainElem::operator*(const CochainElem& o) const {
    assert(nvars == o.nvars && netas == o.netas);
    CochainElem out = zero(nvars, netas);
    for (const auto& [ma, pa] : terms)
        for (const auto& [mb, pb] : o.terms) {
            ExtMonomial m;
            const int s = merge_sign(ma, mb, m);
            if (s == 0) continue;
            PolyScalar prod = pa * pb;
            if (s < 0) prod = -prod;
            auto it = out.terms.find(m);
            if (it == out.terms.end())
                out.terms[m] = prod;
            else
                it->second = it->second + prod;
        }
    out.normalize();
    return out;
}

CochainElem CochainElem::scale(const Rational& c) const {
    CochainElem out = *this;
    for (auto& [m, p] : out.terms) p = p.scale(c);
    out.normalize();
    return out;
}

CochainElem CochainElem::poly_derive(int j) const {
    CochainElem out = zero(nvars, netas);
    for (const auto& [m, p] : terms) {
        PolyScalar dp = p.derive(j);
        if (!dp.is_zero()) out.terms[m] = dp;
    }
    return out;
}

CochainElem CochainElem::int_derive(int k) const {
    CochainElem out = zero(nvars, netas);
    for (const auto& [m, p] : terms) {
        for (size_t pos = 0; pos < m.size(); ++pos) {
            if (m[pos] != k) continue;
            ExtMonomial m2;
            m2.reserve(m.size() - 1);
            for (size_t i = 0; i < m.size(); ++i)
                if (i != pos) m2.push_back(m[i]);
            PolyScalar q = (pos % 2 == 0) ? p : -p;
            auto it = out.terms.find(m2);
            if (it == out.terms.end())
                out.terms[m2] = q;
            else
                it->second = it->second + q;
            break;  // indices are strict, k occurs at most once
        }
    }
    out.normalize();
    return out;
}

std::map<int, CochainElem> CochainElem::homogeneous_parts() const {
    std::map<int, CochainElem> parts;
    for (const auto& [m, p] : terms) {
        const int d = static_cast<int>(m.size());
        auto it = parts.find(d);
        if (it == parts.end()) {
            CochainElem e = zero(nvars, netas);
            e.terms[m] = p;
            parts.emplace(d, std::move(e));
        } else {
            it->second.terms[m] = p;
        }
    }
    return parts;
}

bool CochainElem::is_homogeneous() const {
    if (terms.empty()) return true;
    const size_t d = terms.begin()->first.size();
    for (const auto& [m, p] : terms)
        if (m.size() != d) return false;
    return true;
}

int CochainElem::grade_of() const {
    if (terms.empty()) return 0;
    if (!is_homogeneous()) throw NotHomogeneous("grade_of: element is not homogeneous");
    return static_cast<int>(terms.begin()->first.size());
}

std::string CochainElem::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, p] : terms) {
        if (!first) os << " + ";
        first = false;
        const bool simple = p.terms.size() == 1;
        if (m.empty()) {
            os << p.to_string();
            continue;
        }
        if (simple)
            os << p.to_string() << "*";
        else
            os << "(" << p.to_string() << ")*";
        bool lead = true;
        for (int i : m) {
            if (!lead) os << "*";
            lead = false;
            os << "eta" << i;
        }
    }
    return os.str();
}

}  // namespace exactalg
