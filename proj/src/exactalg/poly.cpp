#include "exactalg/poly.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace exactalg {

PolyScalar PolyScalar::zero(int n) {
    PolyScalar p;
    p.nvars = n;
    return p;
}

PolyScalar PolyScalar::constant(int n, const Rational& c) {
    PolyScalar p = zero(n);
    if (c != 0) p.terms[std::vector<int>(static_cast<size_t>(n), 0)] = c;
    return p;
}

PolyScalar PolyScalar::variable(int n, int j) {
    if (j < 1 || j > n) throw std::invalid_argument("PolyScalar::variable: index out of range");
    PolyScalar p = zero(n);
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(j - 1)] = 1;
    p.terms[e] = Rational(1);
    return p;
}

void PolyScalar::normalize() {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
}

bool PolyScalar::is_constant() const {
    if (terms.empty()) return true;
    if (terms.size() > 1) return false;
    for (int e : terms.begin()->first)
        if (e != 0) return false;
    return true;
}

Rational PolyScalar::constant_value() const {
    if (terms.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("PolyScalar::constant_value: not constant");
    return terms.begin()->second;
}

PolyScalar PolyScalar::operator+(const PolyScalar& o) const {
    assert(nvars == o.nvars);
    PolyScalar out = *this;
    for (const auto& [e, c] : o.terms) out.terms[e] += c;
    out.normalize();
    return out;
}

PolyScalar PolyScalar::operator-(const PolyScalar& o) const { return *this + (-o); }

PolyScalar PolyScalar::operator-() const {
    PolyScalar out = *this;
    for (auto& [e, c] : out.terms) c = -c;
    return out;
}

PolyScalar PolyScalar::operator*(const PolyScalar& o) const {
    assert(nvars == o.nvars);
    PolyScalar out = zero(nvars);
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : o.terms) {
            std::vector<int> e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.terms[e] += ca * cb;
        }
    out.normalize();
    return out;
}

PolyScalar PolyScalar::scale(const Rational& c) const {
    PolyScalar out = *this;
    for (auto& [e, v] : out.terms) v *= c;
    out.normalize();
    return out;
}

PolyScalar PolyScalar::derive(int j) const {
    if (j < 1 || j > nvars) throw std::invalid_argument("PolyScalar::derive: index out of range");
    PolyScalar out = zero(nvars);
    for (const auto& [e, c] : terms) {
        const int k = e[static_cast<size_t>(j - 1)];
        if (k == 0) continue;
        std::vector<int> e2(e);
        e2[static_cast<size_t>(j - 1)] = k - 1;
        out.terms[e2] += c * k;
    }
    out.normalize();
    return out;
}

std::string PolyScalar::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = false;
        for (int x : e)
            if (x != 0) has_var = true;
        if (!has_var || a != 1) os << rational_to_string(a);
        bool lead = !has_var || a != 1;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (lead) os << "*";
            lead = true;
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace exactalg
