#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "exactalg/cochain.hpp"

namespace hpl {

// A free graded module over the ring R of polynomial coefficients tensored
// with the exterior algebra on eta^1..eta^netas. Generators carry integer
// degrees; elements are finite R-combinations of generators.
struct Generator {
    std::string name;
    int degree = 0;
};

struct ModuleSpec {
    int nvars = 0;
    int netas = 0;
    std::vector<Generator> gens;

    int degree_of(int g) const { return gens[static_cast<size_t>(g)].degree; }
    // Index of the named generator, -1 if absent.
    int find(const std::string& name) const;
};

std::shared_ptr<const ModuleSpec> make_spec(int nvars, int netas,
                                            std::vector<Generator> gens);

struct ModuleElem {
    std::shared_ptr<const ModuleSpec> spec;
    // Generator index -> nonzero coefficient (coefficients act on the left).
    std::map<int, exactalg::CochainElem> comps;

    static ModuleElem zero(std::shared_ptr<const ModuleSpec> spec);
    static ModuleElem gen(std::shared_ptr<const ModuleSpec> spec, int g);

    void normalize();
    bool is_zero() const { return comps.empty(); }

    ModuleElem operator+(const ModuleElem& o) const;
    ModuleElem operator-(const ModuleElem& o) const;
    ModuleElem negate() const;
    ModuleElem scale(const exactalg::Rational& c) const;
    // Left multiplication by a ring element: f . (sum f_g w_g) = sum (f f_g) w_g.
    ModuleElem left_mul(const exactalg::CochainElem& f) const;

    // Coefficient of generator g (zero element of the ring if absent).
    exactalg::CochainElem comp(int g) const;

    // Structural comparison of the coefficient maps.
    bool operator==(const ModuleElem& o) const { return comps == o.comps; }

    std::string to_string() const;
};

// A graded operator given by its values on generators. When `leibniz` is set
// the operator is a derivation over `ring_diff` on coefficients; otherwise it
// is R-linear. Either way coefficients pass the operator with the Koszul sign
// (-1)^{|f| par(op)} where par(op) is the parity of `degree`:
//   op(f w) = [leibniz] ring_diff(f) w + (-1)^{|f| par} f op(w).
struct TableOp {
    std::shared_ptr<const ModuleSpec> spec;
    int degree = 0;
    bool leibniz = false;
    std::vector<ModuleElem> table;
    std::function<exactalg::CochainElem(const exactalg::CochainElem&)> ring_diff;

    static TableOp linear(std::shared_ptr<const ModuleSpec> spec, int degree,
                          std::vector<ModuleElem> table);
    static TableOp leibniz_op(
        std::shared_ptr<const ModuleSpec> spec, int degree, std::vector<ModuleElem> table,
        std::function<exactalg::CochainElem(const exactalg::CochainElem&)> ring_diff);

    ModuleElem apply(const ModuleElem& x) const;
};

}  // namespace hpl
