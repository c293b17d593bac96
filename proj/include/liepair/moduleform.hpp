#pragma once

#include <map>
#include <vector>

#include "exactalg/cochain.hpp"
#include "liepair/model.hpp"

namespace liepair {

// Coefficient modules for CE cochains that the engine differentiates with the
// (flat) Bott representation of A on B = L/A and its induced actions.
enum class ModuleTag {
    B,           // sections of B;            key {k},      k in [r+1, r+r']
    HomBBtoB,    // Hom(B (x) B, B);          key {i,j,k}   slots i,j, value k
    LambdaBDual  // alternating k-forms on B; key {j1<...<jk}
};

// A module-valued CE form, stored componentwise against the adapted frame of
// B. Components are CE cochains; the eta-degree of the components is the form
// degree.
struct ModuleForm {
    ModuleTag tag = ModuleTag::B;
    int lambda_k = 0;  // arity for LambdaBDual
    int n = 0, r = 0, rprime = 0;
    std::map<std::vector<int>, exactalg::CochainElem> comps;

    static ModuleForm zero(ModuleTag tag, const LiePairModel& m);
    static ModuleForm zero_lambda(int k, const LiePairModel& m);

    std::vector<std::vector<int>> canonical_lambda_keys() const;

    bool is_zero() const;
    ModuleForm operator+(const ModuleForm& o) const;
    ModuleForm operator-(const ModuleForm& o) const;
    ModuleForm negate() const;
    // Left multiplication by a ring element: (f w)(args) = f * w(args).
    ModuleForm scale_cochain(const exactalg::CochainElem& f) const;
    bool operator==(const ModuleForm& o) const;

    exactalg::CochainElem comp(const std::vector<int>& key) const;
};

// Covariant derivative of a module-valued CE form along the Bott connection
// (and the representations it induces on Hom(B (x) B, B) and Lambda^k B*).
// Raises the form degree by one; squares to zero because the Bott
// representation is flat.
ModuleForm module_covariant_derivative(const LiePairModel& m, const ModuleForm& w);

}  // namespace liepair
