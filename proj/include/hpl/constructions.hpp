#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "hpl/contraction.hpp"
#include "hpl/module.hpp"

namespace hpl {

// ---------------------------------------------------------------------------
// Hom(W, W') with the induced contraction
//   D F = delta' o F - (-1)^{|F|} F o delta
//   H F = h' o F + (-1)^{|F|} proj' o F o h
// on the free module generated by matrix units E[s->t] of degree |t| - |s|.
// An element sum f E[s->t] acts by (f E)(g u_s) = (-1)^{|g| |E|} (f g) u_t.
// ---------------------------------------------------------------------------
struct HomIndex {
    std::shared_ptr<const ModuleSpec> src;
    std::shared_ptr<const ModuleSpec> dst;
    std::shared_ptr<const ModuleSpec> spec;

    int gen_of(int s, int t) const;
    std::pair<int, int> st_of(int g) const;

    // Evaluate a hom element on a source element.
    ModuleElem eval(const ModuleElem& F, const ModuleElem& x) const;
};

struct HomContraction {
    std::shared_ptr<const HomIndex> index;
    Contraction c;
};

HomContraction hom_contraction(const Contraction& src, const Contraction& dst);

// ---------------------------------------------------------------------------
// Tensor products W_1 (x) ... (x) W_m with
//   D = sum_i id (x) .. (x) delta_i (x) .. (x) id
//   H = sum_i proj_1 (x) .. (x) proj_{i-1} (x) h_i (x) id (x) .. (x) id
// (operator slots accrue the Koszul prefix sign over generator degrees).
// ---------------------------------------------------------------------------
struct TensorIndex {
    std::vector<std::shared_ptr<const ModuleSpec>> factors;
    std::shared_ptr<const ModuleSpec> spec;

    int gen_of(const std::vector<int>& tuple) const;
    const std::vector<int>& tuple_of(int g) const;

    std::vector<std::vector<int>> tuples;
};

struct TensorContraction {
    std::shared_ptr<const TensorIndex> index;
    Contraction c;
};

TensorContraction tensor_contraction(const std::vector<const Contraction*>& factors);

// (f_1 w_1) (x) ... (x) (f_m w_m) as an element of the tensor module:
// coefficients move to the front across earlier generators with Koszul signs.
ModuleElem tensor_list(const TensorIndex& index, const std::vector<ModuleElem>& elems);

// ---------------------------------------------------------------------------
// Exterior powers Lambda^k W. Basis words are weakly increasing generator
// tuples; a generator may repeat only when its degree is odd, per the wedge
// rule b ^ a = -(-1)^{|a||b|} a ^ b. D is the degree +1 derivation extending
// delta; H is the symmetrized homotopy
//   H = (1/k!) sum_{perm} sum_i chi(perm) (proj^(i-1) (x) h (x) id^(k-i)) o perm
// projected back to wedge words.
// ---------------------------------------------------------------------------
struct LambdaIndex {
    std::shared_ptr<const ModuleSpec> base;
    int k = 0;
    std::shared_ptr<const ModuleSpec> spec;

    std::vector<std::vector<int>> tuples;

    int gen_of(const std::vector<int>& tuple) const;
    const std::vector<int>& tuple_of(int g) const;

    // Reorder an arbitrary word into the canonical basis word. Returns the
    // wedge sign and the generator index, or {0, -1} when the word dies
    // (repeated generator of even degree).
    std::pair<int, int> canonical(std::vector<int> word) const;
};

struct LambdaContraction {
    std::shared_ptr<const LambdaIndex> index;
    Contraction c;
};

LambdaContraction exterior_contraction(const Contraction& base, int k);

// (f_1 w_1) ^ ... ^ (f_k w_k) for base elements, expanded into the canonical
// basis of Lambda^k (the index's wedge degree must equal the list length).
ModuleElem wedge_list(const LambdaIndex& index, const std::vector<ModuleElem>& elems);

// Wedge a Lambda^{ka} element with a Lambda^{kb} element over the same base;
// the result lives on the canonical Lambda^{ka+kb} spec.
ModuleElem lambda_wedge(const LambdaIndex& ia, const ModuleElem& a, const LambdaIndex& ib,
                        const ModuleElem& b);

}  // namespace hpl
