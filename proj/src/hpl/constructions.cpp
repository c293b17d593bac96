#include "hpl/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hpl {

using exactalg::CochainElem;
using exactalg::Rational;

namespace {

int sign_pow(long e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

void require_same_ring(const std::shared_ptr<const ModuleSpec>& a,
                       const std::shared_ptr<const ModuleSpec>& b) {
    if (a->nvars != b->nvars || a->netas != b->netas)
        throw std::invalid_argument("construction requires a common coefficient ring");
}

// Shared expansion for tensor_list / wedge_list: iterate over all choices of
// one (generator, homogeneous coefficient) term per slot, with the Koszul
// sign from moving each coefficient left across the earlier generators, and
// hand every fully-chosen word to `emit`.
void expand_product(
    int nvars, int netas, const std::vector<ModuleElem>& elems,
    const std::function<int(int)>& gen_degree,
    const std::function<void(const std::vector<int>&, const CochainElem&, int)>& emit) {
    struct Frame {
        std::vector<int> word;
        CochainElem coeff;
        int sign = 1;
        int prefix_degree = 0;
    };
    std::vector<Frame> stack;
    Frame init;
    init.coeff = CochainElem::unit(nvars, netas);
    stack.push_back(std::move(init));
    for (const ModuleElem& e : elems) {
        std::vector<Frame> next;
        for (const Frame& fr : stack) {
            for (const auto& [g, f] : e.comps) {
                for (const auto& [d, part] : f.homogeneous_parts()) {
                    Frame nf = fr;
                    nf.sign *= sign_pow(static_cast<long>(d) * fr.prefix_degree);
                    nf.coeff = nf.coeff * part;
                    if (nf.coeff.is_zero()) continue;
                    nf.word.push_back(g);
                    nf.prefix_degree += gen_degree(g);
                    next.push_back(std::move(nf));
                }
            }
        }
        stack = std::move(next);
    }
    for (const Frame& fr : stack) emit(fr.word, fr.coeff, fr.sign);
}

}  // namespace

// ---------------------------------------------------------------------------
// Hom
// ---------------------------------------------------------------------------

int HomIndex::gen_of(int s, int t) const {
    return s * static_cast<int>(dst->gens.size()) + t;
}

std::pair<int, int> HomIndex::st_of(int g) const {
    const int nd = static_cast<int>(dst->gens.size());
    return {g / nd, g % nd};
}

ModuleElem HomIndex::eval(const ModuleElem& F, const ModuleElem& x) const {
    ModuleElem out = ModuleElem::zero(dst);
    for (const auto& [gE, fE] : F.comps) {
        const auto [s, t] = st_of(gE);
        const int dE = spec->degree_of(gE);
        const CochainElem fx = x.comp(s);
        if (fx.is_zero()) continue;
        for (const auto& [d, part] : fx.homogeneous_parts()) {
            const int sgn = sign_pow(static_cast<long>(d) * dE);
            out = out + ModuleElem::gen(dst, t).left_mul(fE * part).scale(Rational(sgn));
        }
    }
    return out;
}

HomContraction hom_contraction(const Contraction& src, const Contraction& dst) {
    require_same_ring(src.spec, dst.spec);
    auto index = std::make_shared<HomIndex>();
    index->src = src.spec;
    index->dst = dst.spec;

    std::vector<Generator> gens;
    for (const Generator& gs : src.spec->gens)
        for (const Generator& gt : dst.spec->gens)
            gens.push_back({"E[" + gs.name + "->" + gt.name + "]",
                            gt.degree - gs.degree});
    index->spec = make_spec(src.spec->nvars, src.spec->netas, std::move(gens));
    const auto& spec = index->spec;

    const int ns = static_cast<int>(src.spec->gens.size());
    const int nd = static_cast<int>(dst.spec->gens.size());

    // Pre-compute destination projector values.
    std::vector<ModuleElem> proj_dst;
    for (int t = 0; t < nd; ++t)
        proj_dst.push_back(dst.projector(ModuleElem::gen(dst.spec, t)));

    std::vector<ModuleElem> dtable, htable;
    for (int s = 0; s < ns; ++s) {
        for (int t = 0; t < nd; ++t) {
            const int dE = spec->degree_of(index->gen_of(s, t));
            ModuleElem Dval = ModuleElem::zero(spec);
            ModuleElem Hval = ModuleElem::zero(spec);

            // delta' o E and h' o E: re-express values of the destination
            // tables as hom elements with source slot s.
            for (const auto& [q, f] : dst.delta.table[static_cast<size_t>(t)].comps)
                Dval = Dval + ModuleElem::gen(spec, index->gen_of(s, q)).left_mul(f);
            for (const auto& [q, f] : dst.h.table[static_cast<size_t>(t)].comps)
                Hval = Hval + ModuleElem::gen(spec, index->gen_of(s, q)).left_mul(f);

            // -(-1)^{|E|} E o delta and (-1)^{|E|} proj' o E o h: pick out
            // the u_s coefficient of the source tables on each generator.
            for (int a = 0; a < ns; ++a) {
                const CochainElem fd = src.delta.table[static_cast<size_t>(a)].comp(s);
                for (const auto& [d, part] : fd.homogeneous_parts()) {
                    const int sgn = -sign_pow(static_cast<long>(dE) * (1 + d));
                    Dval = Dval + ModuleElem::gen(spec, index->gen_of(a, t))
                                      .left_mul(part)
                                      .scale(Rational(sgn));
                }
                const CochainElem fh = src.h.table[static_cast<size_t>(a)].comp(s);
                for (const auto& [d, part] : fh.homogeneous_parts()) {
                    const int sgn = sign_pow(static_cast<long>(dE) * (1 + d));
                    for (const auto& [q, w] : proj_dst[static_cast<size_t>(t)].comps)
                        Hval = Hval + ModuleElem::gen(spec, index->gen_of(a, q))
                                          .left_mul(part * w)
                                          .scale(Rational(sgn));
                }
            }
            dtable.push_back(std::move(Dval));
            htable.push_back(std::move(Hval));
        }
    }

    HomContraction out;
    out.index = index;
    TableOp D = dst.delta.leibniz
                    ? TableOp::leibniz_op(spec, 1, std::move(dtable), dst.delta.ring_diff)
                    : TableOp::linear(spec, 1, std::move(dtable));
    out.c = Contraction{spec, std::move(D), TableOp::linear(spec, -1, std::move(htable))};
    return out;
}

// ---------------------------------------------------------------------------
// Tensor
// ---------------------------------------------------------------------------

int TensorIndex::gen_of(const std::vector<int>& tuple) const {
    for (size_t g = 0; g < tuples.size(); ++g)
        if (tuples[g] == tuple) return static_cast<int>(g);
    throw std::out_of_range("TensorIndex::gen_of: unknown tuple");
}

const std::vector<int>& TensorIndex::tuple_of(int g) const {
    return tuples[static_cast<size_t>(g)];
}

ModuleElem tensor_list(const TensorIndex& index, const std::vector<ModuleElem>& elems) {
    if (elems.size() != index.factors.size())
        throw std::invalid_argument("tensor_list: wrong number of factors");
    ModuleElem out = ModuleElem::zero(index.spec);
    // Slot degrees come from the respective factor specs; expand_product only
    // sees generator indices, so degree lookup tracks the slot position.
    struct Frame {
        std::vector<int> word;
        CochainElem coeff;
        int sign = 1;
        int prefix_degree = 0;
    };
    std::vector<Frame> stack;
    Frame init;
    init.coeff = CochainElem::unit(index.spec->nvars, index.spec->netas);
    stack.push_back(std::move(init));
    for (size_t slot = 0; slot < elems.size(); ++slot) {
        std::vector<Frame> next;
        for (const Frame& fr : stack) {
            for (const auto& [g, f] : elems[slot].comps) {
                for (const auto& [d, part] : f.homogeneous_parts()) {
                    Frame nf = fr;
                    nf.sign *= sign_pow(static_cast<long>(d) * fr.prefix_degree);
                    nf.coeff = nf.coeff * part;
                    if (nf.coeff.is_zero()) continue;
                    nf.word.push_back(g);
                    nf.prefix_degree += index.factors[slot]->degree_of(g);
                    next.push_back(std::move(nf));
                }
            }
        }
        stack = std::move(next);
    }
    for (const Frame& fr : stack)
        out = out + ModuleElem::gen(index.spec, index.gen_of(fr.word))
                        .left_mul(fr.coeff)
                        .scale(Rational(fr.sign));
    return out;
}

TensorContraction tensor_contraction(const std::vector<const Contraction*>& factors) {
    if (factors.empty())
        throw std::invalid_argument("tensor_contraction: need at least one factor");
    for (const Contraction* f : factors) require_same_ring(factors[0]->spec, f->spec);

    auto index = std::make_shared<TensorIndex>();
    for (const Contraction* f : factors) index->factors.push_back(f->spec);

    // Enumerate tuples with the first slot slowest.
    std::vector<std::vector<int>> tuples = {{}};
    for (const Contraction* f : factors) {
        std::vector<std::vector<int>> next;
        for (const auto& t : tuples)
            for (size_t g = 0; g < f->spec->gens.size(); ++g) {
                auto nt = t;
                nt.push_back(static_cast<int>(g));
                next.push_back(std::move(nt));
            }
        tuples = std::move(next);
    }
    index->tuples = std::move(tuples);

    std::vector<Generator> gens;
    for (const auto& t : index->tuples) {
        std::string name;
        int degree = 0;
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) name += "(x)";
            name += index->factors[i]->gens[static_cast<size_t>(t[i])].name;
            degree += index->factors[i]->degree_of(t[i]);
        }
        gens.push_back({name, degree});
    }
    index->spec = make_spec(factors[0]->spec->nvars, factors[0]->spec->netas,
                            std::move(gens));

    const size_t m = factors.size();
    std::vector<ModuleElem> dtable, htable;
    for (const auto& T : index->tuples) {
        ModuleElem Dval = ModuleElem::zero(index->spec);
        ModuleElem Hval = ModuleElem::zero(index->spec);
        for (size_t i = 0; i < m; ++i) {
            int prefix = 0;
            for (size_t a = 0; a < i; ++a)
                prefix += index->factors[a]->degree_of(T[a]);
            const int psgn = sign_pow(prefix);

            std::vector<ModuleElem> delems, helems;
            for (size_t a = 0; a < m; ++a) {
                const ModuleElem ga = ModuleElem::gen(index->factors[a],
                                                      T[a]);
                if (a == i) {
                    delems.push_back(factors[a]->delta.apply(ga));
                    helems.push_back(factors[a]->h.apply(ga));
                } else if (a < i) {
                    delems.push_back(ga);
                    helems.push_back(factors[a]->projector(ga));
                } else {
                    delems.push_back(ga);
                    helems.push_back(ga);
                }
            }
            Dval = Dval + tensor_list(*index, delems).scale(Rational(psgn));
            Hval = Hval + tensor_list(*index, helems).scale(Rational(psgn));
        }
        dtable.push_back(std::move(Dval));
        htable.push_back(std::move(Hval));
    }

    std::function<CochainElem(const CochainElem&)> ring;
    for (const Contraction* f : factors)
        if (f->delta.leibniz) {
            ring = f->delta.ring_diff;
            break;
        }
    TensorContraction out;
    out.index = index;
    TableOp D = ring ? TableOp::leibniz_op(index->spec, 1, std::move(dtable), ring)
                     : TableOp::linear(index->spec, 1, std::move(dtable));
    out.c = Contraction{index->spec, std::move(D),
                        TableOp::linear(index->spec, -1, std::move(htable))};
    return out;
}

// ---------------------------------------------------------------------------
// Exterior
// ---------------------------------------------------------------------------

namespace {

std::shared_ptr<const LambdaIndex> make_lambda_index(
    const std::shared_ptr<const ModuleSpec>& base, int k) {
    auto index = std::make_shared<LambdaIndex>();
    index->base = base;
    index->k = k;

    // Weakly increasing words; repeats only on odd-degree generators.
    std::vector<std::vector<int>> tuples;
    std::vector<int> word;
    const int nb = static_cast<int>(base->gens.size());
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(word.size()) == k) {
            tuples.push_back(word);
            return;
        }
        for (int g = start; g < nb; ++g) {
            const bool repeat = !word.empty() && word.back() == g;
            if (repeat && base->degree_of(g) % 2 == 0) continue;
            word.push_back(g);
            rec(g);
            word.pop_back();
        }
    };
    rec(0);
    index->tuples = std::move(tuples);

    std::vector<Generator> gens;
    for (const auto& t : index->tuples) {
        std::string name;
        int degree = 0;
        if (t.empty()) name = "1";
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) name += "^";
            name += base->gens[static_cast<size_t>(t[i])].name;
            degree += base->degree_of(t[i]);
        }
        gens.push_back({name, degree});
    }
    index->spec = make_spec(base->nvars, base->netas, std::move(gens));
    return index;
}

}  // namespace

int LambdaIndex::gen_of(const std::vector<int>& tuple) const {
    for (size_t g = 0; g < tuples.size(); ++g)
        if (tuples[g] == tuple) return static_cast<int>(g);
    throw std::out_of_range("LambdaIndex::gen_of: unknown tuple");
}

const std::vector<int>& LambdaIndex::tuple_of(int g) const {
    return tuples[static_cast<size_t>(g)];
}

std::pair<int, int> LambdaIndex::canonical(std::vector<int> word) const {
    int sign = 1;
    // Bubble sort; each adjacent swap of generators a, b contributes the
    // wedge sign -(-1)^{|a||b|}.
    for (size_t pass = 0; pass + 1 < word.size() || pass == 0; ++pass) {
        bool moved = false;
        for (size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] > word[i + 1]) {
                const int da = base->degree_of(word[i]);
                const int db = base->degree_of(word[i + 1]);
                sign *= -sign_pow(static_cast<long>(da) * db);
                std::swap(word[i], word[i + 1]);
                moved = true;
            }
        }
        if (!moved) break;
    }
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] == word[i + 1] && base->degree_of(word[i]) % 2 == 0)
            return {0, -1};
    return {sign, gen_of(word)};
}

ModuleElem wedge_list(const LambdaIndex& index, const std::vector<ModuleElem>& elems) {
    if (static_cast<int>(elems.size()) != index.k)
        throw std::invalid_argument("wedge_list: wrong number of factors");
    ModuleElem out = ModuleElem::zero(index.spec);
    expand_product(
        index.spec->nvars, index.spec->netas, elems,
        [&](int g) { return index.base->degree_of(g); },
        [&](const std::vector<int>& word, const CochainElem& coeff, int sign) {
            const auto [s2, gi] = index.canonical(word);
            if (s2 == 0) return;
            out = out + ModuleElem::gen(index.spec, gi)
                            .left_mul(coeff)
                            .scale(Rational(sign * s2));
        });
    return out;
}

ModuleElem lambda_wedge(const LambdaIndex& ia, const ModuleElem& a, const LambdaIndex& ib,
                        const ModuleElem& b) {
    auto target = make_lambda_index(ia.base, ia.k + ib.k);
    ModuleElem out = ModuleElem::zero(target->spec);
    for (const auto& [gA, fA] : a.comps) {
        const std::vector<int>& ta = ia.tuple_of(gA);
        int degA = 0;
        for (int g : ta) degA += ia.base->degree_of(g);
        for (const auto& [gB, fB] : b.comps) {
            const std::vector<int>& tb = ib.tuple_of(gB);
            for (const auto& [d, part] : fB.homogeneous_parts()) {
                std::vector<int> word = ta;
                word.insert(word.end(), tb.begin(), tb.end());
                const auto [s2, gi] = target->canonical(word);
                if (s2 == 0) continue;
                const int sgn = sign_pow(static_cast<long>(d) * degA) * s2;
                out = out + ModuleElem::gen(target->spec, gi)
                                .left_mul(fA * part)
                                .scale(Rational(sgn));
            }
        }
    }
    return out;
}

LambdaContraction exterior_contraction(const Contraction& base, int k) {
    if (k < 0) throw std::invalid_argument("exterior_contraction: negative power");
    auto index = make_lambda_index(base.spec, k);

    std::vector<ModuleElem> dtable, htable;
    std::vector<int> perm_init(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) perm_init[static_cast<size_t>(i)] = i;

    Rational inv_fact(1);
    for (int i = 2; i <= k; ++i) inv_fact /= i;

    for (const auto& T : index->tuples) {
        ModuleElem Dval = ModuleElem::zero(index->spec);
        for (int i = 0; i < k; ++i) {
            int prefix = 0;
            for (int a = 0; a < i; ++a) prefix += base.spec->degree_of(T[static_cast<size_t>(a)]);
            std::vector<ModuleElem> elems;
            for (int a = 0; a < k; ++a) {
                const ModuleElem ga = ModuleElem::gen(base.spec, T[static_cast<size_t>(a)]);
                elems.push_back(a == i ? base.delta.apply(ga) : ga);
            }
            Dval = Dval + wedge_list(*index, elems).scale(Rational(sign_pow(prefix)));
        }
        dtable.push_back(std::move(Dval));

        ModuleElem Hval = ModuleElem::zero(index->spec);
        std::vector<int> perm = perm_init;
        if (k > 0) {
            do {
                // Koszul sign of reordering the word T into T o perm.
                int chi = 1;
                {
                    std::vector<int> pp = perm;
                    for (size_t pass = 0; pass + 1 < pp.size(); ++pass)
                        for (size_t i = 0; i + 1 < pp.size(); ++i)
                            if (pp[i] > pp[i + 1]) {
                                const int da =
                                    base.spec->degree_of(T[static_cast<size_t>(pp[i])]);
                                const int db =
                                    base.spec->degree_of(T[static_cast<size_t>(pp[i + 1])]);
                                chi *= -sign_pow(static_cast<long>(da) * db);
                                std::swap(pp[i], pp[i + 1]);
                            }
                }
                for (int i = 0; i < k; ++i) {
                    int prefix = 0;
                    for (int a = 0; a < i; ++a)
                        prefix +=
                            base.spec->degree_of(T[static_cast<size_t>(perm[static_cast<size_t>(a)])]);
                    std::vector<ModuleElem> elems;
                    for (int a = 0; a < k; ++a) {
                        const ModuleElem ga = ModuleElem::gen(
                            base.spec, T[static_cast<size_t>(perm[static_cast<size_t>(a)])]);
                        if (a < i)
                            elems.push_back(base.projector(ga));
                        else if (a == i)
                            elems.push_back(base.h.apply(ga));
                        else
                            elems.push_back(ga);
                    }
                    Hval = Hval + wedge_list(*index, elems)
                                      .scale(Rational(chi * sign_pow(prefix)));
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        htable.push_back(Hval.scale(inv_fact));
    }

    LambdaContraction out;
    out.index = index;
    TableOp D = base.delta.leibniz
                    ? TableOp::leibniz_op(index->spec, 1, std::move(dtable),
                                          base.delta.ring_diff)
                    : TableOp::linear(index->spec, 1, std::move(dtable));
    out.c = Contraction{index->spec, std::move(D),
                        TableOp::linear(index->spec, -1, std::move(htable))};
    return out;
}

}  // namespace hpl
