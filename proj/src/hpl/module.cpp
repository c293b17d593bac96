#include "hpl/module.hpp"

#include <sstream>
#include <stdexcept>

namespace hpl {

using exactalg::CochainElem;
using exactalg::Rational;

int ModuleSpec::find(const std::string& name) const {
    for (size_t g = 0; g < gens.size(); ++g)
        if (gens[g].name == name) return static_cast<int>(g);
    return -1;
}

std::shared_ptr<const ModuleSpec> make_spec(int nvars, int netas,
                                            std::vector<Generator> gens) {
    auto spec = std::make_shared<ModuleSpec>();
    spec->nvars = nvars;
    spec->netas = netas;
    spec->gens = std::move(gens);
    return spec;
}

ModuleElem ModuleElem::zero(std::shared_ptr<const ModuleSpec> spec) {
    ModuleElem e;
    e.spec = std::move(spec);
    return e;
}

ModuleElem ModuleElem::gen(std::shared_ptr<const ModuleSpec> spec, int g) {
    if (g < 0 || static_cast<size_t>(g) >= spec->gens.size())
        throw std::out_of_range("ModuleElem::gen: bad generator index");
    ModuleElem e;
    e.comps.emplace(g, CochainElem::unit(spec->nvars, spec->netas));
    e.spec = std::move(spec);
    return e;
}

void ModuleElem::normalize() {
    for (auto it = comps.begin(); it != comps.end();) {
        it->second.normalize();
        if (it->second.is_zero())
            it = comps.erase(it);
        else
            ++it;
    }
}

ModuleElem ModuleElem::operator+(const ModuleElem& o) const {
    ModuleElem out = *this;
    for (const auto& [g, f] : o.comps) {
        auto it = out.comps.find(g);
        if (it == out.comps.end())
            out.comps.emplace(g, f);
        else
            it->second = it->second + f;
    }
    out.normalize();
    return out;
}

ModuleElem ModuleElem::operator-(const ModuleElem& o) const { return *this + o.negate(); }

ModuleElem ModuleElem::negate() const {
    ModuleElem out = *this;
    for (auto& [g, f] : out.comps) f = -f;
    return out;
}

ModuleElem ModuleElem::scale(const Rational& c) const {
    ModuleElem out = *this;
    for (auto& [g, f] : out.comps) f = f.scale(c);
    out.normalize();
    return out;
}

ModuleElem ModuleElem::left_mul(const CochainElem& f) const {
    ModuleElem out = zero(spec);
    for (const auto& [g, fg] : comps) {
        CochainElem prod = f * fg;
        if (!prod.is_zero()) out.comps.emplace(g, std::move(prod));
    }
    return out;
}

CochainElem ModuleElem::comp(int g) const {
    auto it = comps.find(g);
    if (it == comps.end()) return CochainElem::zero(spec->nvars, spec->netas);
    return it->second;
}

std::string ModuleElem::to_string() const {
    if (comps.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, f] : comps) {
        if (!first) os << " + ";
        first = false;
        os << "(" << f.to_string() << ")*" << spec->gens[static_cast<size_t>(g)].name;
    }
    return os.str();
}

TableOp TableOp::linear(std::shared_ptr<const ModuleSpec> spec, int degree,
                        std::vector<ModuleElem> table) {
    if (table.size() != spec->gens.size())
        throw std::invalid_argument("TableOp: table size mismatch");
    TableOp op;
    op.spec = std::move(spec);
    op.degree = degree;
    op.leibniz = false;
    op.table = std::move(table);
    return op;
}

TableOp TableOp::leibniz_op(
    std::shared_ptr<const ModuleSpec> spec, int degree, std::vector<ModuleElem> table,
    std::function<exactalg::CochainElem(const exactalg::CochainElem&)> ring_diff) {
    TableOp op = linear(std::move(spec), degree, std::move(table));
    op.leibniz = true;
    op.ring_diff = std::move(ring_diff);
    return op;
}

ModuleElem TableOp::apply(const ModuleElem& x) const {
    ModuleElem out = ModuleElem::zero(x.spec);
    const bool odd = ((degree % 2) + 2) % 2 == 1;
    for (const auto& [g, f] : x.comps) {
        const ModuleElem& val = table[static_cast<size_t>(g)];
        if (leibniz && ring_diff) {
            const CochainElem df = ring_diff(f);
            if (!df.is_zero())
                out = out + ModuleElem::gen(x.spec, g).left_mul(df);
        }
        if (val.is_zero()) continue;
        if (!odd) {
            out = out + val.left_mul(f);
        } else {
            for (const auto& [d, part] : f.homogeneous_parts()) {
                ModuleElem term = val.left_mul(part);
                if (d % 2 != 0) term = term.negate();
                out = out + term;
            }
        }
    }
    return out;
}

}  // namespace hpl
