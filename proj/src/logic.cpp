#include "relog/logic.hpp"

#include <algorithm>
#include <stdexcept>

#include "relog/error.hpp"
#include "relog/terms.hpp"

namespace relog {

Element evaluate(const FiniteAlgebra& A, const Valuation& v, const Formula& f)
{
    switch (f.connective()) {
    case Connective::variable: {
        auto it = v.find(f.name());
        if (it == v.end())
            throw UnboundVariable("variable '" + f.name() + "' has no value");
        if (it->second >= A.size())
            throw UnknownElement("valuation of '" + f.name() + "' is out of range for " + A.name());
        return it->second;
    }
    case Connective::neg: return A.neg(evaluate(A, v, f.operand()));
    case Connective::meet: return A.meet(evaluate(A, v, f.left()), evaluate(A, v, f.right()));
    case Connective::join: return A.join(evaluate(A, v, f.left()), evaluate(A, v, f.right()));
    case Connective::fusion: return A.fusion(evaluate(A, v, f.left()), evaluate(A, v, f.right()));
    }
    return 0;
}

bool designated(const FiniteAlgebra& A, Element x)
{
    const Element self = A.arrow(x, x);
    return A.meet(self, x) == self;
}

std::vector<bool> designated_mask(const FiniteAlgebra& A)
{
    std::vector<bool> mask(A.size());
    for (Element x = 0; x < A.size(); ++x)
        mask[x] = designated(A, x);
    return mask;
}

std::vector<Element> designated_set(const FiniteAlgebra& A)
{
    std::vector<Element> out;
    for (Element x = 0; x < A.size(); ++x)
        if (designated(A, x))
            out.push_back(x);
    return out;
}

// ---------------------------------------------------------------------------

CompiledFormula::CompiledFormula(const Formula& formula, const std::vector<std::string>& slots)
{
    auto emit = [&](auto&& self, const Formula& f) -> void {
        switch (f.connective()) {
        case Connective::variable: {
            auto it = std::find(slots.begin(), slots.end(), f.name());
            if (it == slots.end())
                throw UnboundVariable("variable '" + f.name() + "' has no slot");
            code_.push_back({Connective::variable, static_cast<std::uint32_t>(it - slots.begin())});
            return;
        }
        case Connective::neg:
            self(self, f.operand());
            break;
        default:
            self(self, f.left());
            self(self, f.right());
        }
        code_.push_back({f.connective(), 0});
    };
    emit(emit, formula);
}

Element CompiledFormula::evaluate(const FiniteAlgebra& A, std::span<const Element> values) const
{
    std::vector<Element> stack;
    return evaluate(A, values, stack);
}

Element CompiledFormula::evaluate(const FiniteAlgebra& A, std::span<const Element> values,
                                  std::vector<Element>& stack) const
{
    stack.clear();
    for (const auto& ins : code_) {
        switch (ins.op) {
        case Connective::variable: stack.push_back(values[ins.slot]); break;
        case Connective::neg: stack.back() = A.neg(stack.back()); break;
        default: {
            const Element y = stack.back();
            stack.pop_back();
            Element& x = stack.back();
            x = ins.op == Connective::meet ? A.meet(x, y) : ins.op == Connective::join ? A.join(x, y) : A.fusion(x, y);
        }
        }
    }
    return stack.back();
}

// ---------------------------------------------------------------------------

EntailmentVerdict entails(std::span<const FiniteAlgebra> algebras, std::span<const Formula> premises,
                          const Formula& conclusion, const Caps& caps)
{
    std::set<std::string> names;
    for (const auto& p : premises)
        p.collect_variables(names);
    conclusion.collect_variables(names);
    const std::vector<std::string> slots(names.begin(), names.end());

    std::vector<CompiledFormula> compiled;
    for (const auto& p : premises)
        compiled.emplace_back(p, slots);
    const CompiledFormula goal(conclusion, slots);

    EntailmentVerdict verdict;
    std::vector<Element> stack;
    for (std::size_t d = 0; d < algebras.size(); ++d) {
        const auto& A = algebras[d];
        const auto n = static_cast<Element>(A.size());
        std::size_t total = 1;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (total > caps.max_valuations / std::max<std::size_t>(n, 1))
                throw CapExceeded("entailment over " + A.name() + " needs more than " +
                                  std::to_string(caps.max_valuations) + " valuations");
            total *= n;
        }
        const auto mask = designated_mask(A);
        std::vector<Element> values(slots.size(), 0);
        for (std::size_t count = 0; count < total; ++count) {
            ++verdict.valuations_checked;
            bool premises_hold = true;
            for (const auto& p : compiled)
                if (!mask[p.evaluate(A, values, stack)]) {
                    premises_hold = false;
                    break;
                }
            if (premises_hold && !mask[goal.evaluate(A, values, stack)]) {
                Countermodel cm{d, A.name(), {}};
                for (std::size_t i = 0; i < slots.size(); ++i)
                    cm.valuation[slots[i]] = values[i];
                verdict.holds = false;
                verdict.countermodel = std::move(cm);
                return verdict;
            }
            for (std::size_t i = values.size(); i-- > 0;) {
                if (++values[i] < n)
                    break;
                values[i] = 0;
            }
        }
    }
    return verdict;
}

EntailmentVerdict entails(const FiniteAlgebra& A, std::span<const Formula> premises, const Formula& conclusion,
                          const Caps& caps)
{
    return entails(std::span(&A, 1), premises, conclusion, caps);
}

EntailmentVerdict theorem(std::span<const FiniteAlgebra> algebras, const Formula& formula, const Caps& caps)
{
    return entails(algebras, {}, formula, caps);
}

EntailmentVerdict theorem(const FiniteAlgebra& A, const Formula& formula, const Caps& caps)
{
    return entails(std::span(&A, 1), {}, formula, caps);
}

bool is_countermodel(const FiniteAlgebra& A, const Valuation& v, std::span<const Formula> premises,
                     const Formula& conclusion)
{
    for (const auto& p : premises)
        if (!designated(A, evaluate(A, v, p)))
            return false;
    return !designated(A, evaluate(A, v, conclusion));
}

// ---------------------------------------------------------------------------
// Variable sharing

namespace {

using Mask = std::vector<std::uint64_t>;

Mask empty_mask(std::size_t n) { return Mask((n + 63) / 64, 0); }
void set_bit(Mask& m, std::size_t i) { m[i / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const Mask& m, std::size_t i) { return (m[i / 64] >> (i % 64)) & 1; }
bool subset(const Mask& a, const Mask& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i])
            return false;
    return true;
}

} // namespace

VspScanResult vsp_scan(std::span<const FiniteAlgebra> algebras, std::size_t size_bound, std::size_t vars_per_side,
                       const Caps& caps)
{
    std::vector<std::string> left, right;
    for (std::size_t i = 0; i < vars_per_side; ++i) {
        const std::string suffix = vars_per_side == 1 ? "" : std::to_string(i + 1);
        left.push_back("p" + suffix);
        right.push_back("q" + suffix);
    }

    TermEnumerator terms(std::vector<FiniteAlgebra>(algebras.begin(), algebras.end()), left, caps);
    terms.run(size_bound);
    const auto& space = terms.coordinates();
    const std::size_t functions = terms.element_count();

    // image[f][d]: values the function takes in algebra d. allowed[f][d]:
    // consequent values y with x -> y designated for every image value x.
    std::vector<std::vector<Mask>> image(functions), allowed(functions);
    for (std::size_t f = 0; f < functions; ++f) {
        auto values = terms.values(f);
        for (std::size_t d = 0; d < algebras.size(); ++d) {
            const auto& A = algebras[d];
            Mask im = empty_mask(A.size());
            for (std::size_t c = 0; c < space.count(d); ++c)
                set_bit(im, values[space.offset(d) + c]);
            Mask ok = empty_mask(A.size());
            for (Element y = 0; y < A.size(); ++y) {
                bool all = true;
                for (Element x = 0; x < A.size() && all; ++x)
                    if (test_bit(im, x) && !designated(A, A.arrow(x, y)))
                        all = false;
                if (all)
                    set_bit(ok, y);
            }
            image[f].push_back(std::move(im));
            allowed[f].push_back(std::move(ok));
        }
    }

    VspScanResult result;
    result.functions_per_side = functions;
    for (std::size_t f = 0; f < functions; ++f)
        for (std::size_t g = 0; g < functions; ++g) {
            ++result.pairs_checked;
            bool violation = true;
            for (std::size_t d = 0; d < algebras.size() && violation; ++d)
                violation = subset(image[g][d], allowed[f][d]);
            if (!violation)
                continue;
            Formula antecedent = terms.representative(f);
            Formula consequent = terms.representative(g);
            for (std::size_t i = 0; i < vars_per_side; ++i)
                consequent = consequent.substitute(left[i], Formula::variable(right[i]));
            if (!theorem(algebras, Formula::implies(antecedent, consequent), caps).holds)
                throw std::logic_error("vsp_scan: image test and decision procedure disagree on " +
                                       antecedent.to_string() + " -> " + consequent.to_string());
            result.violations.push_back({std::move(antecedent), std::move(consequent)});
        }
    return result;
}

} // namespace relog
