#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relog/algebra.hpp"
#include "relog/formula.hpp"

namespace relog {

/// Assignment of elements to variables.
using Valuation = std::map<std::string, Element>;

/// Bottom-up table evaluation. Throws UnboundVariable.
Element evaluate(const FiniteAlgebra& algebra, const Valuation& valuation, const Formula& formula);

/// The truth filter {x : x -> x <= x}.
bool designated(const FiniteAlgebra& algebra, Element x);
std::vector<bool> designated_mask(const FiniteAlgebra& algebra);
std::vector<Element> designated_set(const FiniteAlgebra& algebra);

struct Countermodel {
    std::size_t algebra_index = 0;
    std::string algebra;
    Valuation valuation;
};

struct EntailmentVerdict {
    bool holds = true;
    /// Present iff holds is false: every premise designated, conclusion not.
    std::optional<Countermodel> countermodel;
    std::size_t valuations_checked = 0;
};

/// A formula compiled to a postfix program over variable slots, for
/// evaluating one formula under many valuations.
class CompiledFormula {
public:
    CompiledFormula(const Formula& formula, const std::vector<std::string>& slots);
    Element evaluate(const FiniteAlgebra& algebra, std::span<const Element> values) const;
    /// Same, reusing a caller-owned stack.
    Element evaluate(const FiniteAlgebra& algebra, std::span<const Element> values, std::vector<Element>& stack) const;

private:
    struct Instr {
        Connective op;
        std::uint32_t slot;
    };
    std::vector<Instr> code_;
};

/// premises |= conclusion over every algebra in `algebras`: each valuation
/// designating all premises designates the conclusion. The countermodel is
/// the lexicographically least valuation (variables in name order, first
/// most significant) in the first algebra that has one.
EntailmentVerdict entails(std::span<const FiniteAlgebra> algebras, std::span<const Formula> premises,
                          const Formula& conclusion, const Caps& caps = {});
EntailmentVerdict entails(const FiniteAlgebra& algebra, std::span<const Formula> premises, const Formula& conclusion,
                          const Caps& caps = {});

EntailmentVerdict theorem(std::span<const FiniteAlgebra> algebras, const Formula& formula, const Caps& caps = {});
EntailmentVerdict theorem(const FiniteAlgebra& algebra, const Formula& formula, const Caps& caps = {});

/// True iff the valuation designates every premise and not the conclusion.
bool is_countermodel(const FiniteAlgebra& algebra, const Valuation& valuation, std::span<const Formula> premises,
                     const Formula& conclusion);

struct VspViolation {
    Formula antecedent;
    Formula consequent;
};

struct VspScanResult {
    std::vector<VspViolation> violations;
    /// Distinct term functions per side found within the size bound.
    std::size_t functions_per_side = 0;
    std::size_t pairs_checked = 0;
};

/// Searches for theorems antecedent -> consequent whose sides use disjoint
/// variables: antecedents over p (or p1..pn), consequents over q (or
/// q1..qn), tree size at most `size_bound`, one representative per term
/// function. Each reported pair is re-checked with `theorem`.
VspScanResult vsp_scan(std::span<const FiniteAlgebra> algebras, std::size_t size_bound, std::size_t vars_per_side = 1,
                       const Caps& caps = {});

} // namespace relog
