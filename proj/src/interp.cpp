#include "relog/interp.hpp"

#include <algorithm>
#include <stdexcept>

#include "relog/error.hpp"

namespace relog {

std::vector<std::string> generator_names(std::size_t k)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i)
        names.push_back(k <= 3 ? std::string(1, "pqr"[i]) : "p" + std::to_string(i + 1));
    return names;
}

FreeAlgebra free_algebra(std::span<const FiniteAlgebra> algebras, std::vector<std::string> generators, const Caps& caps)
{
    if (generators.empty())
        throw ArityError("a free algebra needs at least one generator");
    auto terms = std::make_shared<TermEnumerator>(std::vector<FiniteAlgebra>(algebras.begin(), algebras.end()),
                                                  std::move(generators), caps);
    terms->run();
    return FreeAlgebra(std::move(terms));
}

FreeAlgebra free_algebra(const FiniteAlgebra& algebra, std::size_t k, const Caps& caps)
{
    return free_algebra(std::span(&algebra, 1), generator_names(k), caps);
}

std::vector<std::string> shared_variables(std::span<const Formula> sigma, std::span<const Formula> gamma,
                                          const Formula& alpha)
{
    std::set<std::string> left, right;
    for (const auto& f : sigma)
        f.collect_variables(left);
    alpha.collect_variables(left);
    for (const auto& f : gamma)
        f.collect_variables(right);
    std::vector<std::string> out;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(out));
    return out;
}

namespace {

std::string describe(const Countermodel& cm, const FiniteAlgebra& A)
{
    std::string out = cm.algebra + ":";
    for (const auto& [var, value] : cm.valuation)
        out += " " + var + "=" + A.element_name(value);
    return out;
}

// Marks the shared-variable coordinates (local to A) reached by some
// valuation that designates every formula in `premises` and, when given,
// leaves `goal` undesignated.
std::vector<bool> projection(const FiniteAlgebra& A, std::span<const Formula> premises, const Formula* goal,
                             const std::vector<std::string>& shared, std::size_t coordinates, const Caps& caps)
{
    std::set<std::string> names;
    for (const auto& f : premises)
        f.collect_variables(names);
    if (goal)
        goal->collect_variables(names);
    const std::vector<std::string> slots(names.begin(), names.end());
    std::vector<std::size_t> position;
    for (const auto& s : shared)
        position.push_back(static_cast<std::size_t>(std::find(slots.begin(), slots.end(), s) - slots.begin()));

    std::vector<CompiledFormula> compiled;
    for (const auto& f : premises)
        compiled.emplace_back(f, slots);
    std::optional<CompiledFormula> target;
    if (goal)
        target.emplace(*goal, slots);

    const auto n = static_cast<Element>(A.size());
    std::size_t total = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (total > caps.max_valuations / n)
            throw CapExceeded("interpolation over " + A.name() + " needs more than " +
                              std::to_string(caps.max_valuations) + " valuations");
        total *= n;
    }
    const auto mask = designated_mask(A);
    std::vector<bool> reached(coordinates, false);
    std::vector<Element> values(slots.size(), 0), stack;
    for (std::size_t count = 0; count < total; ++count) {
        bool ok = std::all_of(compiled.begin(), compiled.end(),
                              [&](const CompiledFormula& f) { return mask[f.evaluate(A, values, stack)]; });
        if (ok && target)
            ok = !mask[target->evaluate(A, values, stack)];
        if (ok) {
            std::size_t c = 0;
            for (auto p : position)
                c = c * n + values[p];
            reached[c] = true;
        }
        for (std::size_t i = values.size(); i-- > 0;) {
            if (++values[i] < n)
                break;
            values[i] = 0;
        }
    }
    return reached;
}

struct Constraint {
    std::size_t coordinate;
    std::size_t algebra;
    bool designated;
};

} // namespace

InterpolationResult maehara_interpolant(std::span<const Formula> sigma, std::span<const Formula> gamma,
                                        const Formula& alpha, std::span<const FiniteAlgebra> algebras,
                                        const Caps& caps)
{
    auto shared = shared_variables(sigma, gamma, alpha);
    if (shared.empty())
        throw NoSharedVariables("var(sigma, alpha) and var(gamma) are disjoint");

    std::vector<Formula> premises(sigma.begin(), sigma.end());
    premises.insert(premises.end(), gamma.begin(), gamma.end());
    auto pre = entails(algebras, premises, alpha, caps);
    if (!pre.holds)
        throw NotEntailed("sigma, gamma do not entail alpha; countermodel " +
                          describe(*pre.countermodel, algebras[pre.countermodel->algebra_index]));

    TermEnumerator terms(std::vector<FiniteAlgebra>(algebras.begin(), algebras.end()), shared, caps);
    const auto& space = terms.coordinates();

    // delta works iff it is designated wherever gamma can be, and
    // undesignated wherever sigma holds while alpha fails.
    std::vector<Constraint> constraints;
    std::vector<std::vector<bool>> masks;
    for (std::size_t d = 0; d < algebras.size(); ++d) {
        const auto& A = algebras[d];
        masks.push_back(designated_mask(A));
        auto must = projection(A, gamma, nullptr, shared, space.count(d), caps);
        auto must_not = projection(A, sigma, &alpha, shared, space.count(d), caps);
        for (std::size_t c = 0; c < space.count(d); ++c) {
            if (must[c])
                constraints.push_back({space.offset(d) + c, d, true});
            if (must_not[c])
                constraints.push_back({space.offset(d) + c, d, false});
        }
    }

    std::size_t examined = 0;
    std::optional<std::size_t> witness;
    auto test = [&](std::size_t e) {
        ++examined;
        auto values = terms.values(e);
        for (const auto& k : constraints)
            if (masks[k.algebra][values[k.coordinate]] != k.designated)
                return false;
        witness = e;
        return true;
    };
    terms.run(0, test);
    if (!witness)
        throw NoInterpolantFound("free algebra over {" + [&] {
            std::string s;
            for (const auto& v : shared)
                s += (s.empty() ? "" : ",") + v;
            return s;
        }() + "} exhausted after " + std::to_string(examined) + " elements without an interpolant");

    const Formula delta = terms.representative(*witness);
    std::vector<Formula> with_delta(sigma.begin(), sigma.end());
    with_delta.push_back(delta);
    InterpolationResult result{delta,
                               delta.size(),
                               std::move(shared),
                               entails(algebras, gamma, delta, caps),
                               entails(algebras, with_delta, alpha, caps),
                               examined};
    if (!result.gamma_entails_delta.holds || !result.sigma_delta_entails_alpha.holds)
        throw std::logic_error("interpolant " + delta.to_string() + " failed re-verification");
    return result;
}

InterpolationResult maehara_interpolant(const InterpolationProblem& problem, std::span<const FiniteAlgebra> algebras,
                                        const Caps& caps)
{
    return maehara_interpolant(problem.sigma, problem.gamma, problem.alpha, algebras, caps);
}

InterpolationResult deductive_interpolant(std::span<const Formula> gamma, const Formula& alpha,
                                          std::span<const FiniteAlgebra> algebras, const Caps& caps)
{
    return maehara_interpolant({}, gamma, alpha, algebras, caps);
}

InterpolantCheck verify_interpolant(std::span<const Formula> sigma, std::span<const Formula> gamma,
                                    const Formula& alpha, const Formula& delta,
                                    std::span<const FiniteAlgebra> algebras, const Caps& caps)
{
    InterpolantCheck check;
    const auto shared = shared_variables(sigma, gamma, alpha);
    for (const auto& v : delta.variables())
        if (!std::binary_search(shared.begin(), shared.end(), v))
            check.stray_variables.push_back(v);
    check.variables_ok = check.stray_variables.empty();
    check.gamma_entails_delta = entails(algebras, gamma, delta, caps);
    std::vector<Formula> with_delta(sigma.begin(), sigma.end());
    with_delta.push_back(delta);
    check.sigma_delta_entails_alpha = entails(algebras, with_delta, alpha, caps);
    check.holds = check.variables_ok && check.gamma_entails_delta.holds && check.sigma_delta_entails_alpha.holds;
    return check;
}

} // namespace relog
