#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relog/logic.hpp"
#include "relog/terms.hpp"

namespace relog {

/// The free algebra on k generators over the variety of a finite class,
/// realized inside a direct power: one coordinate per (algebra, valuation).
class FreeAlgebra {
public:
    explicit FreeAlgebra(std::shared_ptr<const TermEnumerator> terms) : terms_(std::move(terms)) {}

    const std::vector<std::string>& generators() const { return terms_->variables(); }
    std::size_t size() const { return terms_->element_count(); }
    std::size_t coordinate_count() const { return terms_->coordinate_count(); }
    std::span<const std::uint8_t> values(std::size_t element) const { return terms_->values(element); }
    Formula representative(std::size_t element) const { return terms_->representative(element); }
    std::size_t representative_size(std::size_t element) const { return terms_->term_size(element); }
    std::optional<std::size_t> find(std::span<const std::uint8_t> values) const { return terms_->find(values); }
    const TermEnumerator& terms() const { return *terms_; }

private:
    std::shared_ptr<const TermEnumerator> terms_;
};

/// Default generator names: p, q, r for k <= 3, else p1..pk.
std::vector<std::string> generator_names(std::size_t k);

FreeAlgebra free_algebra(const FiniteAlgebra& algebra, std::size_t k, const Caps& caps = {});
FreeAlgebra free_algebra(std::span<const FiniteAlgebra> algebras, std::vector<std::string> generators,
                         const Caps& caps = {});

struct InterpolationProblem {
    std::vector<Formula> sigma;
    std::vector<Formula> gamma;
    Formula alpha;
};

struct InterpolationResult {
    Formula delta;
    std::size_t size = 0;
    /// var(sigma, alpha) intersected with var(gamma).
    std::vector<std::string> shared;
    EntailmentVerdict gamma_entails_delta;
    EntailmentVerdict sigma_delta_entails_alpha;
    /// Free-algebra elements tested before the witness.
    std::size_t candidates_examined = 0;
};

/// var(sigma, alpha) & var(gamma), sorted.
std::vector<std::string> shared_variables(std::span<const Formula> sigma, std::span<const Formula> gamma,
                                          const Formula& alpha);

/// Finds the first delta over the shared variables, in free-algebra
/// discovery order, with gamma |= delta and sigma, delta |= alpha.
/// Throws NoSharedVariables, NotEntailed, CapExceeded, NoInterpolantFound.
InterpolationResult maehara_interpolant(std::span<const Formula> sigma, std::span<const Formula> gamma,
                                        const Formula& alpha, std::span<const FiniteAlgebra> algebras,
                                        const Caps& caps = {});
InterpolationResult maehara_interpolant(const InterpolationProblem& problem, std::span<const FiniteAlgebra> algebras,
                                        const Caps& caps = {});

InterpolationResult deductive_interpolant(std::span<const Formula> gamma, const Formula& alpha,
                                          std::span<const FiniteAlgebra> algebras, const Caps& caps = {});

struct InterpolantCheck {
    bool holds = false;
    bool variables_ok = false;
    std::vector<std::string> stray_variables;
    EntailmentVerdict gamma_entails_delta;
    EntailmentVerdict sigma_delta_entails_alpha;
};

InterpolantCheck verify_interpolant(std::span<const Formula> sigma, std::span<const Formula> gamma,
                                    const Formula& alpha, const Formula& delta,
                                    std::span<const FiniteAlgebra> algebras, const Caps& caps = {});

} // namespace relog
