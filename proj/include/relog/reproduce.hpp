#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "relog/interp.hpp"

namespace relog {

using Json = nlohmann::ordered_json;

/// Random formula of at most `max_size` nodes. Each node is a variable with
/// probability 1/2 (always, once the budget is spent), otherwise one of
/// ~ * & | chosen uniformly among those that fit; variables are uniform.
Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& variables, std::size_t max_size);

struct ProblemStats {
    std::size_t drawn = 0;
    std::size_t no_shared = 0;
    std::size_t not_entailed = 0;
};

/// Seeded interpolation problems over at most three variables with every
/// formula of size <= max_size, filtered to those with a nonempty shared
/// set and sigma, gamma |= alpha over `algebras`. Every third problem has
/// an empty sigma.
std::vector<InterpolationProblem> generate_problems(std::uint64_t seed, std::size_t count,
                                                    std::span<const FiniteAlgebra> algebras, std::size_t max_size = 4,
                                                    const Caps& caps = {}, ProblemStats* stats = nullptr);

struct ReproduceOptions {
    /// Stands in for the crystal lattice (fault injection). Defaults to it.
    std::optional<FiniteAlgebra> generator;
    std::uint64_t seed = 1;
    std::size_t instances = 500;
    std::size_t vsp_bound = 4;
    Caps caps;
    bool exploratory = true;
};

/// Runs every reproduction item in order and returns the report:
/// {"generator", "seed", "items": [{"id", "claim", "status", ...}],
/// "summary"}. Status is pass, fail, error or inconclusive; engine errors
/// are caught per item.
Json run_reproduction(const ReproduceOptions& options = {});

/// Item ids in run order.
const std::vector<std::string>& reproduce_item_ids();

// JSON views shared by the CLI and the report.
Json to_json(const FiniteAlgebra& algebra, const Countermodel& countermodel);
Json to_json(std::span<const FiniteAlgebra> algebras, const EntailmentVerdict& verdict);
Json to_json(std::span<const FiniteAlgebra> algebras, const InterpolationResult& result);

/// Class name of a library error ("CapExceeded", ...), or "Error".
std::string error_type(const std::exception& error);

} // namespace relog
