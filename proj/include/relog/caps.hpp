#pragma once

#include <cstddef>

namespace relog {

/// Size budgets shared by the search engines. Every search checks the
/// relevant field before allocating and throws CapExceeded when over.
struct Caps {
    /// Elements of a constructed algebra (powers).
    std::size_t max_elements = 10'000'000;
    /// Cells of one materialized binary operation table (n * n).
    std::size_t max_table_cells = std::size_t{1} << 22;
    /// Algebras larger than this are refused by the exhaustive searches
    /// (subuniverses, congruences, morphisms).
    std::size_t max_search_size = 256;
    /// Subuniverses or congruences collected by one enumeration.
    std::size_t max_lattice_members = std::size_t{1} << 20;
    /// Valuations enumerated by one entailment check, per algebra.
    std::size_t max_valuations = 10'000'000;
    /// Coordinates (valuations of the generators) of a free algebra.
    std::size_t max_free_coordinates = 216;
    /// Elements of a free algebra or of a term enumeration.
    std::size_t max_free_elements = 1'000'000;
};

} // namespace relog
