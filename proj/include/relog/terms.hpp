#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relog/algebra.hpp"
#include "relog/formula.hpp"

namespace relog {

/// Coordinates of a term function over a class of algebras: one coordinate
/// per (algebra, valuation of the variables). Valuations are in
/// lexicographic order with the first variable most significant.
class CoordinateSpace {
public:
    CoordinateSpace(std::span<const FiniteAlgebra> algebras, std::size_t variables, const Caps& caps);

    std::size_t size() const noexcept { return total_; }
    std::size_t variable_count() const noexcept { return variables_; }
    std::size_t algebra_count() const noexcept { return offsets_.size(); }
    /// First coordinate belonging to algebra d, and how many it has.
    std::size_t offset(std::size_t d) const { return offsets_.at(d); }
    std::size_t count(std::size_t d) const { return counts_.at(d); }
    /// Value of variable v at a coordinate local to algebra d.
    Element variable_value(std::size_t d, std::size_t local, std::size_t v) const;
    std::size_t algebra_of(std::size_t coordinate) const;

private:
    std::vector<std::size_t> offsets_, counts_, base_;
    std::size_t variables_ = 0;
    std::size_t total_ = 0;
};

/// Breadth-first enumeration of term functions by formula size.
///
/// Level 1 holds the variables; level s holds every function first reached
/// by a formula with s nodes, built from the representatives of lower
/// levels (~ on level s-1, then meet, join and fusion over splits
/// i + j = s - 1). Functions are deduplicated by their value vector, so
/// each element's representative is a minimum-size formula.
class TermEnumerator {
public:
    TermEnumerator(std::vector<FiniteAlgebra> algebras, std::vector<std::string> variables, const Caps& caps = {});

    enum class Step { progressed, complete, stopped };

    /// Builds the next level. `on_new` sees each new element in discovery
    /// order; returning true stops the enumeration mid-level for good (a
    /// stopped enumerator throws std::logic_error if advanced). Returns
    /// `complete` once the element set is closed under all operations.
    /// Throws CapExceeded when the element budget runs out.
    Step next_level(const std::function<bool(std::size_t)>& on_new = {});
    /// Runs levels until closure (or until `max_size` if nonzero).
    Step run(std::size_t max_size = 0, const std::function<bool(std::size_t)>& on_new = {});

    bool complete() const noexcept { return complete_; }
    std::size_t levels_built() const noexcept { return level_begin_.size() - 1; }
    std::size_t element_count() const noexcept { return count_; }
    std::size_t coordinate_count() const noexcept { return stride_; }
    const CoordinateSpace& coordinates() const noexcept { return space_; }
    const std::vector<FiniteAlgebra>& algebras() const noexcept { return algebras_; }
    const std::vector<std::string>& variables() const noexcept { return variables_; }

    std::span<const std::uint8_t> values(std::size_t element) const
    {
        return {arena_.data() + element * stride_, stride_};
    }
    std::size_t term_size(std::size_t element) const { return records_.at(element).size; }
    Formula representative(std::size_t element) const;
    /// Elements whose representative has exactly `size` nodes.
    std::pair<std::size_t, std::size_t> level(std::size_t size) const;
    /// Index of the element with the given value vector, if present.
    std::optional<std::size_t> find(std::span<const std::uint8_t> values) const;

private:
    struct Record {
        Connective op;
        std::uint32_t left, right;
        std::uint32_t size;
    };

    std::uint8_t* candidate();
    bool commit(Record record, const std::function<bool(std::size_t)>& on_new, bool& stop);
    std::uint64_t hash(const std::uint8_t* data) const;
    void grow_table();
    void compute(Connective op, std::size_t x, std::size_t y, std::uint8_t* out) const;

    std::vector<FiniteAlgebra> algebras_;
    std::vector<std::string> variables_;
    Caps caps_;
    CoordinateSpace space_;
    std::size_t stride_;
    // Per algebra: coordinate range and byte tables.
    struct Block {
        std::size_t begin, end, n;
        std::vector<std::uint8_t> neg, meet, join, fusion;
    };
    std::vector<Block> blocks_;
    bool commutative_ = true;

    std::vector<std::uint8_t> arena_;
    std::vector<Record> records_;
    std::vector<std::uint64_t> hashes_;
    std::vector<std::uint32_t> table_;
    std::size_t count_ = 0;
    // level_begin_[s - 1] = first element of level s; back() = count_.
    std::vector<std::size_t> level_begin_{0};
    std::size_t last_nonempty_ = 0;
    bool complete_ = false;
    bool stopped_ = false;
};

} // namespace relog
