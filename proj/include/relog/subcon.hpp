#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relog/algebra.hpp"

namespace relog {

/// An equivalence relation on an algebra's universe, held as a block id per
/// element. Block ids are canonical: numbered by first occurrence, so two
/// Congruence values are equal iff they describe the same partition.
class Congruence {
public:
    Congruence() = default;
    /// Canonicalizes an arbitrary labelling.
    explicit Congruence(std::vector<std::uint32_t> labels);

    static Congruence identity(std::size_t n);
    static Congruence full(std::size_t n);

    std::size_t size() const noexcept { return block_.size(); }
    std::size_t block_count() const noexcept { return blocks_; }
    std::uint32_t block_of(Element x) const { return block_.at(x); }
    const std::vector<std::uint32_t>& labels() const noexcept { return block_; }
    bool related(Element x, Element y) const { return block_.at(x) == block_.at(y); }
    bool is_identity() const noexcept { return blocks_ == block_.size(); }
    bool is_full() const noexcept { return blocks_ <= 1; }
    /// Members of each block, blocks ordered by id, members ascending.
    std::vector<std::vector<Element>> blocks() const;
    bool refines(const Congruence& coarser) const;

    friend bool operator==(const Congruence&, const Congruence&) = default;
    friend auto operator<=>(const Congruence& a, const Congruence& b) { return a.block_ <=> b.block_; }

private:
    std::vector<std::uint32_t> block_;
    std::size_t blocks_ = 0;
};

Congruence intersect(const Congruence& a, const Congruence& b);
/// Equivalence join (transitive closure of the union).
Congruence join(const Congruence& a, const Congruence& b);

/// True iff the partition is compatible with every operation.
bool is_congruence(const FiniteAlgebra& algebra, const Congruence& theta);

/// A subset of the universe closed under all operations; members sorted.
struct Subuniverse {
    std::vector<Element> members;

    bool contains(Element x) const;
    std::size_t size() const noexcept { return members.size(); }
    friend bool operator==(const Subuniverse&, const Subuniverse&) = default;
};

/// Canonical order: by size, then lexicographically on the members.
bool canonical_less(const Subuniverse& a, const Subuniverse& b);

bool is_closed(const FiniteAlgebra& algebra, std::span<const Element> members);

Subuniverse generated_subuniverse(const FiniteAlgebra& algebra, std::span<const Element> seed);

/// All subuniverses in canonical order, enumerated by closure from
/// generated subuniverses rather than by powerset filtering. With
/// `proper_nonempty_only` the empty set and the whole universe are dropped.
std::vector<Subuniverse> all_subuniverses(const FiniteAlgebra& algebra, bool proper_nonempty_only,
                                          const Caps& caps = {});

/// The algebra on a subuniverse, keeping element names and relative order.
FiniteAlgebra subalgebra(const FiniteAlgebra& algebra, const Subuniverse& sub);

/// Least congruence containing (x, y), by closing under the unary
/// translations of the basic operations.
Congruence principal_congruence(const FiniteAlgebra& algebra, Element x, Element y);
/// Least congruence containing all the given pairs.
Congruence generated_congruence(const FiniteAlgebra& algebra, std::span<const std::pair<Element, Element>> pairs);

/// All congruences as joins of principal congruences, sorted with the
/// identity first and the full congruence last.
std::vector<Congruence> congruence_lattice(const FiniteAlgebra& algebra, const Caps& caps = {});

/// Only congruences are the identity and the full one, and |A| > 1.
bool is_simple(const FiniteAlgebra& algebra, const Caps& caps = {});
/// The identity congruence is meet-irreducible.
bool is_fsi(const FiniteAlgebra& algebra, const Caps& caps = {});

/// Block algebra with induced tables. Throws NotACongruence.
FiniteAlgebra quotient(const FiniteAlgebra& algebra, const Congruence& theta);

struct CepWitness {
    FiniteAlgebra inner;
    FiniteAlgebra outer;
    /// inner element index -> outer element index.
    std::vector<Element> embedding;
    Congruence theta;
    bool extendable = false;
    /// Present iff extendable; its restriction to the image equals theta.
    std::optional<Congruence> extension;
};

/// One witness per congruence of the subalgebra on `inner`, each decided by
/// exhaustive search over the congruences of `outer`.
std::vector<CepWitness> check_cep_pair(const Subuniverse& inner, const FiniteAlgebra& outer, const Caps& caps = {});

/// Restriction of a congruence of the outer algebra along an embedding.
Congruence restrict_congruence(const Congruence& outer, std::span<const Element> embedding);

/// HS(A): quotients of subalgebras, deduplicated up to isomorphism, in
/// order of first discovery (subuniverses in canonical order, congruences in
/// lattice order).
std::vector<FiniteAlgebra> hs_class(const FiniteAlgebra& algebra, bool include_trivial = false,
                                    const Caps& caps = {});

struct CepClassReport {
    bool holds = true;
    std::size_t pairs_checked = 0;
    std::size_t witnesses_checked = 0;
    /// Every non-extendable witness found.
    std::vector<CepWitness> failures;
};

/// CEP for the pairs (A, B) with B in `members` and A a subalgebra of B.
CepClassReport check_cep_class(std::span<const FiniteAlgebra> members, const Caps& caps = {});

} // namespace relog
