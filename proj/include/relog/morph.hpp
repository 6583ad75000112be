#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relog/algebra.hpp"
#include "relog/subcon.hpp"

namespace relog {

enum class MorphismKind { hom, embedding, isomorphism, automorphism };

std::string_view kind_name(MorphismKind kind);

/// An operation-preserving map between two algebras. `map[x]` is the image
/// of source element x.
struct Morphism {
    std::string source;
    std::string target;
    std::vector<Element> map;
    MorphismKind kind = MorphismKind::hom;

    Element operator()(Element x) const { return map.at(x); }
    friend bool operator==(const Morphism& a, const Morphism& b) { return a.map == b.map; }
};

/// Checks all four operations pointwise over every tuple.
bool preserves_operations(const FiniteAlgebra& source, const FiniteAlgebra& target, std::span<const Element> map);
bool is_injective(std::span<const Element> map);

/// Classifies a valid homomorphism (embedding iff injective, isomorphism iff
/// bijective; automorphism when additionally source and target coincide).
MorphismKind classify(const FiniteAlgebra& source, const FiniteAlgebra& target, std::span<const Element> map,
                      bool same_algebra);

/// Composition `second after first`.
Morphism compose(const Morphism& second, const Morphism& first);

/// Options for the backtracking search behind every enumeration here.
struct HomSearch {
    bool injective = false;
    /// Pre-assigned images (source element -> target element).
    std::vector<std::pair<Element, Element>> fixed;
    /// Stop after this many results (0 = all).
    std::size_t limit = 0;
};

/// All maps satisfying the search options, lexicographic on the map.
std::vector<std::vector<Element>> search_homomorphisms(const FiniteAlgebra& source, const FiniteAlgebra& target,
                                                       const HomSearch& options, const Caps& caps = {});

std::vector<Morphism> homomorphisms(const FiniteAlgebra& source, const FiniteAlgebra& target, const Caps& caps = {});
std::vector<Morphism> embeddings(const FiniteAlgebra& source, const FiniteAlgebra& target, const Caps& caps = {},
                                 std::size_t limit = 0);
std::vector<Morphism> isomorphisms(const FiniteAlgebra& source, const FiniteAlgebra& target, const Caps& caps = {},
                                   std::size_t limit = 0);
std::vector<Morphism> automorphisms(const FiniteAlgebra& algebra, const Caps& caps = {});

/// An isomorphism between two subalgebras of the same algebra, in the
/// coordinates of the ambient algebra.
struct PartialIsomorphism {
    Subuniverse domain;
    Subuniverse codomain;
    /// Pairs (x, phi(x)) in ambient indices, sorted by x.
    std::vector<std::pair<Element, Element>> pairs;
};

struct ExtensionCertificate {
    PartialIsomorphism phi;
    /// Automorphism of the ambient algebra restricting to phi.
    Morphism extension;
};

struct ExtensibilityReport {
    bool holds = true;
    std::size_t isomorphisms_checked = 0;
    std::vector<ExtensionCertificate> certificates;
    std::optional<PartialIsomorphism> failure;
};

/// Every isomorphism between subalgebras with at least two elements extends
/// to an automorphism. Stops at the first failure.
ExtensibilityReport is_extensible(const FiniteAlgebra& algebra, const Caps& caps = {});

/// A pair of maps out of a common apex: to_left: apex -> left and
/// to_right: apex -> right. For AP both are embeddings; for TIP to_right
/// must be an embedding and to_left may be any homomorphism.
struct Span {
    FiniteAlgebra apex;
    FiniteAlgebra left;
    FiniteAlgebra right;
    Morphism to_left;
    Morphism to_right;
};

enum class AmalgamMode { ap, tip };

/// Throws ArityError when the legs do not satisfy the mode's requirements.
void check_span(const Span& span, AmalgamMode mode);

struct Amalgam {
    FiniteAlgebra target;
    /// Size of the generator power the target was taken from.
    unsigned exponent = 1;
    Morphism from_left;
    Morphism from_right;
    /// The common composite apex -> target (commuting evidence).
    std::vector<Element> composite;
};

struct AmalgamResult {
    std::optional<Amalgam> amalgam;
    /// Largest power exponent searched.
    unsigned exhausted_bound = 0;
    std::size_t candidates_tried = 0;
};

/// Searches the generator, then its powers up to `bound`, for arms
/// from_left, from_right with from_left . to_left = from_right . to_right.
/// AP mode requires both arms to be embeddings; TIP mode only from_left.
AmalgamResult amalgamate_span(const Span& span, AmalgamMode mode, const FiniteAlgebra& generator, unsigned bound = 2,
                              const Caps& caps = {});

/// True iff the amalgam's arms are homomorphisms, the square commutes, and
/// the mode's injectivity requirements hold.
bool verify_amalgam(const Span& span, const Amalgam& amalgam, AmalgamMode mode);

} // namespace relog
