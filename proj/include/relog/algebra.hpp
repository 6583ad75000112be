#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relog/caps.hpp"

namespace relog {

/// Index of an element inside one algebra (0-based, in file order).
using Element = std::uint32_t;

enum class Operation : std::uint8_t { meet, join, fusion, neg };

inline constexpr Operation binary_operations[] = {Operation::meet, Operation::join, Operation::fusion};

std::string_view operation_name(Operation op);
std::optional<Operation> parse_operation(std::string_view name);

/// A finite algebra in the signature {meet, join, fusion, neg}.
///
/// Immutable after construction. Tables are row-major with the first
/// argument selecting the row. The constructor checks that every table is
/// total and every entry names an element; it does not check any axiom
/// (see validate_relevant_algebra).
class FiniteAlgebra {
public:
    FiniteAlgebra() = default;
    FiniteAlgebra(std::string name,
                  std::vector<std::string> elements,
                  std::vector<Element> meet,
                  std::vector<Element> join,
                  std::vector<Element> fusion,
                  std::vector<Element> neg);

    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& element_names() const noexcept { return names_; }
    const std::string& element_name(Element x) const { return names_.at(x); }
    std::optional<Element> find(std::string_view element) const;
    /// Like find, but throws UnknownElement.
    Element at(std::string_view element) const;

    Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
    Element join(Element x, Element y) const { return join_[x * size() + y]; }
    Element fusion(Element x, Element y) const { return fusion_[x * size() + y]; }
    Element neg(Element x) const { return neg_[x]; }
    /// x -> y, defined as neg(x . neg y).
    Element arrow(Element x, Element y) const { return neg(fusion(x, neg(y))); }
    bool leq(Element x, Element y) const { return meet(x, y) == x; }

    Element apply(Operation op, Element x, Element y = 0) const;
    std::span<const Element> table(Operation op) const;

    /// Same tables and element names; the algebra name is ignored.
    bool same_tables(const FiniteAlgebra& other) const;
    FiniteAlgebra renamed(std::string name) const;

private:
    std::string name_;
    std::vector<std::string> names_;
    std::vector<Element> meet_, join_, fusion_, neg_;
};

/// Result of checking one named axiom over all element tuples.
struct AxiomReport {
    std::string axiom;
    bool holds = true;
    /// Present iff holds is false: the values of x, y, z (as many as the
    /// axiom's arity) that falsify it.
    std::optional<std::vector<Element>> counterexample;
};

/// One entry of the relevant-algebra checklist.
struct Axiom {
    std::string name;
    unsigned arity;
    std::function<bool(const FiniteAlgebra&, std::span<const Element>)> holds;
};

/// Distributive lattice, De Morgan involution, commutative associative
/// monotone square-increasing fusion distributing over join, and
/// residuation of -> with respect to fusion.
const std::vector<Axiom>& relevant_algebra_axioms();
/// The checklist restricted to the given axiom names (unknown names throw
/// UnknownElement).
std::vector<Axiom> select_axioms(std::span<const std::string> names);

std::vector<AxiomReport> validate_relevant_algebra(const FiniteAlgebra& algebra);
std::vector<AxiomReport> validate_relevant_algebra(const FiniteAlgebra& algebra, std::span<const Axiom> axioms);
bool all_hold(std::span<const AxiomReport> reports);

inline Element arrow(const FiniteAlgebra& algebra, Element x, Element y) { return algebra.arrow(x, y); }

/// Text format: `algebra <name>`, `elements ...`, then `op <name> <arity>`
/// blocks. `#` starts a comment.
FiniteAlgebra load_algebra(std::string_view source);
FiniteAlgebra load_algebra_file(const std::filesystem::path& path);
std::string serialize(const FiniteAlgebra& algebra);

/// Directory searched for builtin data files: $RELOG_DATA_DIR if set,
/// otherwise the directory configured at build time.
std::filesystem::path data_directory();

/// The six-element crystal lattice bot < t < a, b < f < top.
FiniteAlgebra builtin_crystal();
/// Belnap's eight-element model, read from `belnap_m.alg` in the data
/// directory. Throws DataFileMissing.
FiniteAlgebra builtin_belnap_m();
/// The two-element Boolean algebra with fusion = meet.
FiniteAlgebra builtin_boolean2();
FiniteAlgebra trivial_algebra(std::string element = "o");

/// Resolves `crystal`, `belnap-m`, `boolean2` or a path to an algebra file.
FiniteAlgebra resolve_algebra(std::string_view name_or_path);

/// Direct power with componentwise tables. Throws CapExceeded.
FiniteAlgebra power(const FiniteAlgebra& algebra, unsigned exponent, const Caps& caps = {});

/// Cartesian product with componentwise tables. Throws CapExceeded.
FiniteAlgebra product(const FiniteAlgebra& left, const FiniteAlgebra& right, const Caps& caps = {});

} // namespace relog
