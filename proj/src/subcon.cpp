#include "relog/subcon.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "relog/error.hpp"
#include "relog/morph.hpp"

namespace relog {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

    std::uint32_t find(std::uint32_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::uint32_t x, std::uint32_t y)
    {
        x = find(x);
        y = find(y);
        if (x == y)
            return false;
        if (x > y)
            std::swap(x, y);
        parent_[y] = x;
        return true;
    }

    std::vector<std::uint32_t> labels()
    {
        std::vector<std::uint32_t> out(parent_.size());
        for (std::uint32_t i = 0; i < parent_.size(); ++i)
            out[i] = find(i);
        return out;
    }

private:
    std::vector<std::uint32_t> parent_;
};

void check_search_size(const FiniteAlgebra& algebra, const Caps& caps)
{
    if (algebra.size() > caps.max_search_size)
        throw CapExceeded("algebra " + algebra.name() + " has " + std::to_string(algebra.size()) +
                          " elements, exhaustive search cap is " + std::to_string(caps.max_search_size));
}

} // namespace

// ---------------------------------------------------------------------------
// Congruence values

Congruence::Congruence(std::vector<std::uint32_t> labels)
{
    block_.resize(labels.size());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = std::find_if(seen.begin(), seen.end(), [&](auto& p) { return p.first == labels[i]; });
        if (it == seen.end()) {
            seen.emplace_back(labels[i], static_cast<std::uint32_t>(seen.size()));
            block_[i] = seen.back().second;
        } else {
            block_[i] = it->second;
        }
    }
    blocks_ = seen.size();
}

Congruence Congruence::identity(std::size_t n)
{
    std::vector<std::uint32_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0u);
    return Congruence(std::move(labels));
}

Congruence Congruence::full(std::size_t n)
{
    return Congruence(std::vector<std::uint32_t>(n, 0));
}

std::vector<std::vector<Element>> Congruence::blocks() const
{
    std::vector<std::vector<Element>> out(blocks_);
    for (Element x = 0; x < block_.size(); ++x)
        out[block_[x]].push_back(x);
    return out;
}

bool Congruence::refines(const Congruence& coarser) const
{
    for (Element x = 0; x < block_.size(); ++x)
        for (Element y = x + 1; y < block_.size(); ++y)
            if (related(x, y) && !coarser.related(x, y))
                return false;
    return true;
}

Congruence intersect(const Congruence& a, const Congruence& b)
{
    std::vector<std::uint32_t> labels(a.size());
    for (Element x = 0; x < a.size(); ++x)
        labels[x] = a.block_of(x) * static_cast<std::uint32_t>(b.block_count()) + b.block_of(x);
    return Congruence(std::move(labels));
}

Congruence join(const Congruence& a, const Congruence& b)
{
    UnionFind uf(a.size());
    std::vector<Element> first_a(a.block_count(), ~Element{0}), first_b(b.block_count(), ~Element{0});
    for (Element x = 0; x < a.size(); ++x) {
        auto& fa = first_a[a.block_of(x)];
        auto& fb = first_b[b.block_of(x)];
        if (fa == ~Element{0}) fa = x; else uf.unite(fa, x);
        if (fb == ~Element{0}) fb = x; else uf.unite(fb, x);
    }
    return Congruence(uf.labels());
}

bool is_congruence(const FiniteAlgebra& A, const Congruence& theta)
{
    const auto n = static_cast<Element>(A.size());
    if (theta.size() != n)
        return false;
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            if (!theta.related(x, y))
                continue;
            if (!theta.related(A.neg(x), A.neg(y)))
                return false;
            for (Element z = 0; z < n; ++z)
                for (auto op : binary_operations)
                    if (!theta.related(A.apply(op, x, z), A.apply(op, y, z)) ||
                        !theta.related(A.apply(op, z, x), A.apply(op, z, y)))
                        return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Subuniverses

bool Subuniverse::contains(Element x) const
{
    return std::binary_search(members.begin(), members.end(), x);
}

bool canonical_less(const Subuniverse& a, const Subuniverse& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a.members < b.members;
}

bool is_closed(const FiniteAlgebra& A, std::span<const Element> members)
{
    std::vector<bool> in(A.size(), false);
    for (Element x : members)
        in.at(x) = true;
    for (Element x : members) {
        if (!in[A.neg(x)])
            return false;
        for (Element y : members)
            for (auto op : binary_operations)
                if (!in[A.apply(op, x, y)])
                    return false;
    }
    return true;
}

Subuniverse generated_subuniverse(const FiniteAlgebra& A, std::span<const Element> seed)
{
    std::vector<bool> in(A.size(), false);
    std::vector<Element> members;
    auto add = [&](Element x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
        }
    };
    for (Element x : seed)
        add(x);
    // Each new element is combined with every element that precedes it, in
    // both argument positions.
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Element x = members[i];
        add(A.neg(x));
        for (std::size_t j = 0; j <= i; ++j) {
            const Element y = members[j];
            for (auto op : binary_operations) {
                add(A.apply(op, x, y));
                add(A.apply(op, y, x));
            }
        }
    }
    std::sort(members.begin(), members.end());
    return Subuniverse{std::move(members)};
}

std::vector<Subuniverse> all_subuniverses(const FiniteAlgebra& A, bool proper_nonempty_only, const Caps& caps)
{
    check_search_size(A, caps);
    std::set<std::vector<Element>> found;
    std::vector<Subuniverse> frontier;
    auto record = [&](Subuniverse s) {
        if (found.insert(s.members).second) {
            if (found.size() > caps.max_lattice_members)
                throw CapExceeded("more than " + std::to_string(caps.max_lattice_members) + " subuniverses");
            frontier.push_back(std::move(s));
        }
    };
    record(generated_subuniverse(A, {}));
    // Every subuniverse is reached from a smaller one by adjoining one
    // element and closing.
    while (!frontier.empty()) {
        auto current = std::move(frontier.back());
        frontier.pop_back();
        for (Element x = 0; x < A.size(); ++x) {
            if (current.contains(x))
                continue;
            std::vector<Element> seed = current.members;
            seed.push_back(x);
            record(generated_subuniverse(A, seed));
        }
    }

    std::vector<Subuniverse> out;
    for (const auto& members : found) {
        if (proper_nonempty_only && (members.empty() || members.size() == A.size()))
            continue;
        out.push_back(Subuniverse{members});
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

FiniteAlgebra subalgebra(const FiniteAlgebra& A, const Subuniverse& sub)
{
    if (!is_closed(A, sub.members))
        throw NotASubuniverse("subset is not closed under the operations of " + A.name());
    const auto m = static_cast<Element>(sub.size());
    std::vector<Element> local(A.size(), ~Element{0});
    std::vector<std::string> names;
    for (Element i = 0; i < m; ++i) {
        local[sub.members[i]] = i;
        names.push_back(A.element_name(sub.members[i]));
    }
    std::vector<Element> tables[3];
    for (auto op : binary_operations) {
        auto& table = tables[static_cast<std::size_t>(op)];
        for (Element i = 0; i < m; ++i)
            for (Element j = 0; j < m; ++j)
                table.push_back(local[A.apply(op, sub.members[i], sub.members[j])]);
    }
    std::vector<Element> neg;
    for (Element i = 0; i < m; ++i)
        neg.push_back(local[A.neg(sub.members[i])]);

    std::string name = A.name() + "{";
    for (Element i = 0; i < m; ++i)
        name += (i ? "," : "") + names[i];
    name += "}";
    return FiniteAlgebra(std::move(name), std::move(names), std::move(tables[0]), std::move(tables[1]),
                         std::move(tables[2]), std::move(neg));
}

// ---------------------------------------------------------------------------
// Congruence generation

Congruence generated_congruence(const FiniteAlgebra& A, std::span<const std::pair<Element, Element>> pairs)
{
    const auto n = static_cast<Element>(A.size());
    UnionFind uf(n);
    std::vector<std::pair<Element, Element>> work;
    for (auto [x, y] : pairs)
        if (uf.unite(x, y))
            work.emplace_back(x, y);
    // Every merged pair is pushed once; applying all unary translations to
    // the pushed pairs yields a relation whose equivalence closure is the
    // congruence.
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        auto merge = [&](Element u, Element v) {
            if (uf.unite(u, v))
                work.emplace_back(u, v);
        };
        merge(A.neg(x), A.neg(y));
        for (Element c = 0; c < n; ++c)
            for (auto op : binary_operations) {
                merge(A.apply(op, x, c), A.apply(op, y, c));
                merge(A.apply(op, c, x), A.apply(op, c, y));
            }
    }
    return Congruence(uf.labels());
}

Congruence principal_congruence(const FiniteAlgebra& A, Element x, Element y)
{
    const std::pair<Element, Element> pair{x, y};
    return generated_congruence(A, std::span(&pair, 1));
}

std::vector<Congruence> congruence_lattice(const FiniteAlgebra& A, const Caps& caps)
{
    check_search_size(A, caps);
    const auto n = static_cast<Element>(A.size());
    std::set<Congruence> found;
    std::vector<Congruence> principal;
    found.insert(Congruence::identity(n));
    for (Element x = 0; x < n; ++x)
        for (Element y = x + 1; y < n; ++y) {
            auto theta = principal_congruence(A, x, y);
            if (found.insert(theta).second)
                principal.push_back(theta);
        }
    // Close under joins with principal congruences; every congruence of a
    // finite algebra is a finite join of principal ones.
    std::vector<Congruence> frontier(principal.begin(), principal.end());
    while (!frontier.empty()) {
        auto theta = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& p : principal) {
            auto j = join(theta, p);
            if (found.insert(j).second) {
                if (found.size() > caps.max_lattice_members)
                    throw CapExceeded("more than " + std::to_string(caps.max_lattice_members) + " congruences");
                frontier.push_back(std::move(j));
            }
        }
    }
    std::vector<Congruence> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const Congruence& a, const Congruence& b) {
        if (a.block_count() != b.block_count())
            return a.block_count() > b.block_count();
        return a < b;
    });
    return out;
}

bool is_simple(const FiniteAlgebra& A, const Caps& caps)
{
    if (A.size() <= 1)
        return false;
    auto lattice = congruence_lattice(A, caps);
    return lattice.size() == 2;
}

bool is_fsi(const FiniteAlgebra& A, const Caps& caps)
{
    auto lattice = congruence_lattice(A, caps);
    for (const auto& theta : lattice)
        for (const auto& phi : lattice)
            if (!theta.is_identity() && !phi.is_identity() && intersect(theta, phi).is_identity())
                return false;
    return true;
}

FiniteAlgebra quotient(const FiniteAlgebra& A, const Congruence& theta)
{
    if (!is_congruence(A, theta))
        throw NotACongruence("partition is not a congruence of " + A.name());
    auto blocks = theta.blocks();
    const auto m = static_cast<Element>(blocks.size());
    std::vector<std::string> names;
    for (const auto& block : blocks) {
        if (block.size() == 1) {
            names.push_back(A.element_name(block.front()));
            continue;
        }
        std::string name = "[";
        for (std::size_t i = 0; i < block.size(); ++i)
            name += (i ? "," : "") + A.element_name(block[i]);
        names.push_back(name + "]");
    }
    std::vector<Element> tables[3];
    for (auto op : binary_operations) {
        auto& table = tables[static_cast<std::size_t>(op)];
        for (Element i = 0; i < m; ++i)
            for (Element j = 0; j < m; ++j)
                table.push_back(theta.block_of(A.apply(op, blocks[i].front(), blocks[j].front())));
    }
    std::vector<Element> neg;
    for (Element i = 0; i < m; ++i)
        neg.push_back(theta.block_of(A.neg(blocks[i].front())));
    return FiniteAlgebra(A.name() + "/" + std::to_string(m), std::move(names), std::move(tables[0]),
                         std::move(tables[1]), std::move(tables[2]), std::move(neg));
}

// ---------------------------------------------------------------------------
// Congruence extension

Congruence restrict_congruence(const Congruence& outer, std::span<const Element> embedding)
{
    std::vector<std::uint32_t> labels;
    labels.reserve(embedding.size());
    for (Element x : embedding)
        labels.push_back(outer.block_of(x));
    return Congruence(std::move(labels));
}

std::vector<CepWitness> check_cep_pair(const Subuniverse& inner, const FiniteAlgebra& outer, const Caps& caps)
{
    auto sub = subalgebra(outer, inner);
    auto inner_lattice = congruence_lattice(sub, caps);
    auto outer_lattice = congruence_lattice(outer, caps);
    std::vector<CepWitness> out;
    for (const auto& theta : inner_lattice) {
        CepWitness w{sub, outer, inner.members, theta, false, std::nullopt};
        for (const auto& phi : outer_lattice)
            if (restrict_congruence(phi, inner.members) == theta) {
                w.extendable = true;
                w.extension = phi;
                break;
            }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<FiniteAlgebra> hs_class(const FiniteAlgebra& A, bool include_trivial, const Caps& caps)
{
    std::vector<FiniteAlgebra> out;
    for (const auto& sub : all_subuniverses(A, false, caps)) {
        if (sub.members.empty())
            continue;
        auto B = subalgebra(A, sub);
        for (const auto& theta : congruence_lattice(B, caps)) {
            auto Q = theta.is_identity() ? B : quotient(B, theta);
            if (Q.size() == 1 && !include_trivial)
                continue;
            bool duplicate = std::any_of(out.begin(), out.end(), [&](const FiniteAlgebra& C) {
                return C.size() == Q.size() && !isomorphisms(C, Q, caps, 1).empty();
            });
            if (!duplicate)
                out.push_back(std::move(Q));
        }
    }
    return out;
}

CepClassReport check_cep_class(std::span<const FiniteAlgebra> members, const Caps& caps)
{
    CepClassReport report;
    for (const auto& B : members) {
        for (const auto& sub : all_subuniverses(B, false, caps)) {
            if (sub.members.empty())
                continue;
            ++report.pairs_checked;
            for (auto& w : check_cep_pair(sub, B, caps)) {
                ++report.witnesses_checked;
                if (!w.extendable) {
                    report.holds = false;
                    report.failures.push_back(std::move(w));
                }
            }
        }
    }
    return report;
}

} // namespace relog
