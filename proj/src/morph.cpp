#include "relog/morph.hpp"

#include <algorithm>

#include "relog/error.hpp"

namespace relog {

std::string_view kind_name(MorphismKind kind)
{
    switch (kind) {
    case MorphismKind::hom: return "hom";
    case MorphismKind::embedding: return "embedding";
    case MorphismKind::isomorphism: return "isomorphism";
    case MorphismKind::automorphism: return "automorphism";
    }
    return "?";
}

bool preserves_operations(const FiniteAlgebra& S, const FiniteAlgebra& T, std::span<const Element> map)
{
    const auto n = static_cast<Element>(S.size());
    if (map.size() != n)
        return false;
    for (Element x = 0; x < n; ++x) {
        if (map[x] >= T.size())
            return false;
        if (map[S.neg(x)] != T.neg(map[x]))
            return false;
        for (Element y = 0; y < n; ++y)
            for (auto op : binary_operations)
                if (map[S.apply(op, x, y)] != T.apply(op, map[x], map[y]))
                    return false;
    }
    return true;
}

bool is_injective(std::span<const Element> map)
{
    std::vector<Element> sorted(map.begin(), map.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

MorphismKind classify(const FiniteAlgebra& S, const FiniteAlgebra& T, std::span<const Element> map, bool same_algebra)
{
    if (!is_injective(map))
        return MorphismKind::hom;
    if (S.size() != T.size())
        return MorphismKind::embedding;
    return same_algebra ? MorphismKind::automorphism : MorphismKind::isomorphism;
}

Morphism compose(const Morphism& second, const Morphism& first)
{
    Morphism out{first.source, second.target, {}, MorphismKind::hom};
    out.map.reserve(first.map.size());
    for (Element x : first.map)
        out.map.push_back(second.map.at(x));
    if (is_injective(out.map))
        out.kind = MorphismKind::embedding;
    return out;
}

// ---------------------------------------------------------------------------
// Backtracking search with forward propagation: once x and y have images,
// the images of neg x and of every op(x, y) are forced.

namespace {

constexpr Element unset = ~Element{0};

class HomSearcher {
public:
    HomSearcher(const FiniteAlgebra& S, const FiniteAlgebra& T, const HomSearch& options)
        : S_(S), T_(T), options_(options), image_(S.size(), unset), owner_(T.size(), unset)
    {
    }

    std::vector<std::vector<Element>> run()
    {
        for (auto [x, v] : options_.fixed)
            if (x >= S_.size() || v >= T_.size() || !assign(x, v))
                return {};
        descend();
        return std::move(results_);
    }

private:
    bool assign(Element x, Element v)
    {
        std::vector<std::pair<Element, Element>> queue{{x, v}};
        while (!queue.empty()) {
            auto [u, w] = queue.back();
            queue.pop_back();
            if (image_[u] != unset) {
                if (image_[u] != w)
                    return false;
                continue;
            }
            if (options_.injective && owner_[w] != unset)
                return false;
            image_[u] = w;
            if (options_.injective)
                owner_[w] = u;
            trail_.push_back(u);
            queue.emplace_back(S_.neg(u), T_.neg(w));
            for (Element y : trail_) {
                const Element wy = image_[y];
                for (auto op : binary_operations) {
                    queue.emplace_back(S_.apply(op, u, y), T_.apply(op, w, wy));
                    queue.emplace_back(S_.apply(op, y, u), T_.apply(op, wy, w));
                }
            }
        }
        return true;
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            Element u = trail_.back();
            trail_.pop_back();
            if (options_.injective)
                owner_[image_[u]] = unset;
            image_[u] = unset;
        }
    }

    bool descend()
    {
        auto next = std::find(image_.begin(), image_.end(), unset);
        if (next == image_.end()) {
            results_.push_back(image_);
            return options_.limit != 0 && results_.size() >= options_.limit;
        }
        const auto x = static_cast<Element>(next - image_.begin());
        for (Element v = 0; v < T_.size(); ++v) {
            const auto mark = trail_.size();
            if (assign(x, v) && descend()) {
                undo(mark);
                return true;
            }
            undo(mark);
        }
        return false;
    }

    const FiniteAlgebra& S_;
    const FiniteAlgebra& T_;
    const HomSearch& options_;
    std::vector<Element> image_;
    std::vector<Element> owner_;
    std::vector<Element> trail_;
    std::vector<std::vector<Element>> results_;
};

std::vector<Morphism> wrap(const FiniteAlgebra& S, const FiniteAlgebra& T, std::vector<std::vector<Element>> maps,
                           bool same_algebra)
{
    std::vector<Morphism> out;
    out.reserve(maps.size());
    for (auto& m : maps) {
        auto kind = classify(S, T, m, same_algebra);
        out.push_back(Morphism{S.name(), T.name(), std::move(m), kind});
    }
    return out;
}

} // namespace

std::vector<std::vector<Element>> search_homomorphisms(const FiniteAlgebra& S, const FiniteAlgebra& T,
                                                       const HomSearch& options, const Caps& caps)
{
    if (S.size() > caps.max_search_size || T.size() > caps.max_search_size)
        throw CapExceeded("morphism search between algebras of sizes " + std::to_string(S.size()) + " and " +
                          std::to_string(T.size()) + " exceeds the search cap of " +
                          std::to_string(caps.max_search_size));
    if (options.injective && S.size() > T.size())
        return {};
    auto maps = HomSearcher(S, T, options).run();
    std::sort(maps.begin(), maps.end());
    return maps;
}

std::vector<Morphism> homomorphisms(const FiniteAlgebra& S, const FiniteAlgebra& T, const Caps& caps)
{
    return wrap(S, T, search_homomorphisms(S, T, {}, caps), &S == &T);
}

std::vector<Morphism> embeddings(const FiniteAlgebra& S, const FiniteAlgebra& T, const Caps& caps, std::size_t limit)
{
    HomSearch options;
    options.injective = true;
    options.limit = limit;
    return wrap(S, T, search_homomorphisms(S, T, options, caps), &S == &T);
}

std::vector<Morphism> isomorphisms(const FiniteAlgebra& S, const FiniteAlgebra& T, const Caps& caps, std::size_t limit)
{
    if (S.size() != T.size())
        return {};
    return embeddings(S, T, caps, limit);
}

std::vector<Morphism> automorphisms(const FiniteAlgebra& A, const Caps& caps)
{
    auto out = isomorphisms(A, A, caps);
    for (auto& m : out)
        m.kind = MorphismKind::automorphism;
    return out;
}

// ---------------------------------------------------------------------------
// Extensibility

ExtensibilityReport is_extensible(const FiniteAlgebra& A, const Caps& caps)
{
    ExtensibilityReport report;
    std::vector<Subuniverse> nontrivial;
    for (auto& s : all_subuniverses(A, false, caps))
        if (s.size() >= 2)
            nontrivial.push_back(std::move(s));
    std::vector<FiniteAlgebra> algebras;
    for (const auto& s : nontrivial)
        algebras.push_back(subalgebra(A, s));

    for (std::size_t i = 0; i < nontrivial.size(); ++i)
        for (std::size_t j = 0; j < nontrivial.size(); ++j) {
            if (nontrivial[i].size() != nontrivial[j].size())
                continue;
            for (const auto& iso : isomorphisms(algebras[i], algebras[j], caps)) {
                PartialIsomorphism phi{nontrivial[i], nontrivial[j], {}};
                for (Element x = 0; x < iso.map.size(); ++x)
                    phi.pairs.emplace_back(nontrivial[i].members[x], nontrivial[j].members[iso.map[x]]);
                ++report.isomorphisms_checked;

                HomSearch options;
                options.injective = true;
                options.fixed = phi.pairs;
                options.limit = 1;
                auto ext = search_homomorphisms(A, A, options, caps);
                if (ext.empty()) {
                    report.holds = false;
                    report.failure = std::move(phi);
                    return report;
                }
                report.certificates.push_back(
                    {std::move(phi), Morphism{A.name(), A.name(), std::move(ext.front()), MorphismKind::automorphism}});
            }
        }
    return report;
}

// ---------------------------------------------------------------------------
// Amalgamation

void check_span(const Span& span, AmalgamMode mode)
{
    if (!preserves_operations(span.apex, span.left, span.to_left.map))
        throw ArityError("left leg of the span is not a homomorphism");
    if (!preserves_operations(span.apex, span.right, span.to_right.map))
        throw ArityError("right leg of the span is not a homomorphism");
    if (!is_injective(span.to_right.map))
        throw ArityError("right leg of the span is not an embedding");
    if (mode == AmalgamMode::ap && !is_injective(span.to_left.map))
        throw ArityError("left leg of the span is not an embedding");
}

bool verify_amalgam(const Span& span, const Amalgam& amalgam, AmalgamMode mode)
{
    if (!preserves_operations(span.left, amalgam.target, amalgam.from_left.map) ||
        !preserves_operations(span.right, amalgam.target, amalgam.from_right.map))
        return false;
    if (!is_injective(amalgam.from_left.map))
        return false;
    if (mode == AmalgamMode::ap && !is_injective(amalgam.from_right.map))
        return false;
    for (Element x = 0; x < span.apex.size(); ++x) {
        const Element via_left = amalgam.from_left(span.to_left(x));
        if (via_left != amalgam.from_right(span.to_right(x)))
            return false;
        if (x < amalgam.composite.size() && amalgam.composite[x] != via_left)
            return false;
    }
    return true;
}

AmalgamResult amalgamate_span(const Span& span, AmalgamMode mode, const FiniteAlgebra& generator, unsigned bound,
                              const Caps& caps)
{
    check_span(span, mode);
    AmalgamResult result;
    for (unsigned k = 1; k <= std::max(bound, 1u); ++k) {
        FiniteAlgebra target = k == 1 ? generator : power(generator, k, caps);
        result.exhausted_bound = k;
        ++result.candidates_tried;

        HomSearch left_options;
        left_options.injective = true;
        for (const auto& left_arm : search_homomorphisms(span.left, target, left_options, caps)) {
            HomSearch right_options;
            right_options.injective = mode == AmalgamMode::ap;
            right_options.limit = 1;
            for (Element x = 0; x < span.apex.size(); ++x)
                right_options.fixed.emplace_back(span.to_right(x), left_arm[span.to_left(x)]);
            auto right_arms = search_homomorphisms(span.right, target, right_options, caps);
            if (right_arms.empty())
                continue;

            Amalgam amalgam{target, k,
                            Morphism{span.left.name(), target.name(), left_arm, MorphismKind::embedding},
                            Morphism{span.right.name(), target.name(), right_arms.front(), MorphismKind::hom},
                            {}};
            amalgam.from_right.kind = classify(span.right, target, amalgam.from_right.map, false);
            for (Element x = 0; x < span.apex.size(); ++x)
                amalgam.composite.push_back(left_arm[span.to_left(x)]);
            result.amalgam = std::move(amalgam);
            return result;
        }
    }
    return result;
}

} // namespace relog
