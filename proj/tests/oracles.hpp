#pragma once

// Brute-force reference implementations. They read operation tables and
// nothing else from the library.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "relog/algebra.hpp"
#include "relog/formula.hpp"

namespace oracle {

using relog::Element;
using relog::FiniteAlgebra;

inline bool closed(const FiniteAlgebra& A, const std::vector<Element>& s)
{
    std::vector<bool> in(A.size(), false);
    for (auto x : s)
        in[x] = true;
    for (auto x : s) {
        if (!in[A.neg(x)])
            return false;
        for (auto y : s)
            if (!in[A.meet(x, y)] || !in[A.join(x, y)] || !in[A.fusion(x, y)])
                return false;
    }
    return true;
}

/// Every closed subset, by scanning the powerset.
inline std::set<std::vector<Element>> subuniverses(const FiniteAlgebra& A)
{
    std::set<std::vector<Element>> out;
    const std::size_t n = A.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Element> s;
        for (Element x = 0; x < n; ++x)
            if (mask >> x & 1)
                s.push_back(x);
        if (closed(A, s))
            out.insert(s);
    }
    return out;
}

/// Set partitions of {0..n-1} as restricted growth strings.
inline std::vector<std::vector<std::uint32_t>> partitions(std::size_t n)
{
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> a(n, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t max) {
        if (i == n) {
            out.push_back(a);
            return;
        }
        for (std::uint32_t b = 0; b <= max + 1; ++b) {
            a[i] = b;
            rec(i + 1, std::max(max, b));
        }
    };
    if (n == 0)
        return {{}};
    a[0] = 0;
    rec(1, 0);
    return out;
}

inline bool compatible(const FiniteAlgebra& A, const std::vector<std::uint32_t>& block)
{
    const std::size_t n = A.size();
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            if (block[x] != block[y])
                continue;
            if (block[A.neg(x)] != block[A.neg(y)])
                return false;
            for (Element z = 0; z < n; ++z) {
                if (block[A.meet(x, z)] != block[A.meet(y, z)] || block[A.join(x, z)] != block[A.join(y, z)] ||
                    block[A.fusion(x, z)] != block[A.fusion(y, z)] || block[A.fusion(z, x)] != block[A.fusion(z, y)] ||
                    block[A.meet(z, x)] != block[A.meet(z, y)] || block[A.join(z, x)] != block[A.join(z, y)])
                    return false;
            }
        }
    return true;
}

/// All congruences as block strings, by filtering every partition.
inline std::set<std::vector<std::uint32_t>> congruences(const FiniteAlgebra& A)
{
    std::set<std::vector<std::uint32_t>> out;
    for (const auto& p : partitions(A.size()))
        if (compatible(A, p))
            out.insert(p);
    return out;
}

inline bool preserves(const FiniteAlgebra& A, const FiniteAlgebra& B, const std::vector<Element>& h)
{
    for (Element x = 0; x < A.size(); ++x) {
        if (h[A.neg(x)] != B.neg(h[x]))
            return false;
        for (Element y = 0; y < A.size(); ++y)
            if (h[A.meet(x, y)] != B.meet(h[x], h[y]) || h[A.join(x, y)] != B.join(h[x], h[y]) ||
                h[A.fusion(x, y)] != B.fusion(h[x], h[y]))
                return false;
    }
    return true;
}

/// Every homomorphism A -> B, by trying all |B|^|A| maps.
inline std::set<std::vector<Element>> homomorphisms(const FiniteAlgebra& A, const FiniteAlgebra& B)
{
    std::set<std::vector<Element>> out;
    std::vector<Element> h(A.size(), 0);
    while (true) {
        if (preserves(A, B, h))
            out.insert(h);
        std::size_t i = 0;
        while (i < h.size() && ++h[i] == B.size())
            h[i++] = 0;
        if (i == h.size())
            break;
    }
    return out;
}

/// Direct recursive evaluation.
inline Element eval(const FiniteAlgebra& A, const std::function<Element(const std::string&)>& v,
                    const relog::Formula& f)
{
    using relog::Connective;
    switch (f.connective()) {
    case Connective::variable: return v(f.name());
    case Connective::neg: return A.neg(eval(A, v, f.operand()));
    case Connective::meet: return A.meet(eval(A, v, f.left()), eval(A, v, f.right()));
    case Connective::join: return A.join(eval(A, v, f.left()), eval(A, v, f.right()));
    case Connective::fusion: return A.fusion(eval(A, v, f.left()), eval(A, v, f.right()));
    }
    return 0;
}

/// Value vectors (valuations in lexicographic order, first variable most
/// significant) of every formula tree with at most `max_size` nodes, over
/// k variables. Trees are enumerated without any deduplication.
inline std::set<std::vector<Element>> term_vectors(const FiniteAlgebra& A, std::size_t k, std::size_t max_size,
                                                   std::size_t* trees = nullptr)
{
    std::size_t coords = 1;
    for (std::size_t i = 0; i < k; ++i)
        coords *= A.size();
    using Vec = std::vector<Element>;
    std::vector<std::vector<Vec>> by_size(max_size + 1);
    for (std::size_t v = 0; v < k; ++v) {
        Vec vec(coords);
        for (std::size_t c = 0; c < coords; ++c) {
            std::size_t div = 1;
            for (std::size_t i = v + 1; i < k; ++i)
                div *= A.size();
            vec[c] = static_cast<Element>(c / div % A.size());
        }
        by_size[1].push_back(vec);
    }
    for (std::size_t s = 2; s <= max_size; ++s) {
        for (const auto& x : by_size[s - 1]) {
            Vec out(coords);
            for (std::size_t c = 0; c < coords; ++c)
                out[c] = A.neg(x[c]);
            by_size[s].push_back(out);
        }
        for (std::size_t i = 1; i + 1 < s; ++i)
            for (const auto& x : by_size[i])
                for (const auto& y : by_size[s - 1 - i])
                    for (int op = 0; op < 3; ++op) {
                        Vec out(coords);
                        for (std::size_t c = 0; c < coords; ++c)
                            out[c] = op == 0 ? A.meet(x[c], y[c]) : op == 1 ? A.join(x[c], y[c]) : A.fusion(x[c], y[c]);
                        by_size[s].push_back(std::move(out));
                    }
    }
    std::set<Vec> out;
    std::size_t count = 0;
    for (const auto& level : by_size) {
        count += level.size();
        out.insert(level.begin(), level.end());
    }
    if (trees)
        *trees = count;
    return out;
}

/// Every formula tree over `vars` with at most `max_size` nodes.
inline std::vector<relog::Formula> trees(const std::vector<std::string>& vars, std::size_t max_size)
{
    using relog::Formula;
    if (max_size == 0)
        return {};
    std::vector<std::vector<Formula>> by_size(max_size + 1);
    for (const auto& v : vars)
        by_size[1].push_back(Formula::variable(v));
    for (std::size_t s = 2; s <= max_size; ++s) {
        for (const auto& x : by_size[s - 1])
            by_size[s].push_back(Formula::negation(x));
        for (std::size_t i = 1; i + 1 < s; ++i)
            for (const auto& x : by_size[i])
                for (const auto& y : by_size[s - 1 - i]) {
                    by_size[s].push_back(Formula::meet(x, y));
                    by_size[s].push_back(Formula::join(x, y));
                    by_size[s].push_back(Formula::fusion(x, y));
                }
    }
    std::vector<Formula> out;
    for (const auto& level : by_size)
        out.insert(out.end(), level.begin(), level.end());
    return out;
}

} // namespace oracle
