#include <doctest.h>

#include <fstream>
#include <map>
#include <random>

#include "oracles.hpp"
#include "relog/error.hpp"
#include "relog/logic.hpp"
#include "relog/reproduce.hpp"
#include "relog/subcon.hpp"

using namespace relog;

namespace {

// Fusion identity, found by search.
Element identity_of(const FiniteAlgebra& A)
{
    for (Element e = 0; e < A.size(); ++e) {
        bool ok = true;
        for (Element x = 0; x < A.size(); ++x)
            ok = ok && A.fusion(e, x) == x;
        if (ok)
            return e;
    }
    FAIL("no identity");
    return 0;
}

// All valuations of `vars` in lexicographic order, first most significant.
std::vector<Valuation> valuations(const FiniteAlgebra& A, const std::vector<std::string>& vars)
{
    std::vector<Valuation> out;
    std::vector<Element> v(vars.size(), 0);
    while (true) {
        Valuation val;
        for (std::size_t i = 0; i < vars.size(); ++i)
            val[vars[i]] = v[i];
        out.push_back(val);
        std::size_t i = vars.size();
        while (i > 0 && ++v[i - 1] == A.size())
            v[--i] = 0;
        if (i == 0)
            break;
    }
    return out;
}

bool designated_oracle(const FiniteAlgebra& A, Element x) { return A.leq(identity_of(A), x); }

// First valuation (in lexicographic order) designating all premises and not
// the conclusion.
std::optional<Valuation> least_countermodel(const FiniteAlgebra& A, const std::vector<Formula>& premises,
                                            const Formula& conclusion)
{
    auto names = variables_of(premises);
    conclusion.collect_variables(names);
    const std::vector<std::string> vars(names.begin(), names.end());
    for (const auto& val : valuations(A, vars)) {
        auto lookup = [&](const std::string& s) { return val.at(s); };
        bool premises_hold = true;
        for (const auto& p : premises)
            premises_hold = premises_hold && designated_oracle(A, oracle::eval(A, lookup, p));
        if (premises_hold && !designated_oracle(A, oracle::eval(A, lookup, conclusion)))
            return val;
    }
    return std::nullopt;
}

const std::vector<std::string> pq{"p", "q"};

} // namespace

TEST_CASE("designated elements form the filter of the fusion identity")
{
    for (const auto& A : {builtin_crystal(), builtin_belnap_m(), builtin_boolean2()}) {
        CAPTURE(A.name());
        for (Element x = 0; x < A.size(); ++x)
            CHECK(designated(A, x) == designated_oracle(A, x));
    }
    const auto C = builtin_crystal();
    std::vector<std::string> names;
    for (auto x : designated_set(C))
        names.push_back(C.element_name(x));
    CHECK(names == std::vector<std::string>{"t", "a", "b", "f", "top"});
    CHECK(designated_set(builtin_boolean2()) == std::vector<Element>{1});
}

TEST_CASE("evaluate agrees with the oracle and with compiled formulas")
{
    std::mt19937_64 rng(11);
    const std::vector<std::string> vars{"p", "q", "r"};
    const auto C = builtin_crystal();
    for (int i = 0; i < 300; ++i) {
        const auto f = random_formula(rng, vars, 12);
        const CompiledFormula compiled(f, vars);
        for (const auto& val : valuations(C, vars)) {
            const Element want = oracle::eval(C, [&](const std::string& s) { return val.at(s); }, f);
            CHECK(evaluate(C, val, f) == want);
            const std::vector<Element> slots{val.at("p"), val.at("q"), val.at("r")};
            CHECK(compiled.evaluate(C, slots) == want);
        }
    }
    CHECK_THROWS_AS(evaluate(C, Valuation{{"p", 0}}, parse_formula("p & q")), UnboundVariable);
}

TEST_CASE("evaluation commutes with substitution")
{
    std::mt19937_64 rng(5);
    const auto C = builtin_crystal();
    for (int i = 0; i < 200; ++i) {
        const auto phi = random_formula(rng, pq, 8);
        const auto psi = random_formula(rng, pq, 6);
        const auto sub = phi.substitute("p", psi);
        for (const auto& v : valuations(C, pq)) {
            Valuation w = v;
            w["p"] = evaluate(C, v, psi);
            CHECK(evaluate(C, v, sub) == evaluate(C, w, phi));
        }
    }
}

TEST_CASE("known countermodels")
{
    const auto C = builtin_crystal();
    const std::vector<Formula> p{parse_formula("p")};
    auto v = entails(C, p, parse_formula("q"));
    CHECK_FALSE(v.holds);
    REQUIRE(v.countermodel);
    CHECK(v.countermodel->valuation == Valuation{{"p", C.at("t")}, {"q", C.at("bot")}});

    const auto explosion = parse_formula("p & ~p -> q");
    auto e = theorem(C, explosion);
    CHECK_FALSE(e.holds);
    REQUIRE(e.countermodel);
    CHECK(is_countermodel(C, e.countermodel->valuation, {}, explosion));
    CHECK(is_countermodel(C, Valuation{{"p", C.at("a")}, {"q", C.at("bot")}}, {}, explosion));
    CHECK(theorem(builtin_boolean2(), explosion).holds);
}

TEST_CASE("countermodels are the lexicographically least")
{
    std::mt19937_64 rng(3);
    const auto C = builtin_crystal();
    int failures = 0;
    for (int i = 0; i < 400; ++i) {
        std::vector<Formula> premises{random_formula(rng, pq, 5)};
        const auto conclusion = random_formula(rng, pq, 5);
        const auto v = entails(C, premises, conclusion);
        const auto want = least_countermodel(C, premises, conclusion);
        CHECK(v.holds == !want.has_value());
        if (want) {
            ++failures;
            REQUIRE(v.countermodel);
            // Variables absent from the formulas are not part of the valuation.
            CHECK(v.countermodel->valuation == *want);
            CHECK(is_countermodel(C, v.countermodel->valuation, premises, conclusion));
        }
    }
    CHECK(failures > 50);
}

TEST_CASE("reflexivity, monotonicity and cut")
{
    std::mt19937_64 rng(17);
    const auto C = builtin_crystal();
    for (int i = 0; i < 200; ++i) {
        const auto a = random_formula(rng, pq, 5), b = random_formula(rng, pq, 5), c = random_formula(rng, pq, 5);
        CHECK(entails(C, std::vector{a, b}, a).holds);
        if (entails(C, std::vector{a}, c).holds)
            CHECK(entails(C, std::vector{a, b}, c).holds);
        if (entails(C, std::vector{a}, b).holds && entails(C, std::vector{a, b}, c).holds)
            CHECK(entails(C, std::vector{a}, c).holds);
    }
}

TEST_CASE("consequence over C matches consequence over HS(C)")
{
    std::mt19937_64 rng(23);
    const auto C = builtin_crystal();
    const auto K = hs_class(C, true);
    for (int i = 0; i < 200; ++i) {
        std::vector<Formula> premises{random_formula(rng, pq, 5), random_formula(rng, pq, 4)};
        const auto conclusion = random_formula(rng, pq, 5);
        CHECK(entails(C, premises, conclusion).holds == entails(K, premises, conclusion).holds);
    }
}

TEST_CASE("shipped R theorems hold over C")
{
    std::ifstream in(data_directory() / "r_theorems.txt");
    REQUIRE(in);
    int count = 0;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#')
            continue;
        const auto f = parse_formula(line.substr(line.find(':') + 1));
        CAPTURE(line);
        CHECK(theorem(builtin_crystal(), f).holds);
        CHECK(theorem(builtin_belnap_m(), f).holds);
        ++count;
    }
    CHECK(count == 10);
    CHECK_FALSE(theorem(builtin_crystal(), parse_formula("p -> q -> p")).holds);
    CHECK_FALSE(theorem(builtin_crystal(), parse_formula("p -> q | ~q")).holds);
}

TEST_CASE("valuation cap")
{
    Caps caps;
    caps.max_valuations = 100;
    CHECK_THROWS_AS(theorem(builtin_crystal(), parse_formula("p & q & r -> p"), caps), CapExceeded);
    CHECK(theorem(builtin_crystal(), parse_formula("p & q -> p"), caps).holds);
}

TEST_CASE("variable sharing scans")
{
    const std::vector<FiniteAlgebra> C{builtin_crystal()}, M{builtin_belnap_m()}, B{builtin_boolean2()};
    CHECK(vsp_scan(C, 4).violations.empty());
    CHECK(vsp_scan(M, 4).violations.empty());
    const auto rb = vsp_scan(B, 4);
    const auto explosion = parse_formula("p & ~p"), q = parse_formula("q");
    CHECK(std::any_of(rb.violations.begin(), rb.violations.end(),
                      [&](const VspViolation& v) { return v.antecedent == explosion && v.consequent == q; }));
}

TEST_CASE("variable sharing scan against brute-force theorem search")
{
    // Every variable-disjoint theorem among small trees shows up in the scan
    // as a pair of term functions with the same values.
    for (const auto& A : {builtin_boolean2(), builtin_crystal()}) {
        CAPTURE(A.name());
        const std::vector<FiniteAlgebra> K{A};
        const auto scan = vsp_scan(K, 4);
        const auto lefts = oracle::trees({"p"}, 4);
        const auto rights = oracle::trees({"q"}, 4);
        std::size_t theorems = 0;
        for (const auto& a : lefts)
            for (const auto& b : rights) {
                if (!theorem(A, Formula::implies(a, b)).holds)
                    continue;
                ++theorems;
                bool covered = false;
                for (const auto& v : scan.violations) {
                    bool same = true;
                    for (Element x = 0; x < A.size() && same; ++x) {
                        same = evaluate(A, {{"p", x}}, a) == evaluate(A, {{"p", x}}, v.antecedent) &&
                               evaluate(A, {{"q", x}}, b) == evaluate(A, {{"q", x}}, v.consequent);
                    }
                    covered = covered || same;
                }
                CHECK(covered);
            }
        if (A.name() == "crystal")
            CHECK(theorems == 0);
        else
            CHECK(theorems > 0);
    }
}

TEST_CASE("two variables per side")
{
    const std::vector<FiniteAlgebra> C{builtin_crystal()};
    const auto r = vsp_scan(C, 3, 2);
    CHECK(r.violations.empty());
    CHECK(r.functions_per_side > 2);
}
