#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "relog/error.hpp"
#include "relog/formula.hpp"
#include "relog/reproduce.hpp"

using namespace relog;

namespace {

Formula v(const char* name) { return Formula::variable(name); }

} // namespace

TEST_CASE("precedence and associativity")
{
    const auto p = v("p"), q = v("q"), r = v("r");
    CHECK(parse_formula("p & q | r") == Formula::join(Formula::meet(p, q), r));
    CHECK(parse_formula("p | q & r") == Formula::join(p, Formula::meet(q, r)));
    CHECK(parse_formula("p * q & r") == Formula::meet(Formula::fusion(p, q), r));
    CHECK(parse_formula("~p * q") == Formula::fusion(Formula::negation(p), q));
    CHECK(parse_formula("p -> q -> r") == Formula::implies(p, Formula::implies(q, r)));
    CHECK(parse_formula("p | q -> r") == Formula::implies(Formula::join(p, q), r));
    CHECK(parse_formula("p & q & r") == Formula::meet(Formula::meet(p, q), r));
    CHECK(parse_formula("(p -> q) -> r") == Formula::implies(Formula::implies(p, q), r));
    CHECK(parse_formula("~~p") == Formula::negation(Formula::negation(p)));
    CHECK(parse_formula("  x_1 &y2 ") == Formula::meet(v("x_1"), v("y2")));
}

TEST_CASE("sizes count nodes")
{
    CHECK(parse_formula("p").size() == 1);
    CHECK(parse_formula("p & ~p").size() == 4);
    CHECK(parse_formula("p -> q").size() == 5);
    CHECK(parse_formula("p -> p").size() == 5);
}

TEST_CASE("implication prints as an arrow")
{
    CHECK(parse_formula("~(p * ~q)").to_string() == "p -> q");
    CHECK(parse_formula("(p -> q) -> r").to_string() == "(p -> q) -> r");
    CHECK(parse_formula("p -> q -> r").to_string() == "p -> q -> r");
    CHECK(parse_formula("p & (q | r)").to_string() == "p & (q | r)");
    CHECK(parse_formula("p & q | r").to_string() == "p & q | r");
    CHECK(parse_formula("~(p & q)").to_string() == "~(p & q)");
}

TEST_CASE("print then parse is the identity on every small tree")
{
    for (const auto& f : oracle::trees({"p", "q"}, 6)) {
        CAPTURE(f.to_string());
        CHECK(parse_formula(f.to_string()) == f);
    }
}

TEST_CASE("print then parse on random trees")
{
    std::mt19937_64 rng(7);
    const std::vector<std::string> vars{"p", "q", "r"};
    for (int i = 0; i < 2000; ++i) {
        const auto f = random_formula(rng, vars, 25);
        CHECK(f.size() <= 25);
        CHECK(parse_formula(f.to_string()) == f);
    }
}

TEST_CASE("parse errors carry offsets")
{
    auto offset = [](const char* text) -> std::size_t {
        try {
            parse_formula(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return 999;
    };
    CHECK(offset("p &") == 3);
    CHECK(offset("(p") == 2);
    CHECK(offset("p q") == 2);
    CHECK(offset("P") == 0);
    CHECK(offset("") == 0);
    CHECK(offset("p - q") == 2);
    CHECK_THROWS_AS(parse_formula_list("p, q &"), ParseError);
}

TEST_CASE("formula lists")
{
    CHECK(parse_formula_list("").empty());
    CHECK(parse_formula_list("   ").empty());
    const auto fs = parse_formula_list("p, q -> r ,~p");
    REQUIRE(fs.size() == 3);
    CHECK(fs[1] == parse_formula("q -> r"));
    CHECK(variables_of(fs) == std::set<std::string>{"p", "q", "r"});
}

TEST_CASE("substitution")
{
    const auto f = parse_formula("p & (q -> p)");
    const auto g = f.substitute("p", parse_formula("r | s"));
    CHECK(g == parse_formula("(r | s) & (q -> r | s)"));
    CHECK(g.variables() == std::set<std::string>{"q", "r", "s"});
    CHECK(f.substitute("z", v("q")) == f);
    CHECK(g.size() == f.size() + 2 * 2);
}
