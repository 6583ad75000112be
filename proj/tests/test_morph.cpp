#include <doctest.h>

#include "oracles.hpp"
#include "relog/error.hpp"
#include "relog/morph.hpp"

using namespace relog;

namespace {

std::vector<FiniteAlgebra> small_algebras()
{
    auto C = builtin_crystal();
    std::vector<FiniteAlgebra> out{C, builtin_boolean2(), trivial_algebra()};
    for (const auto& s : all_subuniverses(C, true))
        if (s.size() > 1)
            out.push_back(subalgebra(C, s));
    return out;
}

const std::filesystem::path test_data = RELOG_TEST_DATA_DIR;

} // namespace

TEST_CASE("homomorphisms agree with the exhaustive oracle")
{
    const auto algebras = small_algebras();
    for (const auto& A : algebras)
        for (const auto& B : algebras) {
            CAPTURE(A.name());
            CAPTURE(B.name());
            std::set<std::vector<Element>> got;
            for (const auto& h : homomorphisms(A, B)) {
                got.insert(h.map);
                CHECK(preserves_operations(A, B, h.map));
            }
            const auto want = oracle::homomorphisms(A, B);
            CHECK(got == want);

            std::set<std::vector<Element>> inj;
            for (const auto& m : want)
                if (is_injective(m))
                    inj.insert(m);
            std::set<std::vector<Element>> emb;
            for (const auto& e : embeddings(A, B))
                emb.insert(e.map);
            CHECK(emb == inj);
        }
}

TEST_CASE("homomorphisms into belnap-m")
{
    const auto M = builtin_belnap_m();
    const auto B = builtin_boolean2();
    std::set<std::vector<Element>> got;
    for (const auto& h : homomorphisms(B, M))
        got.insert(h.map);
    CHECK(got == oracle::homomorphisms(B, M));
}

TEST_CASE("search results are lexicographic")
{
    const auto C = builtin_crystal();
    const auto hs = homomorphisms(C, C);
    for (std::size_t i = 1; i < hs.size(); ++i)
        CHECK(hs[i - 1].map < hs[i].map);
    HomSearch fixed;
    fixed.fixed = {{C.at("a"), C.at("b")}};
    const auto swapped = search_homomorphisms(C, C, fixed);
    // The swap, and the constant map onto the idempotent b.
    REQUIRE(swapped.size() == 2);
    for (const auto& m : swapped)
        CHECK(m[C.at("a")] == C.at("b"));
    CHECK(std::find(swapped.begin(), swapped.end(), std::vector<Element>{0, 1, 3, 2, 4, 5}) != swapped.end());
    CHECK(std::find(swapped.begin(), swapped.end(), std::vector<Element>(6, C.at("b"))) != swapped.end());
}

TEST_CASE("automorphisms of the crystal lattice form the swap group")
{
    const auto C = builtin_crystal();
    const auto autos = automorphisms(C);
    REQUIRE(autos.size() == 2);
    std::vector<Element> id{0, 1, 2, 3, 4, 5}, swap{0, 1, 3, 2, 4, 5};
    CHECK(autos[0].map == id);
    CHECK(autos[1].map == swap);
    for (const auto& g : autos) {
        CHECK(g.kind == MorphismKind::automorphism);
        bool has_inverse = false;
        for (const auto& h : autos) {
            auto gh = compose(g, h);
            CHECK(std::find(autos.begin(), autos.end(), gh) != autos.end());
            has_inverse = has_inverse || gh.map == id;
        }
        CHECK(has_inverse);
    }
}

TEST_CASE("automorphism group laws for every small algebra")
{
    for (const auto& A : small_algebras()) {
        CAPTURE(A.name());
        const auto autos = automorphisms(A);
        REQUIRE_FALSE(autos.empty());
        std::vector<Element> id(A.size());
        for (Element x = 0; x < A.size(); ++x)
            id[x] = x;
        CHECK(autos.front().map == id);
        for (const auto& g : autos)
            for (const auto& h : autos)
                CHECK(std::find(autos.begin(), autos.end(), compose(g, h)) != autos.end());
    }
}

TEST_CASE("classification")
{
    const auto C = builtin_crystal();
    const auto B = builtin_boolean2();
    const auto embs = embeddings(B, C);
    REQUIRE(embs.size() == 1);
    CHECK(embs[0].kind == MorphismKind::embedding);
    CHECK(embs[0].map == std::vector<Element>{C.at("bot"), C.at("top")});
    const auto S = subalgebra(C, Subuniverse{{0, 2, 5}});
    const auto T = subalgebra(C, Subuniverse{{0, 3, 5}});
    const auto iso = isomorphisms(S, T);
    REQUIRE(iso.size() == 1);
    CHECK(iso[0].kind == MorphismKind::isomorphism);
    CHECK(isomorphisms(C, B).empty());
}

TEST_CASE("extensibility")
{
    const auto C = builtin_crystal();
    const auto report = is_extensible(C);
    CHECK(report.holds);
    CHECK_FALSE(report.failure);
    CHECK(report.certificates.size() == report.isomorphisms_checked);
    const auto autos = automorphisms(C);
    for (const auto& cert : report.certificates) {
        CHECK(std::find(autos.begin(), autos.end(), cert.extension) != autos.end());
        for (auto [x, y] : cert.phi.pairs)
            CHECK(cert.extension(x) == y);
    }

    const auto asym = load_algebra_file(test_data / "crystal_asym.alg");
    const auto bad = is_extensible(asym);
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.failure);
    // The failing isomorphism is a genuine isomorphism of subalgebras.
    std::vector<Element> dom, cod;
    for (auto [x, y] : bad.failure->pairs) {
        dom.push_back(x);
        cod.push_back(y);
    }
    CHECK(oracle::closed(asym, dom));
    CHECK(oracle::closed(asym, cod));
}

TEST_CASE("degenerate span amalgamates in its own algebra")
{
    const auto C = builtin_crystal();
    const auto id = automorphisms(C).front();
    Span span{C, C, C, id, id};
    for (auto mode : {AmalgamMode::ap, AmalgamMode::tip}) {
        auto r = amalgamate_span(span, mode, C, 1);
        REQUIRE(r.amalgam);
        CHECK(r.amalgam->exponent == 1);
        CHECK(verify_amalgam(span, *r.amalgam, mode));
    }
}

TEST_CASE("span of the two atoms' subalgebras")
{
    const auto C = builtin_crystal();
    const auto apex = subalgebra(C, Subuniverse{{0, 5}});
    const auto L = subalgebra(C, Subuniverse{{0, 2, 5}});
    const auto R = subalgebra(C, Subuniverse{{0, 3, 5}});
    Span span{apex, L, R, embeddings(apex, L).front(), embeddings(apex, R).front()};
    auto r = amalgamate_span(span, AmalgamMode::ap, C, 1);
    REQUIRE(r.amalgam);
    CHECK(verify_amalgam(span, *r.amalgam, AmalgamMode::ap));
    const auto& am = *r.amalgam;
    for (Element x = 0; x < apex.size(); ++x)
        CHECK(am.from_left(span.to_left(x)) == am.from_right(span.to_right(x)));
}

TEST_CASE("TIP spans allow a collapsing left leg")
{
    const auto C = builtin_crystal();
    const auto apex = subalgebra(C, Subuniverse{{0, 1, 4, 5}});
    const auto T = trivial_algebra();
    const auto to_left = homomorphisms(apex, T).front();
    const auto to_right = embeddings(apex, C).front();
    Span span{apex, T, C, to_left, to_right};
    CHECK_THROWS_AS(check_span(span, AmalgamMode::ap), ArityError);
    CHECK_NOTHROW(check_span(span, AmalgamMode::tip));
    // The right arm may collapse C onto a fixed point of every operation.
    auto r = amalgamate_span(span, AmalgamMode::tip, C, 1);
    REQUIRE(r.amalgam);
    CHECK(verify_amalgam(span, *r.amalgam, AmalgamMode::tip));
    const Element o = r.amalgam->from_left(0);
    CHECK(C.neg(o) == o);
    CHECK(C.fusion(o, o) == o);
    for (Element x = 0; x < C.size(); ++x)
        CHECK(r.amalgam->from_right(x) == o);
}

TEST_CASE("search refuses oversized algebras")
{
    Caps caps;
    caps.max_search_size = 10;
    const auto P = power(builtin_crystal(), 2);
    CHECK_THROWS_AS(automorphisms(P, caps), CapExceeded);
}
