#include "relog/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "relog/error.hpp"
#include "relog/morph.hpp"
#include "relog/subcon.hpp"

namespace relog {

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& variables, std::size_t max_size)
{
    std::uniform_int_distribution<std::size_t> pick_var(0, variables.size() - 1);
    std::bernoulli_distribution stop(0.5);
    if (max_size <= 1 || stop(rng))
        return Formula::variable(variables[pick_var(rng)]);
    const std::size_t choices = max_size >= 3 ? 4 : 1;
    const std::size_t c = std::uniform_int_distribution<std::size_t>(0, choices - 1)(rng);
    if (c == 0)
        return Formula::negation(random_formula(rng, variables, max_size - 1));
    const std::size_t left = std::uniform_int_distribution<std::size_t>(1, max_size - 2)(rng);
    auto l = random_formula(rng, variables, left);
    auto r = random_formula(rng, variables, max_size - 1 - left);
    static constexpr Connective ops[] = {Connective::fusion, Connective::meet, Connective::join};
    return Formula::binary(ops[c - 1], std::move(l), std::move(r));
}

std::vector<InterpolationProblem> generate_problems(std::uint64_t seed, std::size_t count,
                                                    std::span<const FiniteAlgebra> algebras, std::size_t max_size,
                                                    const Caps& caps, ProblemStats* stats)
{
    static const std::vector<std::string> names{"p", "q", "r"};
    std::mt19937_64 rng(seed);
    ProblemStats local;
    std::vector<InterpolationProblem> out;
    const std::size_t max_attempts = 1000 * std::max<std::size_t>(count, 1);
    while (out.size() < count) {
        if (local.drawn >= max_attempts)
            throw Error("problem generator drew " + std::to_string(local.drawn) + " candidates but kept only " +
                        std::to_string(out.size()));
        ++local.drawn;
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        const std::vector<std::string> vars(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(k));
        const std::size_t n_sigma = out.size() % 3 == 0 ? 0 : std::uniform_int_distribution<std::size_t>(1, 2)(rng);
        const std::size_t n_gamma = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
        InterpolationProblem p{{}, {}, random_formula(rng, vars, max_size)};
        for (std::size_t i = 0; i < n_sigma; ++i)
            p.sigma.push_back(random_formula(rng, vars, max_size));
        for (std::size_t i = 0; i < n_gamma; ++i)
            p.gamma.push_back(random_formula(rng, vars, max_size));
        if (shared_variables(p.sigma, p.gamma, p.alpha).empty()) {
            ++local.no_shared;
            continue;
        }
        auto premises = p.sigma;
        premises.insert(premises.end(), p.gamma.begin(), p.gamma.end());
        if (!entails(algebras, premises, p.alpha, caps).holds) {
            ++local.not_entailed;
            continue;
        }
        out.push_back(std::move(p));
    }
    if (stats)
        *stats = local;
    return out;
}

// ---------------------------------------------------------------------------
// JSON views

std::string error_type(const std::exception& e)
{
#define RELOG_ERROR_NAME(T)                                                                                           \
    if (dynamic_cast<const T*>(&e))                                                                                  \
        return #T;
    RELOG_ERROR_NAME(ParseError)
    RELOG_ERROR_NAME(ArityError)
    RELOG_ERROR_NAME(UnknownElement)
    RELOG_ERROR_NAME(DataFileMissing)
    RELOG_ERROR_NAME(CapExceeded)
    RELOG_ERROR_NAME(NotACongruence)
    RELOG_ERROR_NAME(NotASubuniverse)
    RELOG_ERROR_NAME(UnboundVariable)
    RELOG_ERROR_NAME(NoSharedVariables)
    RELOG_ERROR_NAME(NotEntailed)
    RELOG_ERROR_NAME(NoInterpolantFound)
    RELOG_ERROR_NAME(UsageError)
#undef RELOG_ERROR_NAME
    return "Error";
}

Json to_json(const FiniteAlgebra& A, const Countermodel& cm)
{
    Json valuation = Json::object();
    for (const auto& [var, value] : cm.valuation)
        valuation[var] = A.element_name(value);
    return {{"algebra", cm.algebra}, {"valuation", valuation}};
}

Json to_json(std::span<const FiniteAlgebra> algebras, const EntailmentVerdict& verdict)
{
    Json j{{"holds", verdict.holds}, {"valuations_checked", verdict.valuations_checked}};
    if (verdict.countermodel)
        j["countermodel"] = to_json(algebras[verdict.countermodel->algebra_index], *verdict.countermodel);
    return j;
}

Json to_json(std::span<const FiniteAlgebra> algebras, const InterpolationResult& r)
{
    return {{"delta", r.delta.to_string()},
            {"size", r.size},
            {"shared", r.shared},
            {"candidates_examined", r.candidates_examined},
            {"gamma_entails_delta", to_json(algebras, r.gamma_entails_delta)},
            {"sigma_delta_entails_alpha", to_json(algebras, r.sigma_delta_entails_alpha)}};
}

// ---------------------------------------------------------------------------
// Reproduction items

namespace {

struct Outcome {
    std::string status;
    Json details = Json::object();
    std::string error_type;
    std::string error;
};

Outcome verdict(bool ok, Json details) { return {ok ? "pass" : "fail", std::move(details), {}, {}}; }

std::vector<std::string> names_of(const FiniteAlgebra& A, std::span<const Element> members)
{
    std::vector<std::string> out;
    for (auto x : members)
        out.push_back(A.element_name(x));
    return out;
}

Subuniverse named(const FiniteAlgebra& A, std::initializer_list<const char*> names)
{
    Subuniverse s;
    for (auto n : names)
        s.members.push_back(A.at(n));
    std::sort(s.members.begin(), s.members.end());
    return s;
}

Json map_json(const FiniteAlgebra& source, const FiniteAlgebra& target, std::span<const Element> map)
{
    Json j = Json::object();
    for (Element x = 0; x < map.size(); ++x)
        j[source.element_name(x)] = target.element_name(map[x]);
    return j;
}

std::vector<FiniteAlgebra> nontrivial_subalgebras(const FiniteAlgebra& G, const Caps& caps)
{
    std::vector<FiniteAlgebra> out;
    for (const auto& s : all_subuniverses(G, false, caps))
        if (s.size() > 1)
            out.push_back(s.size() == G.size() ? G : subalgebra(G, s));
    return out;
}

Outcome validate_item(const FiniteAlgebra& G, const Caps&)
{
    Json failed = Json::array();
    auto reports = validate_relevant_algebra(G);
    for (const auto& r : reports)
        if (!r.holds) {
            Json item{{"axiom", r.axiom}};
            if (r.counterexample)
                item["counterexample"] = names_of(G, *r.counterexample);
            failed.push_back(item);
        }
    return verdict(failed.empty(), {{"axioms_checked", reports.size()}, {"failed", failed}});
}

Outcome subalgebras_item(const FiniteAlgebra& G, const Caps& caps)
{
    const std::vector<std::vector<std::string>> expected{
        {"a"}, {"b"}, {"bot", "top"}, {"bot", "a", "top"}, {"bot", "b", "top"}, {"bot", "t", "f", "top"},
        {"bot", "t", "a", "f", "top"}, {"bot", "t", "b", "f", "top"}, {"bot", "t", "a", "b", "f", "top"}};
    auto normalize = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    std::vector<std::vector<std::string>> found;
    for (const auto& s : all_subuniverses(G, false, caps))
        if (s.size() > 0)
            found.push_back(names_of(G, s.members));
    std::set<std::vector<std::string>> want, got;
    for (const auto& e : expected)
        want.insert(normalize(e));
    for (const auto& f : found)
        got.insert(normalize(f));
    return verdict(want == got && found.size() == expected.size(), {{"found", found}, {"expected", expected}});
}

Outcome simple_item(const FiniteAlgebra& G, const Caps& caps)
{
    Json rows = Json::array();
    bool all = true;
    for (const auto& S : nontrivial_subalgebras(G, caps)) {
        const auto lattice = congruence_lattice(S, caps);
        const bool simple = is_simple(S, caps);
        all = all && simple;
        rows.push_back({{"subalgebra", S.element_names()}, {"congruences", lattice.size()}, {"simple", simple}});
    }
    return verdict(all, {{"subalgebras", rows}});
}

Outcome proof_moves_item(const FiniteAlgebra& G, const Caps&)
{
    Json checks = Json::array();
    bool all = true;
    auto check = [&](const std::string& what, bool ok) {
        all = all && ok;
        checks.push_back({{"check", what}, {"holds", ok}});
    };
    const auto S4 = subalgebra(G, named(G, {"bot", "t", "f", "top"}));
    const Element bot = S4.at("bot"), t = S4.at("t"), f = S4.at("f"), top = S4.at("top");
    check("Cg(f,t) is full on {bot,t,f,top}", principal_congruence(S4, f, t).is_full());
    check("f->t = bot and f->f = t", S4.arrow(f, t) == bot && S4.arrow(f, f) == t);
    check("Cg(bot,t) relates top and f", principal_congruence(S4, bot, t).related(top, f));
    check("top&f = f and top&t = t", S4.meet(top, f) == f && S4.meet(top, t) == t);
    check("Cg(top,t) relates f and t", principal_congruence(S4, top, t).related(f, t));

    const auto S5 = subalgebra(G, named(G, {"bot", "t", "a", "f", "top"}));
    const Element bot5 = S5.at("bot"), t5 = S5.at("t"), a5 = S5.at("a"), f5 = S5.at("f"), top5 = S5.at("top");
    check("a->t = bot and t->t = t", S5.arrow(a5, t5) == bot5 && S5.arrow(t5, t5) == t5);
    check("Cg(a,t) is full on {bot,t,a,f,top}", principal_congruence(S5, a5, t5).is_full());
    check("f&top = f and f&a = a", S5.meet(f5, top5) == f5 && S5.meet(f5, a5) == a5);
    check("Cg(a,top) is full on {bot,t,a,f,top}", principal_congruence(S5, a5, top5).is_full());
    return verdict(all, {{"checks", checks}});
}

Outcome cep_item(const FiniteAlgebra& G, const Caps& caps)
{
    const auto K = hs_class(G, false, caps);
    const auto report = check_cep_class(K, caps);
    Json failures = Json::array();
    for (const auto& w : report.failures)
        failures.push_back({{"inner", w.inner.element_names()}, {"outer", w.outer.name()},
                            {"theta", w.theta.labels()}});
    Json members = Json::array();
    for (const auto& A : K)
        members.push_back(A.name());
    return verdict(report.holds && report.failures.empty(), {{"class", members},
                                                             {"pairs_checked", report.pairs_checked},
                                                             {"witnesses_checked", report.witnesses_checked},
                                                             {"failures", failures}});
}

Outcome automorphisms_item(const FiniteAlgebra& G, const Caps& caps)
{
    const auto autos = automorphisms(G, caps);
    std::vector<Element> identity(G.size()), swap(G.size());
    for (Element x = 0; x < G.size(); ++x)
        identity[x] = swap[x] = x;
    const auto a = G.at("a"), b = G.at("b");
    std::swap(swap[a], swap[b]);
    std::set<std::vector<Element>> got, want{identity, swap};
    Json maps = Json::array();
    for (const auto& m : autos) {
        got.insert(m.map);
        maps.push_back(map_json(G, G, m.map));
    }
    return verdict(got == want && autos.size() == 2, {{"automorphisms", maps}});
}

Outcome extensible_item(const FiniteAlgebra& G, const Caps& caps)
{
    const auto report = is_extensible(G, caps);
    bool swap_exhibited = false;
    Json certificates = Json::array();
    for (const auto& c : report.certificates) {
        bool identity = true;
        for (Element x = 0; x < c.extension.map.size(); ++x)
            identity = identity && c.extension.map[x] == x;
        if (!identity && c.extension.map[G.at("a")] == G.at("b"))
            swap_exhibited = true;
        Json phi = Json::object();
        for (auto [x, y] : c.phi.pairs)
            phi[G.element_name(x)] = G.element_name(y);
        certificates.push_back({{"phi", phi}, {"extension", map_json(G, G, c.extension.map)}});
    }
    Json details{{"isomorphisms_checked", report.isomorphisms_checked},
                 {"swap_exhibited", swap_exhibited},
                 {"certificates", certificates}};
    if (report.failure) {
        Json phi = Json::object();
        for (auto [x, y] : report.failure->pairs)
            phi[G.element_name(x)] = G.element_name(y);
        details["failure"] = phi;
    }
    return verdict(report.holds && swap_exhibited, details);
}

Outcome amalgamation_item(const FiniteAlgebra& G, const Caps& caps)
{
    const auto subs = nontrivial_subalgebras(G, caps);
    std::size_t spans = 0, found = 0;
    Json missing = Json::array();
    for (const auto& apex : subs)
        for (const auto& left : subs)
            for (const auto& right : subs) {
                const auto lefts = embeddings(apex, left, caps);
                const auto rights = embeddings(apex, right, caps);
                for (const auto& l : lefts)
                    for (const auto& r : rights) {
                        ++spans;
                        Span span{apex, left, right, l, r};
                        auto result = amalgamate_span(span, AmalgamMode::ap, G, 1, caps);
                        if (result.amalgam && result.amalgam->exponent == 1 &&
                            verify_amalgam(span, *result.amalgam, AmalgamMode::ap))
                            ++found;
                        else if (missing.size() < 10)
                            missing.push_back({{"apex", apex.element_names()},
                                               {"left", left.element_names()},
                                               {"right", right.element_names()}});
                    }
            }
    return verdict(found == spans, {{"subalgebras", subs.size()}, {"spans", spans}, {"amalgamated", found},
                                    {"not_found", spans - found}, {"missing", missing}});
}

Json scan_json(const VspScanResult& r)
{
    Json examples = Json::array();
    for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i)
        examples.push_back(Formula::implies(r.violations[i].antecedent, r.violations[i].consequent).to_string());
    return {{"functions_per_side", r.functions_per_side},
            {"pairs_checked", r.pairs_checked},
            {"violations", r.violations.size()},
            {"examples", examples}};
}

Outcome vsp_item(const FiniteAlgebra& G, std::size_t bound, const Caps& caps)
{
    const std::vector<FiniteAlgebra> C{G}, M{builtin_belnap_m()}, B{builtin_boolean2()};
    const auto rc = vsp_scan(C, bound, 1, caps);
    const auto rm = vsp_scan(M, bound, 1, caps);
    const auto rb = vsp_scan(B, bound, 1, caps);
    const Formula explosion = parse_formula("p & ~p"), q = Formula::variable("q");
    const bool boolean_found = std::any_of(rb.violations.begin(), rb.violations.end(), [&](const VspViolation& v) {
        return v.antecedent == explosion && v.consequent == q;
    });
    return verdict(rc.violations.empty() && rm.violations.empty() && boolean_found,
                   {{"bound", bound},
                    {G.name(), scan_json(rc)},
                    {M[0].name(), scan_json(rm)},
                    {B[0].name(), scan_json(rb)},
                    {"boolean_explosion_found", boolean_found}});
}

std::string joined(const std::vector<Formula>& fs)
{
    std::string s;
    for (const auto& f : fs)
        s += (s.empty() ? "" : ", ") + f.to_string();
    return s;
}

Outcome mip_item(const FiniteAlgebra& G, std::uint64_t seed, std::size_t instances, const Caps& caps)
{
    const std::vector<FiniteAlgebra> K{G};
    ProblemStats stats;
    const auto problems = generate_problems(seed, instances, K, 4, caps, &stats);
    std::size_t solved = 0, verified = 0, sigma_empty = 0, cap_exceeded = 0, max_size = 0;
    std::map<std::size_t, std::size_t> sizes;
    Json failures = Json::array();
    for (const auto& p : problems) {
        if (p.sigma.empty())
            ++sigma_empty;
        try {
            const auto r = maehara_interpolant(p, K, caps);
            ++solved;
            sizes[r.size]++;
            max_size = std::max(max_size, r.size);
            if (verify_interpolant(p.sigma, p.gamma, p.alpha, r.delta, K, caps).holds)
                ++verified;
            else if (failures.size() < 10)
                failures.push_back({{"sigma", joined(p.sigma)}, {"gamma", joined(p.gamma)},
                                    {"alpha", p.alpha.to_string()}, {"delta", r.delta.to_string()}});
        } catch (const Error& e) {
            if (dynamic_cast<const CapExceeded*>(&e))
                ++cap_exceeded;
            if (failures.size() < 10)
                failures.push_back({{"sigma", joined(p.sigma)}, {"gamma", joined(p.gamma)},
                                    {"alpha", p.alpha.to_string()}, {"error_type", error_type(e)},
                                    {"error", e.what()}});
        }
    }
    Json histogram = Json::object();
    for (auto [size, n] : sizes)
        histogram[std::to_string(size)] = n;
    const bool ok = problems.size() >= instances && solved == problems.size() && verified == solved &&
                    sigma_empty > 0 && cap_exceeded == 0;
    Outcome outcome = verdict(ok, {{"seed", seed},
                        {"instances", problems.size()},
                        {"candidates_drawn", stats.drawn},
                        {"rejected_no_shared", stats.no_shared},
                        {"rejected_not_entailed", stats.not_entailed},
                        {"solved", solved},
                        {"verified", verified},
                        {"sigma_empty", sigma_empty},
                        {"cap_exceeded", cap_exceeded},
                        {"max_interpolant_size", max_size},
                        {"interpolant_sizes", histogram},
                        {"failures", failures}});
    if (cap_exceeded) {
        outcome.status = "error";
        outcome.error_type = "CapExceeded";
        outcome.error = std::to_string(cap_exceeded) + " of " + std::to_string(problems.size()) +
                        " problems exceeded the caps";
    }
    return outcome;
}

// Tier one: pairs inside HS(M). Tier two: two-generated subalgebras of M^2
// inside M^2, stopping at the first non-extendable witness.
Outcome belnap_cep_item(const Caps& caps)
{
    const auto M = builtin_belnap_m();
    const auto K = hs_class(M, false, caps);
    const auto tier1 = check_cep_class(K, caps);
    Json details{{"hs_class_size", K.size()},
                 {"hs_pairs_checked", tier1.pairs_checked},
                 {"hs_failures", tier1.failures.size()}};
    std::optional<CepWitness> witness;
    if (!tier1.failures.empty())
        witness = tier1.failures.front();

    std::size_t tier2_checked = 0;
    if (!witness) {
        const auto M2 = power(M, 2, caps);
        std::set<std::vector<Element>> seen;
        for (Element x = 0; x < M2.size() && !witness; ++x)
            for (Element y = x; y < M2.size() && !witness; ++y) {
                const Element seed[] = {x, y};
                auto sub = generated_subuniverse(M2, seed);
                if (sub.size() < 2 || sub.size() == M2.size() || !seen.insert(sub.members).second)
                    continue;
                ++tier2_checked;
                for (auto& w : check_cep_pair(sub, M2, caps))
                    if (!w.extendable) {
                        witness = std::move(w);
                        break;
                    }
            }
    }
    details["power_subalgebras_checked"] = tier2_checked;
    if (witness) {
        Json blocks = Json::array();
        for (const auto& block : witness->theta.blocks())
            blocks.push_back(names_of(witness->inner, block));
        details["finding"] = "non-extendable congruence found";
        details["witness"] = {{"inner", witness->inner.element_names()},
                              {"outer", witness->outer.name()},
                              {"theta_blocks", blocks}};
        return {"pass", details, {}, {}};
    }
    details["finding"] = "inconclusive at bound";
    return {"inconclusive", details, {}, {}};
}

} // namespace

const std::vector<std::string>& reproduce_item_ids()
{
    static const std::vector<std::string> ids{
        "algebra.validate",     "crystal.subalgebras",  "crystal.simple",       "crystal.proof-moves",
        "crystal.cep",           "crystal.automorphisms", "crystal.extensible", "crystal.amalgamation",
        "vsp.scan",            "interpolation.suite",         "exploratory.belnap-cep"};
    return ids;
}

Json run_reproduction(const ReproduceOptions& options)
{
    const FiniteAlgebra G = options.generator ? *options.generator : builtin_crystal();
    const Caps& caps = options.caps;

    struct Item {
        std::string id;
        std::string claim;
        bool blocking;
        std::function<Outcome()> run;
    };
    std::vector<Item> items{
        {"algebra.validate", "the generator is a relevant algebra", true, [&] { return validate_item(G, caps); }},
        {"crystal.subalgebras", "the subuniverses are exactly the eight expected proper ones plus the whole algebra",
         true, [&] { return subalgebras_item(G, caps); }},
        {"crystal.simple", "every nontrivial subalgebra is simple", true, [&] { return simple_item(G, caps); }},
        {"crystal.proof-moves", "the congruence computations used for simplicity re-verify", true,
         [&] { return proof_moves_item(G, caps); }},
        {"crystal.cep", "HS of the generator has the congruence extension property", true,
         [&] { return cep_item(G, caps); }},
        {"crystal.automorphisms", "the automorphisms are the identity and the a/b swap", true,
         [&] { return automorphisms_item(G, caps); }},
        {"crystal.extensible", "every isomorphism between nontrivial subalgebras extends to an automorphism", true,
         [&] { return extensible_item(G, caps); }},
        {"crystal.amalgamation", "every span of nontrivial subalgebras amalgamates in the generator", true,
         [&] { return amalgamation_item(G, caps); }},
        {"vsp.scan", "no variable-disjoint implications in C or M; Boolean2 has p & ~p -> q", true,
         [&] { return vsp_item(G, options.vsp_bound, caps); }},
        {"interpolation.suite", "seeded problems all have verified Maehara interpolants", true,
         [&] { return mip_item(G, options.seed, options.instances, caps); }},
    };
    if (options.exploratory)
        items.push_back({"exploratory.belnap-cep", "search for a CEP failure in the variety of M", false,
                         [&] { return belnap_cep_item(caps); }});

    Json report{{"generator", G.name()}, {"seed", options.seed}, {"items", Json::array()}};
    std::size_t passed = 0, failed = 0, errors = 0, inconclusive = 0;
    for (const auto& item : items) {
        const auto start = std::chrono::steady_clock::now();
        Json j{{"id", item.id}, {"claim", item.claim}, {"blocking", item.blocking}};
        try {
            auto outcome = item.run();
            j["status"] = outcome.status;
            if (!outcome.error_type.empty()) {
                j["error_type"] = outcome.error_type;
                j["error"] = outcome.error;
            }
            j["details"] = outcome.details.is_null() ? Json::object() : std::move(outcome.details);
        } catch (const std::exception& e) {
            j["status"] = "error";
            j["error_type"] = error_type(e);
            j["error"] = e.what();
            j["details"] = Json::object();
        }
        j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const std::string status = j["status"];
        if (status == "pass")
            ++passed;
        else if (status == "inconclusive")
            ++inconclusive;
        else if (!item.blocking)
            ++inconclusive;
        else if (status == "fail")
            ++failed;
        else
            ++errors;
        report["items"].push_back(std::move(j));
    }
    report["summary"] = {{"passed", passed},
                         {"failed", failed},
                         {"errors", errors},
                         {"inconclusive", inconclusive},
                         {"all_blocking_passed", failed == 0 && errors == 0}};
    return report;
}

} // namespace relog
