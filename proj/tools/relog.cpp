// relog: command-line front end. Exit codes: 0 holds or succeeded, 1 the
// property fails or nothing was found, 2 usage or engine error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "relog/error.hpp"
#include "relog/interp.hpp"
#include "relog/morph.hpp"
#include "relog/reproduce.hpp"
#include "relog/subcon.hpp"

using namespace relog;

namespace {

struct Settings {
    std::string algebra = "crystal";
    std::string format = "text";
    std::size_t cap_elements = 0;
    std::uint64_t seed = 1;
    std::size_t bound = 0;
};

struct Output {
    Json json;
    std::string text;
    int exit = 0;
};

std::string braces(const std::vector<std::string>& names)
{
    std::string s = "{";
    for (std::size_t i = 0; i < names.size(); ++i)
        s += (i ? "," : "") + names[i];
    return s + "}";
}

std::vector<std::string> names_of(const FiniteAlgebra& A, std::span<const Element> xs)
{
    std::vector<std::string> out;
    for (auto x : xs)
        out.push_back(A.element_name(x));
    return out;
}

// "bot,t,f,top" or "{bot,t,f,top}".
Subuniverse parse_subuniverse(const FiniteAlgebra& A, std::string text)
{
    std::erase_if(text, [](char c) { return c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c)); });
    Subuniverse s;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty())
            s.members.push_back(A.at(item));
    std::sort(s.members.begin(), s.members.end());
    s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
    return s;
}

FiniteAlgebra restrict_to(const FiniteAlgebra& A, const std::string& sub)
{
    if (sub.empty())
        return A;
    return subalgebra(A, parse_subuniverse(A, sub));
}

std::string map_text(const FiniteAlgebra& source, const FiniteAlgebra& target, std::span<const Element> map)
{
    std::string s;
    for (Element x = 0; x < map.size(); ++x)
        s += (x ? " " : "") + source.element_name(x) + "->" + target.element_name(map[x]);
    return s;
}

Json map_json(const FiniteAlgebra& source, const FiniteAlgebra& target, std::span<const Element> map)
{
    Json j = Json::object();
    for (Element x = 0; x < map.size(); ++x)
        j[source.element_name(x)] = target.element_name(map[x]);
    return j;
}

std::string valuation_text(const FiniteAlgebra& A, const Countermodel& cm)
{
    std::string s = cm.algebra + ":";
    for (const auto& [var, value] : cm.valuation)
        s += " " + var + "=" + A.element_name(value);
    return s;
}

Output holds_output(bool holds, Json json, std::string text)
{
    json["status"] = holds ? "holds" : "fails";
    return {std::move(json), std::move(text) + (holds ? "holds\n" : "fails\n"), holds ? 0 : 1};
}

// ---------------------------------------------------------------------------

Output cmd_subalgebras(const FiniteAlgebra& A, bool proper, const Caps& caps)
{
    Json list = Json::array();
    std::string text;
    for (const auto& s : all_subuniverses(A, false, caps)) {
        if (s.size() == 0 || (proper && s.size() == A.size()))
            continue;
        auto names = names_of(A, s.members);
        text += braces(names) + "\n";
        list.push_back(names);
    }
    return {{{"status", "ok"}, {"count", list.size()}, {"subuniverses", list}}, text, 0};
}

Output cmd_congruences(const FiniteAlgebra& A, const std::string& principal, const Caps& caps)
{
    auto blocks_of = [&](const Congruence& c) {
        Json blocks = Json::array();
        std::string text;
        for (const auto& b : c.blocks()) {
            auto names = names_of(A, b);
            blocks.push_back(names);
            text += braces(names);
        }
        return std::pair{blocks, text};
    };
    if (!principal.empty()) {
        auto pair = parse_subuniverse(A, principal);
        if (pair.members.size() != 2)
            throw UsageError("--principal needs two distinct elements");
        auto theta = principal_congruence(A, pair.members[0], pair.members[1]);
        auto [blocks, text] = blocks_of(theta);
        return {{{"status", "ok"}, {"principal", names_of(A, pair.members)}, {"blocks", blocks},
                 {"full", theta.is_full()}},
                text + "\n", 0};
    }
    Json list = Json::array();
    std::string text;
    for (const auto& c : congruence_lattice(A, caps)) {
        auto [blocks, line] = blocks_of(c);
        list.push_back(blocks);
        text += line + "\n";
    }
    return {{{"status", "ok"}, {"count", list.size()}, {"congruences", list}}, text, 0};
}

Output cmd_check(const FiniteAlgebra& A, const std::string& property, const Caps& caps)
{
    Json j{{"property", property}};
    if (property == "simple") {
        auto lattice = congruence_lattice(A, caps);
        j["congruences"] = lattice.size();
        return holds_output(is_simple(A, caps), j, std::to_string(lattice.size()) + " congruences\n");
    }
    if (property == "fsi")
        return holds_output(is_fsi(A, caps), j, "");
    if (property == "cep") {
        auto K = hs_class(A, false, caps);
        auto report = check_cep_class(K, caps);
        j["class_size"] = K.size();
        j["pairs_checked"] = report.pairs_checked;
        j["witnesses_checked"] = report.witnesses_checked;
        Json failures = Json::array();
        std::string text = std::to_string(K.size()) + " algebras in HS, " + std::to_string(report.pairs_checked) +
                           " pairs, " + std::to_string(report.witnesses_checked) + " congruences checked\n";
        for (const auto& w : report.failures) {
            Json blocks = Json::array();
            std::string line;
            for (const auto& b : w.theta.blocks()) {
                blocks.push_back(names_of(w.inner, b));
                line += braces(names_of(w.inner, b));
            }
            failures.push_back({{"inner", w.inner.element_names()}, {"outer", w.outer.name()}, {"theta", blocks}});
            text += "not extendable: " + line + " on " + braces(w.inner.element_names()) + " in " + w.outer.name() +
                    "\n";
        }
        j["failures"] = failures;
        return holds_output(report.holds, j, text);
    }
    if (property == "extensible") {
        auto report = is_extensible(A, caps);
        j["isomorphisms_checked"] = report.isomorphisms_checked;
        Json certs = Json::array();
        std::string text;
        for (const auto& c : report.certificates) {
            Json phi = Json::object();
            std::string line;
            for (auto [x, y] : c.phi.pairs) {
                phi[A.element_name(x)] = A.element_name(y);
                line += (line.empty() ? "" : " ") + A.element_name(x) + "->" + A.element_name(y);
            }
            certs.push_back({{"phi", phi}, {"extension", map_json(A, A, c.extension.map)}});
            text += line + "  extends to  " + map_text(A, A, c.extension.map) + "\n";
        }
        j["certificates"] = certs;
        if (report.failure) {
            Json phi = Json::object();
            std::string line;
            for (auto [x, y] : report.failure->pairs) {
                phi[A.element_name(x)] = A.element_name(y);
                line += (line.empty() ? "" : " ") + A.element_name(x) + "->" + A.element_name(y);
            }
            j["failure"] = phi;
            text += "does not extend: " + line + "\n";
        }
        return holds_output(report.holds, j, text);
    }
    throw UsageError("unknown property '" + property + "' (simple, fsi, cep, extensible)");
}

Output morphism_list(const std::vector<Morphism>& ms, const FiniteAlgebra& source, const FiniteAlgebra& target)
{
    Json list = Json::array();
    std::string text;
    for (const auto& m : ms) {
        list.push_back({{"kind", kind_name(m.kind)}, {"map", map_json(source, target, m.map)}});
        text += std::string(kind_name(m.kind)) + ": " + map_text(source, target, m.map) + "\n";
    }
    const bool found = !ms.empty();
    return {{{"status", found ? "ok" : "not_found"}, {"count", ms.size()}, {"morphisms", list}},
            text + std::to_string(ms.size()) + " found\n", found ? 0 : 1};
}

Output cmd_homs(const FiniteAlgebra& A, const FiniteAlgebra& B, const std::string& kind, const Caps& caps)
{
    if (kind == "hom")
        return morphism_list(homomorphisms(A, B, caps), A, B);
    if (kind == "embedding")
        return morphism_list(embeddings(A, B, caps), A, B);
    if (kind == "iso")
        return morphism_list(isomorphisms(A, B, caps), A, B);
    throw UsageError("unknown --kind '" + kind + "' (hom, embedding, iso)");
}

Json amalgam_json(const Span& span, const Amalgam& am)
{
    return {{"target", am.target.name()},
            {"exponent", am.exponent},
            {"from_left", map_json(span.left, am.target, am.from_left.map)},
            {"from_right", map_json(span.right, am.target, am.from_right.map)}};
}

struct AmalgamateArgs {
    std::string apex, left, right, mode = "ap", generator;
    bool all = false;
};

Output cmd_amalgamate(const FiniteAlgebra& A, const AmalgamateArgs& args, unsigned bound, const Caps& caps)
{
    const AmalgamMode mode = args.mode == "tip" ? AmalgamMode::tip : AmalgamMode::ap;
    if (args.mode != "ap" && args.mode != "tip")
        throw UsageError("--mode must be ap or tip");
    const FiniteAlgebra G = args.generator.empty() ? A : resolve_algebra(args.generator);
    if (args.all) {
        std::vector<FiniteAlgebra> subs;
        for (const auto& s : all_subuniverses(A, false, caps))
            if (s.size() > 1)
                subs.push_back(s.size() == A.size() ? A : subalgebra(A, s));
        std::size_t spans = 0, found = 0;
        Json missing = Json::array();
        std::string text;
        for (const auto& apex : subs)
            for (const auto& left : subs)
                for (const auto& right : subs)
                    for (const auto& l : mode == AmalgamMode::ap ? embeddings(apex, left, caps)
                                                                 : homomorphisms(apex, left, caps))
                        for (const auto& r : embeddings(apex, right, caps)) {
                            ++spans;
                            Span span{apex, left, right, l, r};
                            auto res = amalgamate_span(span, mode, G, bound, caps);
                            if (res.amalgam && verify_amalgam(span, *res.amalgam, mode)) {
                                ++found;
                                continue;
                            }
                            missing.push_back({{"apex", apex.element_names()}, {"left", left.element_names()},
                                               {"right", right.element_names()}});
                            text += "no amalgam: " + braces(apex.element_names()) + " -> " +
                                    braces(left.element_names()) + ", " + braces(right.element_names()) + "\n";
                        }
        const bool ok = found == spans;
        text += std::to_string(found) + "/" + std::to_string(spans) + " spans amalgamated\n";
        return {{{"status", ok ? "ok" : "not_found"}, {"spans", spans}, {"amalgamated", found}, {"missing", missing}},
                text, ok ? 0 : 1};
    }
    if (args.apex.empty() || args.left.empty() || args.right.empty())
        throw UsageError("amalgamate needs --apex, --left and --right, or --all");
    const auto apex_s = parse_subuniverse(A, args.apex);
    const auto left_s = parse_subuniverse(A, args.left);
    const auto right_s = parse_subuniverse(A, args.right);
    const auto apex = subalgebra(A, apex_s), left = subalgebra(A, left_s), right = subalgebra(A, right_s);
    // Legs are the inclusions.
    auto inclusion = [&](const Subuniverse& from, const Subuniverse& to, const FiniteAlgebra& src,
                         const FiniteAlgebra& dst) {
        Morphism m{src.name(), dst.name(), {}, MorphismKind::embedding};
        for (auto x : from.members) {
            auto it = std::find(to.members.begin(), to.members.end(), x);
            if (it == to.members.end())
                throw UsageError("apex is not contained in " + dst.name());
            m.map.push_back(static_cast<Element>(it - to.members.begin()));
        }
        return m;
    };
    Span span{apex, left, right, inclusion(apex_s, left_s, apex, left), inclusion(apex_s, right_s, apex, right)};
    auto res = amalgamate_span(span, mode, G, bound, caps);
    Json j{{"candidates_tried", res.candidates_tried}, {"exhausted_bound", res.exhausted_bound}};
    if (!res.amalgam) {
        j["status"] = "not_found";
        return {j, "no amalgam up to power " + std::to_string(res.exhausted_bound) + "\n", 1};
    }
    j["status"] = "ok";
    j["amalgam"] = amalgam_json(span, *res.amalgam);
    std::string text = "amalgam in " + res.amalgam->target.name() + "\n  left:  " +
                       map_text(left, res.amalgam->target, res.amalgam->from_left.map) + "\n  right: " +
                       map_text(right, res.amalgam->target, res.amalgam->from_right.map) + "\n";
    return {j, text, 0};
}

Output cmd_entails(const FiniteAlgebra& A, const std::string& premises, const std::string& conclusion,
                   const Caps& caps)
{
    const auto ps = parse_formula_list(premises);
    const auto c = parse_formula(conclusion);
    const std::vector<FiniteAlgebra> K{A};
    auto v = entails(K, ps, c, caps);
    Json j = to_json(K, v);
    std::string text;
    if (v.countermodel)
        text = "countermodel " + valuation_text(A, *v.countermodel) + "\n";
    return holds_output(v.holds, j, text);
}

struct InterpolateArgs {
    std::string sigma, gamma, alpha, problem;
};

Output cmd_interpolate(const FiniteAlgebra& A, const InterpolateArgs& args, const Caps& caps)
{
    std::vector<Formula> sigma, gamma;
    std::optional<Formula> alpha;
    if (!args.problem.empty()) {
        std::ifstream in(args.problem);
        if (!in)
            throw DataFileMissing("cannot open problem file " + args.problem);
        Json p;
        try {
            p = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("problem file: ") + e.what(), e.byte);
        }
        for (const auto& f : p.value("sigma", Json::array()))
            sigma.push_back(parse_formula(f.get<std::string>()));
        for (const auto& f : p.value("gamma", Json::array()))
            gamma.push_back(parse_formula(f.get<std::string>()));
        if (!p.contains("alpha"))
            throw UsageError("problem file lacks \"alpha\"");
        alpha = parse_formula(p["alpha"].get<std::string>());
    } else {
        if (args.alpha.empty())
            throw UsageError("interpolate needs --alpha (or --problem)");
        sigma = parse_formula_list(args.sigma);
        gamma = parse_formula_list(args.gamma);
        alpha = parse_formula(args.alpha);
    }
    const std::vector<FiniteAlgebra> K{A};
    try {
        auto r = maehara_interpolant(sigma, gamma, *alpha, K, caps);
        auto check = verify_interpolant(sigma, gamma, *alpha, r.delta, K, caps);
        Json j = to_json(K, r);
        j["status"] = "ok";
        j["verified"] = check.holds;
        std::string text = "delta = " + r.delta.to_string() + "  (size " + std::to_string(r.size) + ", shared " +
                           braces(r.shared) + ")\n" + "gamma |= delta: " +
                           (r.gamma_entails_delta.holds ? "holds" : "fails") + "\n" +
                           "sigma, delta |= alpha: " + (r.sigma_delta_entails_alpha.holds ? "holds" : "fails") + "\n";
        return {j, text, check.holds ? 0 : 1};
    } catch (const NoInterpolantFound& e) {
        return {{{"status", "not_found"}, {"error", e.what()}}, std::string("no interpolant: ") + e.what() + "\n", 1};
    }
}

Output cmd_vsp(const FiniteAlgebra& A, std::size_t bound, std::size_t per_side, const Caps& caps)
{
    const std::vector<FiniteAlgebra> K{A};
    auto r = vsp_scan(K, bound, per_side, caps);
    Json list = Json::array();
    std::string text = std::to_string(r.functions_per_side) + " term functions per side, " +
                       std::to_string(r.pairs_checked) + " pairs\n";
    for (const auto& v : r.violations) {
        auto s = Formula::implies(v.antecedent, v.consequent).to_string();
        list.push_back(s);
        text += "theorem: " + s + "\n";
    }
    Json j{{"bound", bound}, {"functions_per_side", r.functions_per_side}, {"pairs_checked", r.pairs_checked},
           {"violations", list}};
    return holds_output(r.violations.empty(), j, text);
}

Output cmd_free(const FiniteAlgebra& A, std::size_t k, bool list, const Caps& caps)
{
    auto F = free_algebra(A, k, caps);
    Json j{{"status", "ok"},
           {"generators", F.generators()},
           {"coordinates", F.coordinate_count()},
           {"elements", F.size()}};
    std::string text = std::to_string(F.size()) + " elements over " + std::to_string(F.coordinate_count()) +
                       " coordinates\n";
    if (list) {
        Json reps = Json::array();
        for (std::size_t e = 0; e < F.size(); ++e) {
            auto s = F.representative(e).to_string();
            reps.push_back(s);
            text += s + "\n";
        }
        j["representatives"] = reps;
    }
    return {j, text, 0};
}

Output cmd_validate(const FiniteAlgebra& A)
{
    Json list = Json::array();
    std::string text;
    bool all = true;
    for (const auto& r : validate_relevant_algebra(A)) {
        Json item{{"axiom", r.axiom}, {"holds", r.holds}};
        text += (r.holds ? "ok    " : "FAIL  ") + r.axiom;
        if (r.counterexample) {
            item["counterexample"] = names_of(A, *r.counterexample);
            text += "  at " + braces(names_of(A, *r.counterexample));
        }
        text += "\n";
        all = all && r.holds;
        list.push_back(item);
    }
    return holds_output(all, {{"axioms", list}}, text);
}

Output cmd_reproduce(const std::string& generator, bool generator_given, std::size_t instances,
                     std::uint64_t seed, std::size_t bound, const Caps& caps)
{
    ReproduceOptions o;
    if (generator_given)
        o.generator = resolve_algebra(generator);
    o.instances = instances;
    o.seed = seed;
    if (bound)
        o.vsp_bound = bound;
    o.caps = caps;
    Json report = run_reproduction(o);
    std::string text;
    for (const auto& item : report["items"]) {
        std::string status = item["status"];
        std::transform(status.begin(), status.end(), status.begin(), ::toupper);
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.3fs", item["seconds"].get<double>());
        text += "[" + status + "] " + item["id"].get<std::string>() + "  " + secs;
        if (item.contains("error"))
            text += "  " + item["error_type"].get<std::string>() + ": " + item["error"].get<std::string>();
        text += "\n";
    }
    const bool ok = report["summary"]["all_blocking_passed"];
    report["status"] = ok ? "holds" : "fails";
    return {report, text + (ok ? "all items pass\n" : "some items fail\n"), ok ? 0 : 1};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite relevant algebras: subalgebras, congruences, morphisms, consequence, interpolation"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings s;
    app.add_option("--algebra", s.algebra, "crystal, belnap-m, boolean2, trivial, or an .alg file");
    app.add_option("--format", s.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cap-elements", s.cap_elements, "element budget for powers and free algebras")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", s.seed, "seed for randomized suites");
    app.add_option("--bound", s.bound, "size or power bound for scans");

    std::string sub, principal, property = "simple", target = "crystal", kind = "hom";
    bool proper = false, list = false;
    std::size_t generators = 1, per_side = 1, instances = 500;
    std::string premises, conclusion;
    AmalgamateArgs am;
    InterpolateArgs ip;

    auto* c_sub = app.add_subcommand("subalgebras", "list all nonempty subuniverses in canonical order");
    c_sub->add_flag("--proper", proper, "omit the whole universe");
    auto* c_con = app.add_subcommand("congruences", "list the congruence lattice");
    c_con->add_option("--subuniverse", sub, "work in the subalgebra on these elements");
    c_con->add_option("--principal", principal, "show only Cg(x,y) for \"x,y\"");
    auto* c_check = app.add_subcommand("check", "decide a structural property");
    c_check->add_option("--property", property, "simple, fsi, cep or extensible")->required();
    c_check->add_option("--subuniverse", sub, "work in the subalgebra on these elements");
    auto* c_homs = app.add_subcommand("homs", "enumerate homomorphisms into --target");
    c_homs->add_option("--target", target, "target algebra");
    c_homs->add_option("--kind", kind, "hom, embedding or iso");
    auto* c_autos = app.add_subcommand("autos", "enumerate automorphisms");
    auto* c_am = app.add_subcommand("amalgamate", "amalgamate a span of subalgebras");
    c_am->add_option("--apex", am.apex, "apex subuniverse");
    c_am->add_option("--left", am.left, "left subuniverse");
    c_am->add_option("--right", am.right, "right subuniverse");
    c_am->add_option("--mode", am.mode, "ap or tip");
    c_am->add_option("--generator", am.generator, "algebra whose powers are searched (default: --algebra)");
    c_am->add_flag("--all", am.all, "every span of nontrivial subalgebras, all embeddings");
    auto* c_ent = app.add_subcommand("entails", "decide premises |= conclusion");
    c_ent->add_option("--premises", premises, "comma-separated formulas");
    c_ent->add_option("--conclusion", conclusion, "formula")->required();
    auto* c_int = app.add_subcommand("interpolate", "synthesize a Maehara interpolant");
    c_int->add_option("--sigma", ip.sigma, "comma-separated side premises");
    c_int->add_option("--gamma", ip.gamma, "comma-separated premises");
    c_int->add_option("--alpha", ip.alpha, "conclusion");
    c_int->add_option("--problem", ip.problem, "JSON file {\"sigma\": [...], \"gamma\": [...], \"alpha\": \"...\"}");
    auto* c_vsp = app.add_subcommand("vsp-scan", "search for variable-disjoint theorems");
    c_vsp->add_option("--vars-per-side", per_side, "1 (p vs q) or more (p1.. vs q1..)");
    auto* c_free = app.add_subcommand("free-algebra", "build the free algebra on k generators");
    c_free->add_option("--generators", generators, "k")->check(CLI::PositiveNumber);
    c_free->add_flag("--list", list, "print every representative");
    auto* c_val = app.add_subcommand("validate", "check the relevant-algebra axioms");
    auto* c_rep = app.add_subcommand("reproduce", "run every reproduction item");
    c_rep->add_option("--instances", instances, "interpolation problems to generate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    Output out;
    try {
        Caps caps;
        if (s.cap_elements) {
            caps.max_elements = s.cap_elements;
            caps.max_free_elements = s.cap_elements;
        }
        const bool algebra_given = app.count("--algebra") > 0;
        auto load = [&] { return resolve_algebra(s.algebra); };
        if (chosen == c_sub)
            out = cmd_subalgebras(load(), proper, caps);
        else if (chosen == c_con)
            out = cmd_congruences(restrict_to(load(), sub), principal, caps);
        else if (chosen == c_check)
            out = cmd_check(restrict_to(load(), sub), property, caps);
        else if (chosen == c_homs)
            out = cmd_homs(load(), resolve_algebra(target), kind, caps);
        else if (chosen == c_autos) {
            auto A = load();
            out = morphism_list(automorphisms(A, caps), A, A);
        } else if (chosen == c_am)
            out = cmd_amalgamate(load(), am, s.bound ? static_cast<unsigned>(s.bound) : 2, caps);
        else if (chosen == c_ent)
            out = cmd_entails(load(), premises, conclusion, caps);
        else if (chosen == c_int)
            out = cmd_interpolate(load(), ip, caps);
        else if (chosen == c_vsp)
            out = cmd_vsp(load(), s.bound ? s.bound : 4, per_side, caps);
        else if (chosen == c_free)
            out = cmd_free(load(), generators, list, caps);
        else if (chosen == c_val)
            out = cmd_validate(load());
        else if (chosen == c_rep)
            out = cmd_reproduce(s.algebra, algebra_given, instances, s.seed, s.bound, caps);
    } catch (const std::exception& e) {
        out = {{{"status", "error"}, {"error_type", error_type(e)}, {"error", e.what()}}, "", 2};
        if (s.format == "text")
            std::cerr << "error: " << error_type(e) << ": " << e.what() << "\n";
    }

    if (s.format == "json") {
        Json j{{"command", command}, {"algebra", s.algebra}, {"exit_code", out.exit}};
        for (auto& [key, value] : out.json.items())
            j[key] = value;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << out.text;
    }
    return out.exit;
}
