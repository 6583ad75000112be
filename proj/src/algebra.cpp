#include "relog/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "relog/error.hpp"

#ifndef RELOG_DEFAULT_DATA_DIR
#define RELOG_DEFAULT_DATA_DIR "data"
#endif

namespace relog {

std::string_view operation_name(Operation op)
{
    switch (op) {
    case Operation::meet: return "meet";
    case Operation::join: return "join";
    case Operation::fusion: return "fusion";
    case Operation::neg: return "neg";
    }
    return "?";
}

std::optional<Operation> parse_operation(std::string_view name)
{
    for (auto op : {Operation::meet, Operation::join, Operation::fusion, Operation::neg})
        if (operation_name(op) == name)
            return op;
    return std::nullopt;
}

FiniteAlgebra::FiniteAlgebra(std::string name,
                             std::vector<std::string> elements,
                             std::vector<Element> meet,
                             std::vector<Element> join,
                             std::vector<Element> fusion,
                             std::vector<Element> neg)
    : name_(std::move(name)),
      names_(std::move(elements)),
      meet_(std::move(meet)),
      join_(std::move(join)),
      fusion_(std::move(fusion)),
      neg_(std::move(neg))
{
    const std::size_t n = names_.size();
    auto check = [&](const std::vector<Element>& table, std::size_t expected, std::string_view op) {
        if (table.size() != expected)
            throw ArityError("operation " + std::string(op) + " has " + std::to_string(table.size()) +
                             " entries, expected " + std::to_string(expected));
        for (Element v : table)
            if (v >= n)
                throw UnknownElement("operation " + std::string(op) + " refers to element index " +
                                     std::to_string(v));
    };
    check(meet_, n * n, "meet");
    check(join_, n * n, "join");
    check(fusion_, n * n, "fusion");
    check(neg_, n, "neg");

    std::vector<std::string> sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError("duplicate element name in algebra " + name_, 0);
}

std::optional<Element> FiniteAlgebra::find(std::string_view element) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == element)
            return static_cast<Element>(i);
    return std::nullopt;
}

Element FiniteAlgebra::at(std::string_view element) const
{
    if (auto x = find(element))
        return *x;
    throw UnknownElement("algebra " + name_ + " has no element '" + std::string(element) + "'");
}

Element FiniteAlgebra::apply(Operation op, Element x, Element y) const
{
    switch (op) {
    case Operation::meet: return meet(x, y);
    case Operation::join: return join(x, y);
    case Operation::fusion: return fusion(x, y);
    case Operation::neg: return neg(x);
    }
    return x;
}

std::span<const Element> FiniteAlgebra::table(Operation op) const
{
    switch (op) {
    case Operation::meet: return meet_;
    case Operation::join: return join_;
    case Operation::fusion: return fusion_;
    case Operation::neg: return neg_;
    }
    return {};
}

bool FiniteAlgebra::same_tables(const FiniteAlgebra& other) const
{
    return names_ == other.names_ && meet_ == other.meet_ && join_ == other.join_ &&
           fusion_ == other.fusion_ && neg_ == other.neg_;
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const
{
    FiniteAlgebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

// ---------------------------------------------------------------------------
// Axiom checklist

namespace {

Axiom unary(std::string name, std::function<bool(const FiniteAlgebra&, Element)> f)
{
    return {std::move(name), 1, [f](const FiniteAlgebra& A, std::span<const Element> v) { return f(A, v[0]); }};
}

Axiom binary(std::string name, std::function<bool(const FiniteAlgebra&, Element, Element)> f)
{
    return {std::move(name), 2,
            [f](const FiniteAlgebra& A, std::span<const Element> v) { return f(A, v[0], v[1]); }};
}

Axiom ternary(std::string name, std::function<bool(const FiniteAlgebra&, Element, Element, Element)> f)
{
    return {std::move(name), 3,
            [f](const FiniteAlgebra& A, std::span<const Element> v) { return f(A, v[0], v[1], v[2]); }};
}

std::vector<Axiom> make_axioms()
{
    using A = const FiniteAlgebra&;
    std::vector<Axiom> axioms;
    axioms.push_back(unary("meet-idempotent", [](A a, Element x) { return a.meet(x, x) == x; }));
    axioms.push_back(unary("join-idempotent", [](A a, Element x) { return a.join(x, x) == x; }));
    axioms.push_back(binary("meet-commutative", [](A a, Element x, Element y) { return a.meet(x, y) == a.meet(y, x); }));
    axioms.push_back(binary("join-commutative", [](A a, Element x, Element y) { return a.join(x, y) == a.join(y, x); }));
    axioms.push_back(ternary("meet-associative", [](A a, Element x, Element y, Element z) {
        return a.meet(a.meet(x, y), z) == a.meet(x, a.meet(y, z));
    }));
    axioms.push_back(ternary("join-associative", [](A a, Element x, Element y, Element z) {
        return a.join(a.join(x, y), z) == a.join(x, a.join(y, z));
    }));
    axioms.push_back(binary("absorption", [](A a, Element x, Element y) {
        return a.meet(x, a.join(x, y)) == x && a.join(x, a.meet(x, y)) == x;
    }));
    axioms.push_back(ternary("distributive", [](A a, Element x, Element y, Element z) {
        return a.meet(x, a.join(y, z)) == a.join(a.meet(x, y), a.meet(x, z));
    }));
    axioms.push_back(unary("neg-involution", [](A a, Element x) { return a.neg(a.neg(x)) == x; }));
    axioms.push_back(binary("de-morgan", [](A a, Element x, Element y) {
        return a.neg(a.meet(x, y)) == a.join(a.neg(x), a.neg(y));
    }));
    axioms.push_back(binary("fusion-commutative", [](A a, Element x, Element y) {
        return a.fusion(x, y) == a.fusion(y, x);
    }));
    axioms.push_back(ternary("fusion-associative", [](A a, Element x, Element y, Element z) {
        return a.fusion(a.fusion(x, y), z) == a.fusion(x, a.fusion(y, z));
    }));
    axioms.push_back(ternary("fusion-monotone", [](A a, Element x, Element y, Element z) {
        return !a.leq(x, y) || a.leq(a.fusion(x, z), a.fusion(y, z));
    }));
    axioms.push_back(ternary("fusion-distributes-over-join", [](A a, Element x, Element y, Element z) {
        return a.fusion(x, a.join(y, z)) == a.join(a.fusion(x, y), a.fusion(x, z));
    }));
    axioms.push_back(unary("square-increasing", [](A a, Element x) { return a.leq(x, a.fusion(x, x)); }));
    axioms.push_back(ternary("residuation", [](A a, Element x, Element y, Element z) {
        return a.leq(a.fusion(x, y), z) == a.leq(x, a.arrow(y, z));
    }));
    return axioms;
}

} // namespace

const std::vector<Axiom>& relevant_algebra_axioms()
{
    static const std::vector<Axiom> axioms = make_axioms();
    return axioms;
}

std::vector<Axiom> select_axioms(std::span<const std::string> names)
{
    std::vector<Axiom> out;
    for (const auto& name : names) {
        const auto& all = relevant_algebra_axioms();
        auto it = std::find_if(all.begin(), all.end(), [&](const Axiom& a) { return a.name == name; });
        if (it == all.end())
            throw UnknownElement("unknown axiom '" + name + "'");
        out.push_back(*it);
    }
    return out;
}

std::vector<AxiomReport> validate_relevant_algebra(const FiniteAlgebra& algebra)
{
    return validate_relevant_algebra(algebra, relevant_algebra_axioms());
}

std::vector<AxiomReport> validate_relevant_algebra(const FiniteAlgebra& algebra, std::span<const Axiom> axioms)
{
    std::vector<AxiomReport> reports;
    const auto n = static_cast<Element>(algebra.size());
    for (const auto& axiom : axioms) {
        AxiomReport report{axiom.name, true, std::nullopt};
        std::vector<Element> tuple(axiom.arity, 0);
        // Odometer over n^arity tuples, first coordinate slowest.
        bool done = n == 0;
        while (!done) {
            if (!axiom.holds(algebra, tuple)) {
                report.holds = false;
                report.counterexample = tuple;
                break;
            }
            std::size_t i = tuple.size();
            while (i > 0) {
                --i;
                if (++tuple[i] < n)
                    break;
                tuple[i] = 0;
                if (i == 0)
                    done = true;
            }
            if (tuple.empty())
                done = true;
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

bool all_hold(std::span<const AxiomReport> reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const AxiomReport& r) { return r.holds; });
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view source)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= source.size()) {
        auto end = source.find('\n', start);
        if (end == std::string_view::npos)
            end = source.size();
        ++number;
        auto text = source.substr(start, end - start);
        if (auto hash = text.find('#'); hash != std::string_view::npos)
            text = text.substr(0, hash);
        std::istringstream in{std::string(text)};
        Line line{number, {}};
        for (std::string tok; in >> tok;)
            line.tokens.push_back(tok);
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
        start = end + 1;
    }
    return lines;
}

} // namespace

FiniteAlgebra load_algebra(std::string_view source)
{
    auto lines = tokenize(source);
    std::size_t pos = 0;
    auto expect_keyword = [&](std::string_view keyword) -> Line& {
        if (pos >= lines.size())
            throw ParseError("expected '" + std::string(keyword) + "' but reached end of input", lines.empty() ? 1 : lines.back().number, "line");
        auto& line = lines[pos];
        if (line.tokens.front() != keyword)
            throw ParseError("expected '" + std::string(keyword) + "', found '" + line.tokens.front() + "'", line.number, "line");
        ++pos;
        return line;
    };

    auto& header = expect_keyword("algebra");
    if (header.tokens.size() != 2)
        throw ParseError("'algebra' takes exactly one name", header.number, "line");
    std::string name = header.tokens[1];

    auto& elems = expect_keyword("elements");
    std::vector<std::string> elements(elems.tokens.begin() + 1, elems.tokens.end());
    if (elements.empty())
        throw ParseError("an algebra needs at least one element", elems.number, "line");
    std::unordered_map<std::string, Element> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (!index.emplace(elements[i], static_cast<Element>(i)).second)
            throw ParseError("duplicate element '" + elements[i] + "'", elems.number, "line");
    const std::size_t n = elements.size();

    std::vector<Element> tables[4];
    bool seen[4] = {false, false, false, false};
    while (pos < lines.size()) {
        auto& opline = expect_keyword("op");
        if (opline.tokens.size() != 3)
            throw ParseError("'op' takes an operation name and an arity", opline.number, "line");
        auto op = parse_operation(opline.tokens[1]);
        if (!op)
            throw ParseError("unknown operation '" + opline.tokens[1] + "'", opline.number, "line");
        const unsigned expected_arity = *op == Operation::neg ? 1 : 2;
        if (opline.tokens[2] != std::to_string(expected_arity))
            throw ArityError("operation " + opline.tokens[1] + " has arity " + std::to_string(expected_arity) +
                             ", file says " + opline.tokens[2]);
        auto slot = static_cast<std::size_t>(*op);
        if (seen[slot])
            throw ParseError("operation '" + opline.tokens[1] + "' defined twice", opline.number, "line");
        seen[slot] = true;

        const std::size_t rows = expected_arity == 1 ? 1 : n;
        std::vector<Element> table;
        for (std::size_t r = 0; r < rows; ++r) {
            if (pos >= lines.size() || lines[pos].tokens.front() == "op")
                throw ArityError("operation " + opline.tokens[1] + " has " + std::to_string(r) + " rows, expected " +
                                 std::to_string(rows));
            auto& row = lines[pos++];
            if (row.tokens.size() != n)
                throw ArityError("operation " + opline.tokens[1] + ": row at line " + std::to_string(row.number) +
                                 " has " + std::to_string(row.tokens.size()) + " entries, expected " + std::to_string(n));
            for (const auto& tok : row.tokens) {
                auto it = index.find(tok);
                if (it == index.end())
                    throw UnknownElement("unknown element '" + tok + "' at line " + std::to_string(row.number));
                table.push_back(it->second);
            }
        }
        tables[slot] = std::move(table);
    }
    for (auto op : {Operation::meet, Operation::join, Operation::fusion, Operation::neg})
        if (!seen[static_cast<std::size_t>(op)])
            throw ArityError("operation " + std::string(operation_name(op)) + " is missing");

    return FiniteAlgebra(std::move(name), std::move(elements), std::move(tables[0]), std::move(tables[1]),
                         std::move(tables[2]), std::move(tables[3]));
}

FiniteAlgebra load_algebra_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataFileMissing("cannot open algebra file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_algebra(buffer.str());
}

std::string serialize(const FiniteAlgebra& algebra)
{
    std::ostringstream out;
    const auto n = algebra.size();
    out << "algebra " << algebra.name() << '\n';
    out << "elements";
    for (const auto& e : algebra.element_names())
        out << ' ' << e;
    out << '\n';
    for (auto op : binary_operations) {
        out << "op " << operation_name(op) << " 2\n";
        for (Element x = 0; x < n; ++x) {
            for (Element y = 0; y < n; ++y)
                out << (y ? " " : "") << algebra.element_name(algebra.apply(op, x, y));
            out << '\n';
        }
    }
    out << "op neg 1\n";
    for (Element x = 0; x < n; ++x)
        out << (x ? " " : "") << algebra.element_name(algebra.neg(x));
    out << '\n';
    return out.str();
}

std::filesystem::path data_directory()
{
    if (const char* env = std::getenv("RELOG_DATA_DIR"); env && *env)
        return env;
    return RELOG_DEFAULT_DATA_DIR;
}

// ---------------------------------------------------------------------------
// Builtins

namespace {

FiniteAlgebra from_order(std::string name,
                         std::vector<std::string> elements,
                         const std::vector<std::vector<bool>>& leq,
                         std::vector<Element> neg,
                         std::vector<Element> fusion)
{
    const auto n = static_cast<Element>(elements.size());
    std::vector<Element> meet(n * n), join(n * n);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            std::optional<Element> glb, lub;
            for (Element z = 0; z < n; ++z) {
                if (leq[z][x] && leq[z][y] && (!glb || leq[*glb][z]))
                    glb = z;
                if (leq[x][z] && leq[y][z] && (!lub || leq[z][*lub]))
                    lub = z;
            }
            meet[x * n + y] = *glb;
            join[x * n + y] = *lub;
        }
    return FiniteAlgebra(std::move(name), std::move(elements), std::move(meet), std::move(join), std::move(fusion),
                         std::move(neg));
}

} // namespace

FiniteAlgebra builtin_crystal()
{
    // bot t a b f top
    enum : Element { bot, t, a, b, f, top };
    const std::vector<std::vector<Element>> below = {
        {bot}, {bot, t}, {bot, t, a}, {bot, t, b}, {bot, t, a, b, f}, {bot, t, a, b, f, top}};
    std::vector<std::vector<bool>> leq(6, std::vector<bool>(6, false));
    for (Element y = 0; y < 6; ++y)
        for (Element x : below[y])
            leq[x][y] = true;
    // t is the unit, bot annihilates, a and b are idempotent; every other
    // product of elements above t is top.
    const std::vector<Element> fusion = {
        bot, bot, bot, bot, bot, bot,
        bot, t,   a,   b,   f,   top,
        bot, a,   a,   top, top, top,
        bot, b,   top, b,   top, top,
        bot, f,   top, top, top, top,
        bot, top, top, top, top, top,
    };
    return from_order("crystal", {"bot", "t", "a", "b", "f", "top"}, leq, {top, f, a, b, t, bot}, fusion);
}

FiniteAlgebra builtin_belnap_m()
{
    auto path = data_directory() / "belnap_m.alg";
    if (!std::filesystem::exists(path))
        throw DataFileMissing("Belnap's M data file not found: " + path.string());
    return load_algebra_file(path);
}

FiniteAlgebra builtin_boolean2()
{
    return FiniteAlgebra("boolean2", {"0", "1"}, {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 0, 0, 1}, {1, 0});
}

FiniteAlgebra trivial_algebra(std::string element)
{
    return FiniteAlgebra("trivial", {std::move(element)}, {0}, {0}, {0}, {0});
}

FiniteAlgebra resolve_algebra(std::string_view name_or_path)
{
    if (name_or_path == "crystal")
        return builtin_crystal();
    if (name_or_path == "belnap-m")
        return builtin_belnap_m();
    if (name_or_path == "boolean2")
        return builtin_boolean2();
    if (name_or_path == "trivial")
        return trivial_algebra();
    std::filesystem::path path(name_or_path);
    if (!std::filesystem::exists(path))
        throw DataFileMissing("no builtin or file named '" + std::string(name_or_path) + "'");
    return load_algebra_file(path);
}

// ---------------------------------------------------------------------------
// Products

namespace {

void check_size(std::size_t elements, const Caps& caps)
{
    if (elements > caps.max_elements)
        throw CapExceeded("constructed algebra would have " + std::to_string(elements) +
                          " elements, cap is " + std::to_string(caps.max_elements));
    if (elements * elements > caps.max_table_cells)
        throw CapExceeded("constructed algebra would need " + std::to_string(elements * elements) +
                          " table cells, cap is " + std::to_string(caps.max_table_cells));
}

} // namespace

FiniteAlgebra product(const FiniteAlgebra& left, const FiniteAlgebra& right, const Caps& caps)
{
    const std::size_t nl = left.size(), nr = right.size();
    if (nr != 0 && nl > caps.max_elements / nr)
        throw CapExceeded("product too large");
    const std::size_t n = nl * nr;
    check_size(n, caps);

    auto strip = [](const std::string& s) {
        return s.size() >= 2 && s.front() == '(' && s.back() == ')' ? s.substr(1, s.size() - 2) : s;
    };
    std::vector<std::string> names;
    names.reserve(n);
    for (Element x = 0; x < nl; ++x)
        for (Element y = 0; y < nr; ++y)
            names.push_back("(" + strip(left.element_name(x)) + "," + right.element_name(y) + ")");

    auto pack = [nr](Element x, Element y) { return static_cast<Element>(x * nr + y); };
    std::vector<Element> tables[3];
    for (auto op : binary_operations) {
        auto& table = tables[static_cast<std::size_t>(op)];
        table.resize(n * n);
        for (Element u = 0; u < n; ++u)
            for (Element v = 0; v < n; ++v)
                table[u * n + v] = pack(left.apply(op, u / nr, v / nr), right.apply(op, u % nr, v % nr));
    }
    std::vector<Element> neg(n);
    for (Element u = 0; u < n; ++u)
        neg[u] = pack(left.neg(u / nr), right.neg(u % nr));
    return FiniteAlgebra(left.name() + "x" + right.name(), std::move(names), std::move(tables[0]),
                         std::move(tables[1]), std::move(tables[2]), std::move(neg));
}

FiniteAlgebra power(const FiniteAlgebra& algebra, unsigned exponent, const Caps& caps)
{
    if (exponent == 0)
        throw ArityError("power exponent must be at least 1");
    std::size_t n = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (n > caps.max_elements / std::max<std::size_t>(algebra.size(), 1))
            throw CapExceeded(algebra.name() + "^" + std::to_string(exponent) + " exceeds the cap of " +
                              std::to_string(caps.max_elements) + " elements");
        n *= algebra.size();
    }
    check_size(n, caps);

    const std::size_t base = algebra.size();
    std::vector<std::string> names(n);
    for (std::size_t u = 0; u < n; ++u) {
        std::string name = "(";
        std::size_t rest = u, div = n / base;
        for (unsigned i = 0; i < exponent; ++i, div = div ? div / base : 0) {
            name += (i ? "," : "") + algebra.element_name(static_cast<Element>(rest / div));
            rest %= div;
        }
        names[u] = name + ")";
    }

    // Coordinates: base-|A| digits, first coordinate most significant.
    auto lift = [&](auto&& f, std::size_t u, std::size_t v) {
        std::size_t out = 0, div = n / base;
        for (unsigned i = 0; i < exponent; ++i, div = div ? div / base : 0)
            out = out * base + f(static_cast<Element>((u / div) % base), static_cast<Element>((v / div) % base));
        return static_cast<Element>(out);
    };
    std::vector<Element> tables[3];
    for (auto op : binary_operations) {
        auto& table = tables[static_cast<std::size_t>(op)];
        table.resize(n * n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                table[u * n + v] = lift([&](Element x, Element y) { return algebra.apply(op, x, y); }, u, v);
    }
    std::vector<Element> neg(n);
    for (std::size_t u = 0; u < n; ++u)
        neg[u] = lift([&](Element x, Element) { return algebra.neg(x); }, u, 0);
    return FiniteAlgebra(algebra.name() + "^" + std::to_string(exponent), std::move(names), std::move(tables[0]),
                         std::move(tables[1]), std::move(tables[2]), std::move(neg));
}

} // namespace relog
