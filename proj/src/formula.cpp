#include "relog/formula.hpp"

#include <cctype>

#include "relog/error.hpp"

namespace relog {

Formula Formula::variable(std::string name)
{
    return Formula(std::make_shared<const Node>(Node{Connective::variable, std::move(name), nullptr, nullptr, 1}));
}

Formula Formula::negation(Formula operand)
{
    const auto size = operand.size() + 1;
    return Formula(std::make_shared<const Node>(
        Node{Connective::neg, {}, std::make_shared<const Formula>(std::move(operand)), nullptr, size}));
}

Formula Formula::binary(Connective op, Formula left, Formula right)
{
    const auto size = left.size() + right.size() + 1;
    return Formula(std::make_shared<const Node>(Node{op, {}, std::make_shared<const Formula>(std::move(left)),
                                                     std::make_shared<const Formula>(std::move(right)), size}));
}

Formula Formula::meet(Formula left, Formula right) { return binary(Connective::meet, std::move(left), std::move(right)); }
Formula Formula::join(Formula left, Formula right) { return binary(Connective::join, std::move(left), std::move(right)); }
Formula Formula::fusion(Formula left, Formula right) { return binary(Connective::fusion, std::move(left), std::move(right)); }

Formula Formula::implies(Formula antecedent, Formula consequent)
{
    return negation(fusion(std::move(antecedent), negation(std::move(consequent))));
}

void Formula::collect_variables(std::set<std::string>& out) const
{
    switch (connective()) {
    case Connective::variable: out.insert(name()); break;
    case Connective::neg: operand().collect_variables(out); break;
    default:
        left().collect_variables(out);
        right().collect_variables(out);
    }
}

std::set<std::string> Formula::variables() const
{
    std::set<std::string> out;
    collect_variables(out);
    return out;
}

Formula Formula::substitute(const std::string& var, const Formula& replacement) const
{
    switch (connective()) {
    case Connective::variable: return name() == var ? replacement : *this;
    case Connective::neg: return negation(operand().substitute(var, replacement));
    default: return binary(connective(), left().substitute(var, replacement), right().substitute(var, replacement));
    }
}

bool operator==(const Formula& a, const Formula& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.connective() != b.connective() || a.size() != b.size())
        return false;
    switch (a.connective()) {
    case Connective::variable: return a.name() == b.name();
    case Connective::neg: return a.operand() == b.operand();
    default: return a.left() == b.left() && a.right() == b.right();
    }
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength: -> 0, | 1, & 2, * 3, ~ and atoms 4.
bool is_arrow(const Formula& f)
{
    return f.connective() == Connective::neg && f.operand().connective() == Connective::fusion &&
           f.operand().right().connective() == Connective::neg;
}

void print(const Formula& f, int context, std::string& out)
{
    int level = 4;
    std::string body;
    if (is_arrow(f)) {
        level = 0;
        print(f.operand().left(), 1, body);
        body += " -> ";
        print(f.operand().right().operand(), 0, body);
    } else {
        switch (f.connective()) {
        case Connective::variable: body = f.name(); break;
        case Connective::neg:
            body = "~";
            print(f.operand(), 4, body);
            break;
        case Connective::join:
            level = 1;
            print(f.left(), 1, body);
            body += " | ";
            print(f.right(), 2, body);
            break;
        case Connective::meet:
            level = 2;
            print(f.left(), 2, body);
            body += " & ";
            print(f.right(), 3, body);
            break;
        case Connective::fusion:
            level = 3;
            print(f.left(), 3, body);
            body += " * ";
            print(f.right(), 4, body);
            break;
        }
    }
    if (level < context)
        out += "(" + body + ")";
    else
        out += body;
}

} // namespace

std::string Formula::to_string() const
{
    std::string out;
    print(*this, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula parse_all()
    {
        auto f = implication();
        skip();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos_); }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(std::string_view token)
    {
        skip();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    Formula implication()
    {
        auto left = disjunction();
        if (accept("->"))
            return Formula::implies(std::move(left), implication());
        return left;
    }

    Formula disjunction()
    {
        auto f = conjunction();
        while (accept("|"))
            f = Formula::join(std::move(f), conjunction());
        return f;
    }

    Formula conjunction()
    {
        auto f = product();
        while (accept("&"))
            f = Formula::meet(std::move(f), product());
        return f;
    }

    Formula product()
    {
        auto f = unary();
        while (accept("*"))
            f = Formula::fusion(std::move(f), unary());
        return f;
    }

    Formula unary()
    {
        if (accept("~"))
            return Formula::negation(unary());
        return atom();
    }

    Formula atom()
    {
        skip();
        if (pos_ >= text_.size())
            fail("unexpected end of formula");
        if (accept("(")) {
            auto f = implication();
            if (!accept(")"))
                fail("expected ')'");
            return f;
        }
        const char c = text_[pos_];
        if (c >= 'a' && c <= 'z') {
            const auto start = pos_;
            while (pos_ < text_.size() &&
                   ((text_[pos_] >= 'a' && text_[pos_] <= 'z') || (text_[pos_] >= '0' && text_[pos_] <= '9') ||
                    text_[pos_] == '_'))
                ++pos_;
            return Formula::variable(std::string(text_.substr(start, pos_ - start)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Formula parse_formula(std::string_view text)
{
    return Parser(text).parse_all();
}

std::vector<Formula> parse_formula_list(std::string_view text)
{
    std::vector<Formula> out;
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
        return out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        try {
            out.push_back(parse_formula(piece));
        } catch (const ParseError& e) {
            throw ParseError("in list item " + std::to_string(out.size() + 1) + ": " + e.what(), start + e.position());
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::set<std::string> variables_of(const std::vector<Formula>& formulas)
{
    std::set<std::string> out;
    for (const auto& f : formulas)
        f.collect_variables(out);
    return out;
}

} // namespace relog
