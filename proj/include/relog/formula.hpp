#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace relog {

enum class Connective : std::uint8_t { variable, neg, meet, join, fusion };

/// Immutable formula tree over variables, ~, *, & and |. Subtrees are
/// shared, so copies are cheap. Implication is not a node: x -> y is built
/// as ~(x * ~y).
class Formula {
public:
    static Formula variable(std::string name);
    static Formula negation(Formula operand);
    static Formula meet(Formula left, Formula right);
    static Formula join(Formula left, Formula right);
    static Formula fusion(Formula left, Formula right);
    static Formula implies(Formula antecedent, Formula consequent);
    static Formula binary(Connective op, Formula left, Formula right);

    Connective connective() const noexcept { return node_->op; }
    bool is_variable() const noexcept { return node_->op == Connective::variable; }
    const std::string& name() const noexcept { return node_->name; }
    const Formula& left() const { return *node_->left; }
    const Formula& right() const { return *node_->right; }
    const Formula& operand() const { return *node_->left; }

    /// Number of nodes.
    std::size_t size() const noexcept { return node_->size; }
    std::set<std::string> variables() const;
    void collect_variables(std::set<std::string>& out) const;

    /// Replaces every occurrence of `variable`.
    Formula substitute(const std::string& variable, const Formula& replacement) const;

    /// Infix text in the input grammar; ~(x * ~y) prints as x -> y. Output
    /// parses back to an equal tree.
    std::string to_string() const;

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node {
        Connective op;
        std::string name;
        std::shared_ptr<const Formula> left, right;
        std::size_t size;
    };
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Grammar: variables [a-z][a-z0-9_]*, ~ * & | ->, parentheses. Precedence
/// from tightest: ~, *, &, |, ->; binary * & | associate left, -> right.
/// Throws ParseError with the byte offset of the problem.
Formula parse_formula(std::string_view text);

/// Comma-separated list; empty or blank text gives an empty list.
std::vector<Formula> parse_formula_list(std::string_view text);

std::set<std::string> variables_of(const std::vector<Formula>& formulas);

} // namespace relog
