#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lrgen/tables.hpp"

namespace lrgen {

struct Token {
    Symbol symbol;
    std::size_t position = 0;  // index in the input
};

class InputError : public std::runtime_error {
public:
    InputError(const std::string& what, std::size_t position) : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class EngineError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Splits whitespace-separated terminal names. The endmarker is not appended.
std::vector<Token> tokenize(const Grammar& g, std::string_view text);

struct ParseTree {
    Symbol symbol;
    std::optional<ProductionId> production;  // set for nonterminal nodes
    std::vector<ParseTree> children;
};

struct ParseResult {
    bool accepted = false;
    std::size_t error_position = 0;  // token index where the parse stopped
    std::vector<Symbol> expected;    // symbols with a non-error action in that row
    std::vector<ProductionId> derivation;  // reductions, in the order performed
    std::vector<Action> actions;           // every action taken
    std::optional<ParseTree> tree;
};

struct ParseOptions {
    std::ostream* trace = nullptr;
    // Re-check after each step that the state stack spells a path of tau.
    bool check_stack = false;
};

/// Table-driven shift/reduce parse. Refuses tables with conflicts.
ParseResult parse(const Grammar& g, const ParseTable& table, std::span<const Token> input,
                  const ParseOptions& options = {});

/// Replays the reversed reductions as rightmost derivation steps from the
/// start symbol and checks that they end at the input.
bool derivation_check(const Grammar& g, const ParseResult& result, std::span<const Token> input);

// "S(L(id) = R(L(id)))"
std::string format_tree(const Grammar& g, const ParseTree& tree);

}  // namespace lrgen
