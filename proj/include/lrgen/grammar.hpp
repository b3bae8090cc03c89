#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lrgen/lookahead.hpp"

namespace lrgen {

enum class SymbolKind : std::uint8_t { terminal, nonterminal, endmarker };

using ProductionId = std::uint32_t;

// Id 0 is reserved for the augmentation production S' -> S.
struct Production {
    ProductionId id = 0;
    Symbol driver;
    std::vector<Symbol> body;
};

enum class GrammarErrc {
    syntax,
    reserved_symbol,
    empty_grammar,
    double_augmentation,
    not_augmented,
    unknown_symbol,
    not_a_nonterminal,
    not_reduced,
};

class GrammarError : public std::runtime_error {
public:
    GrammarError(GrammarErrc code, const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(what), code_(code), line_(line), column_(column) {}

    GrammarErrc code() const { return code_; }
    // 1-based; 0 when the error has no source position.
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    GrammarErrc code_;
    std::size_t line_;
    std::size_t column_;
};

// FIRST of a symbol string: its leading terminals plus an epsilon flag.
struct FirstSet {
    LookaheadSet symbols;
    bool nullable = false;

    friend bool operator==(const FirstSet&, const FirstSet&) = default;
};

/// Context-free grammar G = (V, T, S, P), optionally augmented with S' -> S.
///
/// A Grammar is immutable once constructed. Nullability and FIRST of every
/// symbol are computed at construction; FOLLOW is computed for augmented
/// grammars only, with "$" seeded into FOLLOW(S').
class Grammar {
public:
    struct SymbolInfo {
        SymbolKind kind;
        std::string name;
    };

    /// `symbols[0]` must be the endmarker. `productions` carry ids 1..n in order.
    Grammar(std::vector<SymbolInfo> symbols, Symbol start, std::vector<Production> productions);

    std::size_t symbol_count() const { return symbols_.size(); }
    SymbolKind kind(Symbol s) const { return info(s).kind; }
    const std::string& name(Symbol s) const { return info(s).name; }
    bool is_terminal(Symbol s) const { return kind(s) == SymbolKind::terminal; }
    bool is_nonterminal(Symbol s) const { return kind(s) == SymbolKind::nonterminal; }
    bool contains(Symbol s) const { return s.id < symbols_.size(); }
    std::optional<Symbol> find(std::string_view name) const;

    // Splits on whitespace and resolves each name; "$" resolves to the endmarker.
    std::vector<Symbol> symbols_from(std::string_view names) const;

    Symbol start() const { return start_; }
    bool augmented() const { return augmented_start_.has_value(); }
    // S'; throws not_augmented on a plain grammar.
    Symbol augmented_start() const;

    /// Terminals in grammar order (excluding "$").
    const std::vector<Symbol>& terminals() const { return terminals_; }
    /// Nonterminals in grammar order; S' comes last when augmented.
    const std::vector<Symbol>& nonterminals() const { return nonterminals_; }

    std::span<const Production> productions() const;
    const Production& production(ProductionId id) const;
    std::size_t production_count() const { return productions().size(); }
    // Largest valid production id + 1.
    std::size_t production_id_bound() const { return productions_.size(); }
    const std::vector<ProductionId>& productions_of(Symbol nonterminal) const;

    bool nullable(Symbol s) const;
    // FIRST of a single symbol, without the epsilon flag (see nullable()).
    const LookaheadSet& first_of(Symbol s) const;
    const LookaheadSet& follow_of(Symbol nonterminal) const;

private:
    friend Grammar augment(const Grammar& g);

    Grammar() = default;
    const SymbolInfo& info(Symbol s) const;
    void finish();
    void compute_first();
    void compute_follow();

    std::vector<SymbolInfo> symbols_;
    std::unordered_map<std::string, Symbol> by_name_;
    Symbol start_;
    std::optional<Symbol> augmented_start_;
    std::vector<Symbol> terminals_;
    std::vector<Symbol> nonterminals_;
    // Indexed by id; slot 0 is a placeholder until augmentation.
    std::vector<Production> productions_;
    std::vector<std::vector<ProductionId>> by_driver_;
    std::vector<bool> nullable_;
    std::vector<LookaheadSet> first_;
    std::vector<LookaheadSet> follow_;
};

/// Parses the grammar text format. Symbols are terminals unless they occur
/// as a driver; the first rule's driver is the start symbol.
Grammar load_grammar(std::string_view text);

/// Returns G' with production 0 = S' -> S.
Grammar augment(const Grammar& g);

/// Useless productions: unreachable from S or containing a symbol that
/// derives no terminal string. Empty for a reduced grammar.
std::vector<Production> check_reduced(const Grammar& g);

/// FIRST of a symbol string. "$" is allowed and begins itself.
FirstSet first(const Grammar& g, std::span<const Symbol> alpha);

LookaheadSet follow(const Grammar& g, Symbol nonterminal);

}  // namespace lrgen
