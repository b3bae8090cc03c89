#include <set>
#include <string>
#include <unordered_map>

#include "lrgen/grammar.hpp"

namespace lrgen {
namespace {

enum class Tok { name, arrow, bar, semi, eof };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_blank();
        if (pos_ >= src_.size()) return {Tok::eof, "", line_, col_};
        std::size_t line = line_, col = col_;
        char c = src_[pos_];
        if (c == '|') return advance(1), Token{Tok::bar, "|", line, col};
        if (c == ';') return advance(1), Token{Tok::semi, ";", line, col};
        if (src_.substr(pos_, 2) == "->") return advance(2), Token{Tok::arrow, "->", line, col};
        std::size_t start = pos_;
        while (pos_ < src_.size() && !is_space(src_[pos_]) && src_[pos_] != '|' && src_[pos_] != ';' &&
               src_[pos_] != '#' && src_.substr(pos_, 2) != "->")
            advance(1);
        return {Tok::name, std::string(src_.substr(start, pos_ - start)), line, col};
    }

private:
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

    void advance(std::size_t n) {
        for (; n > 0 && pos_ < src_.size(); --n, ++pos_) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
        }
    }

    void skip_blank() {
        while (pos_ < src_.size()) {
            if (is_space(src_[pos_])) {
                advance(1);
            } else if (src_[pos_] == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

[[noreturn]] void syntax_error(const Token& at, const std::string& msg) {
    throw GrammarError(GrammarErrc::syntax,
                       std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + msg, at.line,
                       at.column);
}

void check_reserved(const Token& t) {
    if (t.text == "$" || t.text == "%empty")
        throw GrammarError(GrammarErrc::reserved_symbol,
                           std::to_string(t.line) + ":" + std::to_string(t.column) + ": '" + t.text +
                               "' is reserved and cannot be used as a grammar symbol",
                           t.line, t.column);
}

struct RawRule {
    std::size_t driver;
    std::vector<std::size_t> body;
};

}  // namespace

Grammar load_grammar(std::string_view text) {
    Lexer lex(text);
    std::vector<std::string> names;  // first-appearance order
    std::unordered_map<std::string, std::size_t> index;
    std::vector<bool> is_driver;
    std::vector<RawRule> rules;

    auto intern = [&](const std::string& n) {
        auto [it, fresh] = index.emplace(n, names.size());
        if (fresh) {
            names.push_back(n);
            is_driver.push_back(false);
        }
        return it->second;
    };

    Token t = lex.next();
    while (t.kind != Tok::eof) {
        if (t.kind != Tok::name) syntax_error(t, "expected a rule driver, got '" + t.text + "'");
        check_reserved(t);
        std::size_t driver = intern(t.text);
        is_driver[driver] = true;
        t = lex.next();
        if (t.kind != Tok::arrow) syntax_error(t, "expected '->' after '" + names[driver] + "'");

        for (;;) {
            t = lex.next();
            Token alt_start = t;
            std::vector<std::size_t> body;
            bool saw_empty = false;
            std::size_t count = 0;
            for (; t.kind == Tok::name; t = lex.next(), ++count) {
                if (t.text == "%empty") {
                    saw_empty = true;
                    continue;
                }
                check_reserved(t);
                body.push_back(intern(t.text));
            }
            if (saw_empty && count != 1) syntax_error(alt_start, "'%empty' must stand alone in its alternative");
            if (count == 0) syntax_error(alt_start, "empty alternative (write '%empty' for an empty body)");
            rules.push_back({driver, std::move(body)});
            if (t.kind == Tok::bar) continue;
            if (t.kind == Tok::semi) break;
            if (t.kind == Tok::eof) syntax_error(t, "unexpected end of input, expected ';'");
            syntax_error(t, "unexpected '" + t.text + "'");
        }
        t = lex.next();
    }
    if (rules.empty()) throw GrammarError(GrammarErrc::empty_grammar, "grammar has no rules");

    std::vector<Grammar::SymbolInfo> symbols;
    symbols.push_back({SymbolKind::endmarker, "$"});
    for (std::size_t i = 0; i < names.size(); ++i)
        symbols.push_back({is_driver[i] ? SymbolKind::nonterminal : SymbolKind::terminal, names[i]});
    auto sym = [](std::size_t i) { return Symbol{static_cast<std::uint32_t>(i + 1)}; };

    std::vector<Production> productions;
    std::set<std::pair<std::size_t, std::vector<std::size_t>>> seen;
    for (auto& r : rules) {
        if (!seen.emplace(r.driver, r.body).second) continue;
        Production p;
        p.id = static_cast<ProductionId>(productions.size() + 1);
        p.driver = sym(r.driver);
        for (auto b : r.body) p.body.push_back(sym(b));
        productions.push_back(std::move(p));
    }
    return Grammar(std::move(symbols), sym(rules.front().driver), std::move(productions));
}

}  // namespace lrgen
