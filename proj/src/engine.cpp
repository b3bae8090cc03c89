#include "lrgen/engine.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace lrgen {

std::vector<Token> tokenize(const Grammar& g, std::string_view text) {
    std::vector<Token> out;
    std::istringstream in{std::string(text)};
    std::string word;
    for (std::size_t pos = 0; in >> word; ++pos) {
        auto s = g.find(word);
        if (!s || s->id == kEndmarker.id)
            throw InputError("unknown terminal '" + word + "' at position " + std::to_string(pos), pos);
        if (!g.is_terminal(*s))
            throw InputError("'" + word + "' at position " + std::to_string(pos) + " is a nonterminal", pos);
        out.push_back(Token{*s, pos});
    }
    return out;
}

namespace {

std::string describe(const Grammar& g, Action a) {
    switch (a.kind) {
        case Action::Kind::shift: return "shift " + std::to_string(a.target);
        case Action::Kind::reduce: {
            const auto& p = g.production(a.target);
            std::string body;
            for (auto s : p.body) body += " " + g.name(s);
            return "reduce " + std::to_string(a.target) + " (" + g.name(p.driver) + " ->" + body + ")";
        }
        case Action::Kind::accept: return "accept";
        case Action::Kind::go_to: return "goto " + std::to_string(a.target);
        case Action::Kind::error: return "error";
    }
    return "?";
}

void write_trace(std::ostream& out, const Grammar& g, const std::vector<StateId>& states,
                 std::span<const Token> input, std::size_t cursor, Action a) {
    out << "STACK:";
    for (auto s : states) out << ' ' << s.index;
    out << " | INPUT:";
    for (std::size_t i = cursor; i < input.size(); ++i) out << ' ' << g.name(input[i].symbol);
    out << " $ | ACTION: " << describe(g, a) << '\n';
}

// Each symbol on the stack must label the edge between its neighbouring states.
void check_stack_path(const ParseTable& table, const std::vector<StateId>& states,
                      const std::vector<Symbol>& symbols) {
    if (states.size() != symbols.size() + 1) throw EngineError("state and symbol stacks out of step");
    for (std::size_t k = 0; k < symbols.size(); ++k) {
        const auto& cell = table.cell(states[k], symbols[k]);
        bool ok = std::any_of(cell.begin(), cell.end(), [&](Action a) {
            return (a.kind == Action::Kind::shift || a.kind == Action::Kind::go_to) && a.target == states[k + 1].index;
        });
        if (!ok) throw EngineError("state stack does not spell a path of the automaton");
    }
}

}  // namespace

ParseResult parse(const Grammar& g, const ParseTable& table, std::span<const Token> input,
                  const ParseOptions& options) {
    if (!find_conflicts(table).empty()) throw EngineError("cannot parse with a conflicted table");

    ParseResult result;
    std::vector<StateId> states{StateId{0}};
    std::vector<Symbol> symbols;
    std::vector<ParseTree> nodes;
    std::size_t cursor = 0;

    for (;;) {
        Symbol current = cursor < input.size() ? input[cursor].symbol : kEndmarker;
        const auto& cell = table.cell(states.back(), current);
        Action a = cell.front();
        result.actions.push_back(a);
        if (options.trace) write_trace(*options.trace, g, states, input, cursor, a);

        switch (a.kind) {
            case Action::Kind::shift:
                states.push_back(StateId{a.target});
                symbols.push_back(current);
                nodes.push_back(ParseTree{current, std::nullopt, {}});
                ++cursor;
                break;
            case Action::Kind::reduce: {
                const auto& p = g.production(a.target);
                const std::size_t n = p.body.size();
                if (n > symbols.size()) throw EngineError("reduction pops past the stack bottom");
                ParseTree node{p.driver, a.target, {}};
                node.children.assign(std::make_move_iterator(nodes.end() - static_cast<std::ptrdiff_t>(n)),
                                     std::make_move_iterator(nodes.end()));
                nodes.resize(nodes.size() - n);
                states.resize(states.size() - n);
                symbols.resize(symbols.size() - n);
                const auto& go = table.cell(states.back(), p.driver);
                if (go.size() != 1 || go.front().kind != Action::Kind::go_to)
                    throw EngineError("missing goto entry after reduction");
                states.push_back(StateId{go.front().target});
                symbols.push_back(p.driver);
                nodes.push_back(std::move(node));
                result.derivation.push_back(a.target);
                break;
            }
            case Action::Kind::accept:
                result.accepted = true;
                if (nodes.size() == 1) result.tree = std::move(nodes.front());
                return result;
            case Action::Kind::error:
            case Action::Kind::go_to: {
                result.error_position = cursor;
                for (std::size_t c = 0; c < table.action_column_count(); ++c) {
                    const auto& row_cell = table.cell_at(states.back(), c);
                    if (row_cell.front().kind != Action::Kind::error) result.expected.push_back(table.columns()[c]);
                }
                return result;
            }
        }
        if (options.check_stack) check_stack_path(table, states, symbols);
    }
}

bool derivation_check(const Grammar& g, const ParseResult& result, std::span<const Token> input) {
    if (!result.accepted) return false;
    std::vector<Symbol> form{g.start()};
    for (auto it = result.derivation.rbegin(); it != result.derivation.rend(); ++it) {
        if (*it >= g.production_id_bound() || (*it == 0)) return false;
        const auto& p = g.production(*it);
        auto rightmost = std::find_if(form.rbegin(), form.rend(), [&](Symbol s) { return g.is_nonterminal(s); });
        if (rightmost == form.rend() || *rightmost != p.driver) return false;
        auto pos = form.erase(std::prev(rightmost.base()));
        form.insert(pos, p.body.begin(), p.body.end());
    }
    if (form.size() != input.size()) return false;
    for (std::size_t i = 0; i < form.size(); ++i)
        if (form[i] != input[i].symbol) return false;
    return true;
}

std::string format_tree(const Grammar& g, const ParseTree& tree) {
    std::string out = g.name(tree.symbol);
    if (!tree.production) return out;
    out += "(";
    for (std::size_t i = 0; i < tree.children.size(); ++i) {
        if (i) out += " ";
        out += format_tree(g, tree.children[i]);
    }
    return out + ")";
}

}  // namespace lrgen
