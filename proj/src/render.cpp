#include "lrgen/render.hpp"

#include <algorithm>
#include <sstream>

namespace lrgen {

using nlohmann::ordered_json;

std::string format_action(Action a) {
    switch (a.kind) {
        case Action::Kind::shift: return "s" + std::to_string(a.target);
        case Action::Kind::reduce: return "r" + std::to_string(a.target);
        case Action::Kind::accept: return "acc";
        case Action::Kind::go_to: return "g" + std::to_string(a.target);
        case Action::Kind::error: return ".";
    }
    return "?";
}

std::string format_cell(const std::vector<Action>& cell) {
    std::string out;
    for (std::size_t i = 0; i < cell.size(); ++i) {
        if (i) out += "/";
        out += format_action(cell[i]);
    }
    return out;
}

std::string format_production(const Grammar& g, ProductionId id) {
    const auto& p = g.production(id);
    std::string out = g.name(p.driver) + " ->";
    if (p.body.empty()) return out + " %empty";
    for (auto s : p.body) out += " " + g.name(s);
    return out;
}

std::string format_conflict(const Grammar& g, const Conflict& c) {
    std::string out = c.kind == Conflict::Kind::shift_reduce ? "shift/reduce" : "reduce/reduce";
    out += " conflict in state P" + std::to_string(c.state.index) + " on '" + g.name(c.symbol) + "':";
    for (std::size_t i = 0; i < c.actions.size(); ++i) {
        out += i ? " / " : " ";
        out += format_action(c.actions[i]);
        if (c.actions[i].kind == Action::Kind::reduce) out += " (" + format_production(g, c.actions[i].target) + ")";
    }
    return out;
}

namespace {

std::vector<std::string> lookahead_names(const Grammar& g, const LookaheadSet& la) {
    std::vector<std::string> out;
    for (auto e : la) out.push_back(e.is_variable() ? format_variable(e.as_variable()) : g.name(e.as_symbol()));
    return out;
}

std::string item_text(const Grammar& g, Item0 i) { return format_item(g, i); }
std::string item_text(const Grammar& g, const Item1& i) { return format_item(g, i); }
Item0 core_of(Item0 i) { return i; }
Item0 core_of(const Item1& i) { return i.core; }

ordered_json item_json(const Grammar& g, Item0 i) { return format_item(g, i); }
ordered_json item_json(const Grammar& g, const Item1& i) {
    return ordered_json{{"item", format_item(g, i.core)}, {"lookaheads", lookahead_names(g, i.la)}};
}

std::string_view kind_name(AutomatonKind k) {
    switch (k) {
        case AutomatonKind::lr0: return "lr0";
        case AutomatonKind::lr1: return "lr1";
        case AutomatonKind::merged: return "merged";
        case AutomatonKind::symbolic: return "symbolic";
    }
    return "?";
}

template <class Set>
std::string text_impl(const Grammar& g, const Automaton<Set>& aut) {
    std::ostringstream out;
    for (std::uint32_t i = 0; i < aut.size(); ++i) {
        StateId s{i};
        out << "P" << i << (aut.is_final(s) ? " (final)" : "") << ":\n";
        for (const auto& item : aut[s]) out << "  " << (is_kernel(core_of(item), g) ? "* " : "  ") << item_text(g, item) << "\n";
        auto edges = aut.transitions.edges(s);
        if (!edges.empty()) {
            out << "  on";
            for (auto [y, t] : edges) out << " " << g.name(y) << "->P" << t.index;
            out << "\n";
        }
    }
    return out.str();
}

template <class Set>
ordered_json json_impl(const Grammar& g, const Automaton<Set>& aut) {
    ordered_json states = ordered_json::array();
    ordered_json transitions = ordered_json::array();
    for (std::uint32_t i = 0; i < aut.size(); ++i) {
        StateId s{i};
        ordered_json kernel = ordered_json::array(), closure = ordered_json::array();
        for (const auto& item : aut[s]) (is_kernel(core_of(item), g) ? kernel : closure).push_back(item_json(g, item));
        states.push_back({{"id", i}, {"final", aut.is_final(s)}, {"kernel", kernel}, {"closure", closure}});
        for (auto [y, t] : aut.transitions.edges(s))
            transitions.push_back({{"from", i}, {"symbol", g.name(y)}, {"to", t.index}});
    }
    return ordered_json{{"format_version", kFormatVersion},
                        {"kind", kind_name(aut.kind)},
                        {"initial", aut.initial.index},
                        {"states", states},
                        {"transitions", transitions}};
}

std::string dot_record_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '{' || c == '}' || c == '|' || c == '<' || c == '>' || c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string dot_string_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

template <class Set>
std::string dot_impl(const Grammar& g, const Automaton<Set>& aut) {
    std::ostringstream out;
    out << "digraph " << kind_name(aut.kind) << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=record, fontname=\"monospace\"];\n";
    for (std::uint32_t i = 0; i < aut.size(); ++i) {
        StateId s{i};
        out << "  P" << i << " [label=\"{P" << i << "|";
        for (const auto& item : aut[s]) out << dot_record_escape(item_text(g, item)) << "\\l";
        out << "}\"";
        if (aut.is_final(s)) out << ", peripheries=2";
        out << "];\n";
    }
    for (std::uint32_t i = 0; i < aut.size(); ++i)
        for (auto [y, t] : aut.transitions.edges(StateId{i}))
            out << "  P" << i << " -> P" << t.index << " [label=\"" << dot_string_escape(g.name(y)) << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string pad(std::string s, std::size_t width, bool right = true) {
    if (s.size() >= width) return s;
    std::string fill(width - s.size(), ' ');
    return right ? fill + s : s + fill;
}

std::string equation_text(const Grammar& g, const EquationSystem& es, Variable x) {
    return "look(" + format_variable(x) + ") = " + format_lookaheads(g, es.look(x));
}

}  // namespace

std::string first_follow_text(const Grammar& g) {
    std::ostringstream out;
    std::size_t width = 0;
    for (auto n : g.nonterminals()) width = std::max(width, g.name(n).size());
    out << "FIRST\n";
    for (auto n : g.nonterminals()) {
        out << "  " << pad(g.name(n), width, false) << "  " << format_lookaheads(g, g.first_of(n));
        if (g.nullable(n)) out << " nullable";
        out << "\n";
    }
    if (g.augmented()) {
        out << "FOLLOW\n";
        for (auto n : g.nonterminals())
            out << "  " << pad(g.name(n), width, false) << "  " << format_lookaheads(g, g.follow_of(n)) << "\n";
    }
    return out.str();
}

ordered_json first_follow_json(const Grammar& g) {
    ordered_json firsts = ordered_json::object(), follows = ordered_json::object();
    for (auto n : g.nonterminals()) {
        firsts[g.name(n)] = {{"symbols", lookahead_names(g, g.first_of(n))}, {"nullable", g.nullable(n)}};
        if (g.augmented()) follows[g.name(n)] = lookahead_names(g, g.follow_of(n));
    }
    return ordered_json{{"format_version", kFormatVersion}, {"first", firsts}, {"follow", follows}};
}

std::string automaton_text(const Grammar& g, const Lr0Automaton& aut) { return text_impl(g, aut); }
std::string automaton_text(const Grammar& g, const Lr1Automaton& aut) { return text_impl(g, aut); }
ordered_json automaton_json(const Grammar& g, const Lr0Automaton& aut) { return json_impl(g, aut); }
ordered_json automaton_json(const Grammar& g, const Lr1Automaton& aut) { return json_impl(g, aut); }
std::string automaton_dot(const Grammar& g, const Lr0Automaton& aut) { return dot_impl(g, aut); }
std::string automaton_dot(const Grammar& g, const Lr1Automaton& aut) { return dot_impl(g, aut); }

std::string symbolic_text(const Grammar& g, const SymbolicLalr& s) {
    const auto& aut = s.symbolic.automaton;
    const auto& es = s.symbolic.equations;
    std::ostringstream out;

    std::size_t width = 0;
    for (const auto& state : aut.states)
        for (const auto& item : state) width = std::max(width, format_item(g, item).size());

    for (std::uint32_t i = 0; i < aut.size(); ++i) {
        StateId st{i};
        out << "P" << i << (aut.is_final(st) ? " (final)" : "") << ":\n";
        for (const auto& item : aut[st]) {
            std::string line = "  " + std::string(is_kernel(item.core, g) ? "* " : "  ") + format_item(g, item);
            if (is_kernel(item.core, g)) {
                line = pad(line, width + 6, false) + equation_text(g, es, item.la.begin()->as_variable());
            }
            out << line << "\n";
        }
    }

    out << "\nreduced system\n";
    std::size_t eq_width = 0;
    for (auto x : es.bypassing_variables()) eq_width = std::max(eq_width, equation_text(g, es, x).size());
    out << "  " << pad("E_b", eq_width + 2, false) << pad("class", 7, false) << pad("R_v", 6, false) << "R_E\n";
    for (auto x : es.bypassing_variables()) {
        auto rep = s.reduced.class_of(x);
        bool is_rep = rep == x;
        out << "  " << pad(equation_text(g, es, x), eq_width + 2, false) << pad(format_variable(rep), 7, false)
            << pad(is_rep ? format_variable(x) : "", 6, false);
        if (is_rep)
            out << "look(" << format_variable(x) << ") = " << format_lookaheads(g, s.reduced.equations.at(x));
        out << "\n";
    }

    out << "\nvalues\n";
    for (auto x : es.variables())
        out << "  val(" << format_variable(x) << ") = " << format_lookaheads(g, s.values.at(x)) << "\n";
    return out.str();
}

ordered_json symbolic_json(const Grammar& g, const SymbolicLalr& s) {
    const auto& es = s.symbolic.equations;
    ordered_json j = json_impl(g, s.symbolic.automaton);
    ordered_json equations = ordered_json::array();
    for (auto x : es.variables()) {
        ordered_json e{{"variable", format_variable(x)},
                       {"rhs", lookahead_names(g, es.look(x))},
                       {"reducing", es.is_reducing(x)},
                       {"state", es.owner[x.index].state.index},
                       {"item", format_item(g, es.owner[x.index].item)},
                       {"value", lookahead_names(g, s.values.at(x))}};
        if (!es.is_reducing(x)) e["class"] = format_variable(s.reduced.class_of(x));
        equations.push_back(std::move(e));
    }
    ordered_json reduced = ordered_json::array();
    for (auto x : s.reduced.rvars)
        reduced.push_back({{"variable", format_variable(x)}, {"rhs", lookahead_names(g, s.reduced.equations.at(x))}});
    j["equations"] = equations;
    j["reduced"] = reduced;
    return j;
}

std::string table_text(const Grammar& g, const ParseTable& t) {
    const auto& cols = t.columns();
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        width[c] = g.name(cols[c]).size();
        for (std::uint32_t s = 0; s < t.state_count(); ++s)
            width[c] = std::max(width[c], format_cell(t.cell_at(StateId{s}, c)).size());
    }
    std::size_t state_width = std::max<std::size_t>(5, std::to_string(t.state_count()).size());

    std::ostringstream out;
    out << "method: " << method_name(t.method()) << "\n";
    out << pad("state", state_width);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c == t.action_column_count()) out << " |";
        out << "  " << pad(g.name(cols[c]), width[c]);
    }
    out << "\n";
    for (std::uint32_t s = 0; s < t.state_count(); ++s) {
        out << pad(std::to_string(s), state_width);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c == t.action_column_count()) out << " |";
            out << "  " << pad(format_cell(t.cell_at(StateId{s}, c)), width[c]);
        }
        out << "\n";
    }
    auto conflicts = find_conflicts(t);
    out << "conflicts: " << conflicts.size() << "\n";
    for (const auto& c : conflicts) out << "  " << format_conflict(g, c) << "\n";
    return out.str();
}

ordered_json table_json(const Grammar& g, const ParseTable& t) {
    ordered_json columns = ordered_json::array();
    for (auto y : t.columns()) columns.push_back(g.name(y));
    ordered_json cells = ordered_json::array();
    for (std::uint32_t s = 0; s < t.state_count(); ++s) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < t.columns().size(); ++c) {
            ordered_json cell = ordered_json::array();
            for (auto a : t.cell_at(StateId{s}, c)) cell.push_back(format_action(a));
            row.push_back(std::move(cell));
        }
        cells.push_back(std::move(row));
    }
    ordered_json conflicts = ordered_json::array();
    for (const auto& c : find_conflicts(t)) {
        ordered_json actions = ordered_json::array();
        for (auto a : c.actions) actions.push_back(format_action(a));
        conflicts.push_back({{"state", c.state.index},
                             {"symbol", g.name(c.symbol)},
                             {"kind", c.kind == Conflict::Kind::shift_reduce ? "shift/reduce" : "reduce/reduce"},
                             {"actions", actions}});
    }
    ordered_json productions = ordered_json::array();
    for (const auto& p : g.productions()) productions.push_back({{"id", p.id}, {"rule", format_production(g, p.id)}});
    return ordered_json{{"format_version", kFormatVersion},
                        {"method", method_name(t.method())},
                        {"states", t.state_count()},
                        {"columns", columns},
                        {"cells", cells},
                        {"conflicts", conflicts},
                        {"productions", productions}};
}

ordered_json parse_result_json(const Grammar& g, const ParseResult& r) {
    ordered_json j{{"format_version", kFormatVersion}, {"accepted", r.accepted}};
    if (r.accepted) {
        ordered_json derivation = ordered_json::array();
        for (auto id : r.derivation) derivation.push_back({{"id", id}, {"rule", format_production(g, id)}});
        j["derivation"] = derivation;
        if (r.tree) j["tree"] = format_tree(g, *r.tree);
    } else {
        ordered_json expected = ordered_json::array();
        for (auto y : r.expected) expected.push_back(g.name(y));
        j["position"] = r.error_position;
        j["expected"] = expected;
    }
    return j;
}

}  // namespace lrgen
