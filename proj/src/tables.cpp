#include "lrgen/tables.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrgen {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::slr1: return "slr1";
        case Method::lr1: return "lr1";
        case Method::lalr1_merged: return "lalr1-merged";
        case Method::lalr1_symbolic: return "lalr1-symbolic";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    for (auto m : {Method::slr1, Method::lr1, Method::lalr1_merged, Method::lalr1_symbolic})
        if (method_name(m) == name) return m;
    return std::nullopt;
}

ParseTable::ParseTable(Method method, const Grammar& g, std::size_t state_count)
    : method_(method), states_(state_count), column_index_(g.symbol_count(), -1) {
    columns_ = g.terminals();
    columns_.push_back(kEndmarker);
    action_columns_ = columns_.size();
    for (auto n : g.nonterminals())
        if (!g.augmented() || n != g.augmented_start()) columns_.push_back(n);
    for (std::size_t c = 0; c < columns_.size(); ++c) column_index_[columns_[c].id] = static_cast<std::int64_t>(c);
    cells_.resize(states_ * columns_.size());
}

std::optional<std::size_t> ParseTable::column_of(Symbol y) const {
    if (y.id >= column_index_.size() || column_index_[y.id] < 0) return std::nullopt;
    return static_cast<std::size_t>(column_index_[y.id]);
}

const std::vector<Action>& ParseTable::cell_at(StateId s, std::size_t column) const {
    if (s.index >= states_ || column >= columns_.size()) throw std::out_of_range("table cell out of range");
    return cells_[s.index * columns_.size() + column];
}

const std::vector<Action>& ParseTable::cell(StateId s, Symbol y) const {
    auto c = column_of(y);
    if (!c) throw std::out_of_range("symbol has no table column");
    return cell_at(s, *c);
}

void ParseTable::add(StateId s, Symbol y, Action a) {
    auto c = column_of(y);
    if (!c || s.index >= states_) throw std::out_of_range("table cell out of range");
    bool action_col = *c < action_columns_;
    if (action_col == (a.kind == Action::Kind::go_to))
        throw std::logic_error("goto actions belong to nonterminal columns only");
    auto& cell = cells_[s.index * columns_.size() + *c];
    auto it = std::lower_bound(cell.begin(), cell.end(), a);
    if (it == cell.end() || *it != a) cell.insert(it, a);
}

namespace {

const Production& reducing_production(const std::vector<Item0>& reducing, StateId p, ProductionId prod,
                                      const Grammar& g) {
    for (auto item : reducing)
        if (item.production == prod) return g.production(prod);
    throw std::invalid_argument("state " + std::to_string(p.index) + " has no reducing item for production " +
                                std::to_string(prod));
}

const Item1& reducing_item1(const Lr1Automaton& aut, StateId p, ProductionId prod, const Grammar& g) {
    if (p.index >= aut.size()) throw std::out_of_range("no such state");
    const auto& state = aut[p];
    const auto& body = reducing_production(reducing_items(state, g), p, prod, g).body;
    return *state.find(Item0{prod, static_cast<std::uint32_t>(body.size())});
}

template <class Set>
ParseTable fill_table(const Automaton<Set>& aut, const LookaheadPolicy& policy, const Grammar& g) {
    ParseTable t(policy.method, g, aut.size());
    for (std::uint32_t i = 0; i < aut.size(); ++i) {
        StateId p{i};
        const auto& state = aut.states[i];
        for (auto [y, q] : aut.transitions.edges(p)) {
            if (g.is_terminal(y))
                t.add(p, y, Action::shift(q));
            else if (t.column_of(y))
                t.add(p, y, Action::go_to(q));
        }
        for (auto item : reducing_items(state, g)) {
            for (auto la : policy.la(p, item.production)) {
                if (la.is_variable()) throw std::logic_error("unresolved variable in a lookahead set");
                t.add(p, la.as_symbol(), Action::reduce(item.production));
            }
        }
        if (has_accepting_item(state, g)) t.add(p, kEndmarker, Action::accept());
        for (std::size_t c = 0; c < t.action_column_count(); ++c)
            if (t.cell_at(p, c).empty()) t.add(p, t.columns()[c], Action::error());
    }
    return t;
}

}  // namespace

LookaheadSet la_slr(const Lr0Automaton& aut, StateId p, ProductionId prod, const Grammar& g) {
    if (p.index >= aut.size()) throw std::out_of_range("no such state");
    const auto& production = reducing_production(reducing_items(aut[p], g), p, prod, g);
    return g.follow_of(production.driver);
}

LookaheadSet la_lr(const Lr1Automaton& aut, StateId p, ProductionId prod, const Grammar& g) {
    return reducing_item1(aut, p, prod, g).la;
}

LookaheadSet la_lrm(const Lr1Automaton& merged, StateId p, ProductionId prod, const Grammar& g) {
    // Merged states are core-keyed, so the union over members is already stored.
    return reducing_item1(merged, p, prod, g).la;
}

LookaheadSet actualize_lookahead(const LookaheadSet& delta, const Valuation& val) {
    LookaheadSet out = delta.ground();
    for (auto x : delta.variables()) out.merge(val.at(x));
    return out;
}

LookaheadSet la_lalr(const Lr1Automaton& symbolic, const Valuation& val, StateId p, ProductionId prod,
                     const Grammar& g) {
    return actualize_lookahead(reducing_item1(symbolic, p, prod, g).la, val);
}

LookaheadPolicy slr_policy(const Lr0Automaton& aut, const Grammar& g) {
    return {Method::slr1, [&aut, &g](StateId p, ProductionId prod) { return la_slr(aut, p, prod, g); }};
}

LookaheadPolicy lr_policy(const Lr1Automaton& aut, const Grammar& g) {
    return {Method::lr1, [&aut, &g](StateId p, ProductionId prod) { return la_lr(aut, p, prod, g); }};
}

LookaheadPolicy lrm_policy(const Lr1Automaton& merged, const Grammar& g) {
    return {Method::lalr1_merged,
            [&merged, &g](StateId p, ProductionId prod) { return la_lrm(merged, p, prod, g); }};
}

LookaheadPolicy lalr_policy(const Lr1Automaton& symbolic, const Valuation& val, const Grammar& g) {
    return {Method::lalr1_symbolic, [&symbolic, &val, &g](StateId p, ProductionId prod) {
                return la_lalr(symbolic, val, p, prod, g);
            }};
}

ParseTable build_table(const Lr0Automaton& aut, const LookaheadPolicy& policy, const Grammar& g) {
    return fill_table(aut, policy, g);
}

ParseTable build_table(const Lr1Automaton& aut, const LookaheadPolicy& policy, const Grammar& g) {
    return fill_table(aut, policy, g);
}

std::vector<Conflict> find_conflicts(const ParseTable& t) {
    std::vector<Conflict> out;
    for (std::uint32_t s = 0; s < t.state_count(); ++s) {
        for (std::size_t c = 0; c < t.action_column_count(); ++c) {
            const auto& cell = t.cell_at(StateId{s}, c);
            if (cell.size() < 2) continue;
            bool shifts = std::any_of(cell.begin(), cell.end(), [](Action a) { return a.kind == Action::Kind::shift; });
            // Accept is the reduction by S' -> S.
            auto reductions = std::count_if(cell.begin(), cell.end(), [](Action a) {
                return a.kind == Action::Kind::reduce || a.kind == Action::Kind::accept;
            });
            auto kind = shifts && reductions >= 1 ? Conflict::Kind::shift_reduce : Conflict::Kind::reduce_reduce;
            out.push_back(Conflict{StateId{s}, t.columns()[c], kind, cell});
        }
    }
    return out;
}

Construction construct(const Grammar& g, Method m) {
    switch (m) {
        case Method::slr1: {
            auto aut = build_lr0(g);
            auto table = build_table(aut, slr_policy(aut, g), g);
            return Construction{m, std::move(aut), std::nullopt, std::nullopt, std::nullopt, std::move(table)};
        }
        case Method::lr1: {
            auto aut = build_lr1(g);
            auto table = build_table(aut, lr_policy(aut, g), g);
            return Construction{m, std::nullopt, std::move(aut), std::nullopt, std::nullopt, std::move(table)};
        }
        case Method::lalr1_merged: {
            auto merged = merge_lr1(build_lr1(g), g);
            auto table = build_table(merged.automaton, lrm_policy(merged.automaton, g), g);
            return Construction{m, std::nullopt, std::nullopt, std::move(merged), std::nullopt, std::move(table)};
        }
        case Method::lalr1_symbolic: {
            auto sym = solve_symbolic(g);
            auto table = build_table(sym.symbolic.automaton, lalr_policy(sym.symbolic.automaton, sym.values, g), g);
            return Construction{m, std::nullopt, std::nullopt, std::nullopt, std::move(sym), std::move(table)};
        }
    }
    throw std::invalid_argument("unknown method");
}

Verdict classify_grammar(const Grammar& g) {
    Verdict v;
    v.slr1 = find_conflicts(construct(g, Method::slr1).table).empty();
    v.lr1 = find_conflicts(construct(g, Method::lr1).table).empty();
    v.lalr1 = find_conflicts(construct(g, Method::lalr1_merged).table).empty();
    bool symbolic = find_conflicts(construct(g, Method::lalr1_symbolic).table).empty();
    if (symbolic != v.lalr1) throw std::logic_error("LALR(1) constructions disagree");
    return v;
}

}  // namespace lrgen
