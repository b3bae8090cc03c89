#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrgen/automata.hpp"
#include "lrgen/symbolic.hpp"

namespace lrgen {

struct Action {
    enum class Kind : std::uint8_t { shift, reduce, accept, go_to, error };

    Kind kind = Kind::error;
    std::uint32_t target = 0;  // state for shift/goto, production id for reduce

    static constexpr Action shift(StateId s) { return {Kind::shift, s.index}; }
    static constexpr Action reduce(ProductionId p) { return {Kind::reduce, p}; }
    static constexpr Action accept() { return {Kind::accept, 0}; }
    static constexpr Action go_to(StateId s) { return {Kind::go_to, s.index}; }
    static constexpr Action error() { return {Kind::error, 0}; }

    friend constexpr auto operator<=>(Action, Action) = default;
};

enum class Method { slr1, lr1, lalr1_merged, lalr1_symbolic };

std::string_view method_name(Method m);  // "slr1", "lr1", "lalr1-merged", "lalr1-symbolic"
std::optional<Method> parse_method(std::string_view name);

/// Q x (T + {$} + N) matrix of action sets. Columns are the terminals in
/// grammar order, then "$", then the nonterminals of the unaugmented grammar.
class ParseTable {
public:
    ParseTable(Method method, const Grammar& g, std::size_t state_count);

    Method method() const { return method_; }
    std::size_t state_count() const { return states_; }
    const std::vector<Symbol>& columns() const { return columns_; }
    std::optional<std::size_t> column_of(Symbol y) const;
    // Terminal and "$" columns come first.
    std::size_t action_column_count() const { return action_columns_; }
    bool is_action_column(std::size_t column) const { return column < action_columns_; }

    const std::vector<Action>& cell(StateId s, Symbol y) const;
    const std::vector<Action>& cell_at(StateId s, std::size_t column) const;
    // Keeps the cell sorted and duplicate-free.
    void add(StateId s, Symbol y, Action a);

    friend bool operator==(const ParseTable&, const ParseTable&) = default;

private:
    Method method_;
    std::size_t states_;
    std::size_t action_columns_ = 0;
    std::vector<Symbol> columns_;
    std::vector<std::int64_t> column_index_;  // by symbol id, -1 if absent
    std::vector<std::vector<Action>> cells_;
};

struct Conflict {
    enum class Kind { shift_reduce, reduce_reduce };

    StateId state;
    Symbol symbol;
    Kind kind;
    std::vector<Action> actions;
};

using LookaheadFn = std::function<LookaheadSet(StateId, ProductionId)>;

/// Lookahead function la(P, A -> beta) of one method, defined on the final
/// states of the automaton it was made for.
struct LookaheadPolicy {
    Method method;
    LookaheadFn la;
};

// FOLLOW(A) for a reducing item A -> beta . of an LR(0) state.
LookaheadSet la_slr(const Lr0Automaton& aut, StateId p, ProductionId prod, const Grammar& g);
// Lookahead of the reducing item in an LR(1) state.
LookaheadSet la_lr(const Lr1Automaton& aut, StateId p, ProductionId prod, const Grammar& g);
// Union of the lookaheads of the reducing items for prod in a merged state.
LookaheadSet la_lrm(const Lr1Automaton& merged, StateId p, ProductionId prod, const Grammar& g);
// ground(Delta) + val(X) for every variable X in Delta.
LookaheadSet la_lalr(const Lr1Automaton& symbolic, const Valuation& val, StateId p, ProductionId prod,
                     const Grammar& g);
LookaheadSet actualize_lookahead(const LookaheadSet& delta, const Valuation& val);

LookaheadPolicy slr_policy(const Lr0Automaton& aut, const Grammar& g);
LookaheadPolicy lr_policy(const Lr1Automaton& aut, const Grammar& g);
LookaheadPolicy lrm_policy(const Lr1Automaton& merged, const Grammar& g);
LookaheadPolicy lalr_policy(const Lr1Automaton& symbolic, const Valuation& val, const Grammar& g);

/// Fills the table: Shift, Reduce, Accept, Error for terminal/$ columns,
/// Goto for nonterminal columns. Clashing directives all stay in the cell.
ParseTable build_table(const Lr0Automaton& aut, const LookaheadPolicy& policy, const Grammar& g);
ParseTable build_table(const Lr1Automaton& aut, const LookaheadPolicy& policy, const Grammar& g);

/// Multiply-defined terminal/$ cells, ordered by (state, column).
std::vector<Conflict> find_conflicts(const ParseTable& t);

/// Automaton plus table for one method. Exactly one automaton member is set
/// for each method.
struct Construction {
    Method method;
    std::optional<Lr0Automaton> lr0;
    std::optional<Lr1Automaton> lr1;
    std::optional<MergedAutomaton> merged;
    std::optional<SymbolicLalr> symbolic;
    ParseTable table;

    std::size_t state_count() const { return table.state_count(); }
};

Construction construct(const Grammar& g, Method m);

struct Verdict {
    bool slr1 = false;
    bool lalr1 = false;
    bool lr1 = false;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Membership in SLR(1), LALR(1), LR(1). Throws std::logic_error if the two
/// LALR(1) constructions disagree.
Verdict classify_grammar(const Grammar& g);

}  // namespace lrgen
