#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lrgen/automata.hpp"

namespace lrgen {

/// Equations look(X) = rhs collected while building the symbolic automaton.
/// Variables are numbered in creation order, which is also the order their
/// equations were enqueued.
struct EquationSystem {
    struct Owner {
        StateId state;
        Item0 item;  // kernel item whose lookahead is {X}
    };

    std::vector<LookaheadSet> rhs;
    std::vector<bool> reducing;  // attached to a reducing item
    std::vector<Owner> owner;

    std::size_t size() const { return rhs.size(); }
    const LookaheadSet& look(Variable x) const { return rhs.at(x.index); }
    bool is_reducing(Variable x) const { return reducing.at(x.index); }

    Variable fresh(LookaheadSet init, bool is_reducing_var, Owner who);

    std::vector<Variable> variables() const;
    std::vector<Variable> reducing_variables() const;
    std::vector<Variable> bypassing_variables() const;
};

struct SymbolicAutomaton {
    Lr1Automaton automaton;  // kind == symbolic; lookaheads may hold variables
    EquationSystem equations;
};

/// Builds the LR(0)-sized automaton of symbolic items. Targets are matched
/// by kernel projection; a match unions the incoming lookaheads into the
/// equations of the target's kernel variables instead of creating a state.
SymbolicAutomaton build_symbolic(const Grammar& g);

/// Bypassing variables collapsed into alias classes. Self-references are
/// dropped and right-hand variables are replaced by class representatives.
struct ReducedSystem {
    std::vector<std::optional<Variable>> rep;  // class(X); empty for reducing variables
    std::vector<Variable> rvars;               // representatives, creation order
    std::map<Variable, LookaheadSet> equations;

    Variable class_of(Variable x) const;
};

ReducedSystem reduce_system(const EquationSystem& es);

struct DependencyGraph {
    std::vector<Variable> vertices;
    std::vector<std::vector<std::size_t>> edges;  // by vertex position
    std::vector<LookaheadSet> init;               // ground part of each rhs

    std::size_t size() const { return vertices.size(); }
    std::optional<std::size_t> position(Variable x) const;
};

DependencyGraph build_dependency_graph(const ReducedSystem& rs);

class Valuation {
public:
    void set(Variable x, LookaheadSet value) { values_[x] = std::move(value); }
    bool has(Variable x) const { return values_.count(x) != 0; }
    const LookaheadSet& at(Variable x) const;
    std::size_t size() const { return values_.size(); }
    const std::map<Variable, LookaheadSet>& values() const { return values_; }

    friend bool operator==(const Valuation&, const Valuation&) = default;

private:
    std::map<Variable, LookaheadSet> values_;
};

/// DeRemer-Pennello style SCC traversal: val(X) = union of init over all
/// vertices reachable from X; members of one SCC share a value.
Valuation evaluate(const DependencyGraph& dg);

/// Extends `partial` (over the representatives) to every variable: aliases
/// take their representative's value, then reducing variables are computed
/// from their original right-hand sides.
Valuation actualize(const EquationSystem& es, const ReducedSystem& rs, const Valuation& partial);

/// Everything needed for the symbolic LALR lookahead function.
struct SymbolicLalr {
    SymbolicAutomaton symbolic;
    ReducedSystem reduced;
    DependencyGraph graph;
    Valuation values;
};

SymbolicLalr solve_symbolic(const Grammar& g);

}  // namespace lrgen
