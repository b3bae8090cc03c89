#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "lrgen/items.hpp"

namespace lrgen {

struct StateId {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(StateId, StateId) = default;
};

enum class AutomatonKind { lr0, lr1, merged, symbolic };

/// Dense (state x symbol) transition matrix; absent transitions are empty.
class TransitionTable {
public:
    explicit TransitionTable(std::size_t symbol_count = 0) : symbols_(symbol_count) {}

    StateId add_state();
    std::size_t state_count() const { return states_; }
    std::size_t symbol_count() const { return symbols_; }

    std::optional<StateId> target(StateId from, Symbol y) const;
    // Throws std::logic_error if (from, y) already leads elsewhere.
    void set(StateId from, Symbol y, StateId to);

    // (symbol, target) pairs leaving `from`, by symbol id.
    std::vector<std::pair<Symbol, StateId>> edges(StateId from) const;

    friend bool operator==(const TransitionTable&, const TransitionTable&) = default;

private:
    static constexpr std::uint32_t kNone = UINT32_MAX;
    std::size_t symbols_ = 0;
    std::size_t states_ = 0;
    std::vector<std::uint32_t> cells_;
};

/// Characteristic automaton (Q, tau, P0, F).
template <class StateSet>
struct Automaton {
    AutomatonKind kind = AutomatonKind::lr0;
    std::vector<StateSet> states;
    TransitionTable transitions;
    StateId initial{0};
    std::vector<bool> final;  // has at least one reducing item

    std::size_t size() const { return states.size(); }
    const StateSet& operator[](StateId s) const { return states[s.index]; }
    bool is_final(StateId s) const { return final[s.index]; }

    std::vector<StateId> finals() const {
        std::vector<StateId> out;
        for (std::uint32_t i = 0; i < final.size(); ++i)
            if (final[i]) out.push_back(StateId{i});
        return out;
    }
};

using Lr0Automaton = Automaton<ItemSet>;
using Lr1Automaton = Automaton<Item1Set>;

Lr0Automaton build_lr0(const Grammar& g);
Lr1Automaton build_lr1(const Grammar& g);

struct MergedAutomaton {
    Lr1Automaton automaton;          // kind == merged
    std::vector<StateId> class_of;   // LR(1) state -> merged state
};

/// Fuses LR(1) states with equal projections. Merged states are numbered by
/// their smallest member.
MergedAutomaton merge_lr1(const Lr1Automaton& lr1, const Grammar& g);

// Sorted kernel cores; two states of any kind correspond iff these match.
std::vector<Item0> kernel_projection(const ItemSet& state, const Grammar& g);
std::vector<Item0> kernel_projection(const Item1Set& state, const Grammar& g);

// Cores of the reducing items of a state, in item order.
std::vector<Item0> reducing_items(const ItemSet& state, const Grammar& g);
std::vector<Item0> reducing_items(const Item1Set& state, const Grammar& g);
bool has_accepting_item(const ItemSet& state, const Grammar& g);
bool has_accepting_item(const Item1Set& state, const Grammar& g);

}  // namespace lrgen
