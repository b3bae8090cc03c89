#include "lrgen/automata.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lrgen {

StateId TransitionTable::add_state() {
    cells_.resize(cells_.size() + symbols_, kNone);
    return StateId{static_cast<std::uint32_t>(states_++)};
}

std::optional<StateId> TransitionTable::target(StateId from, Symbol y) const {
    if (from.index >= states_ || y.id >= symbols_) return std::nullopt;
    auto t = cells_[from.index * symbols_ + y.id];
    if (t == kNone) return std::nullopt;
    return StateId{t};
}

void TransitionTable::set(StateId from, Symbol y, StateId to) {
    if (from.index >= states_ || to.index >= states_ || y.id >= symbols_)
        throw std::out_of_range("transition outside the table");
    auto& cell = cells_[from.index * symbols_ + y.id];
    if (cell != kNone && cell != to.index) throw std::logic_error("nondeterministic transition");
    cell = to.index;
}

std::vector<std::pair<Symbol, StateId>> TransitionTable::edges(StateId from) const {
    std::vector<std::pair<Symbol, StateId>> out;
    for (std::uint32_t y = 0; y < symbols_; ++y)
        if (auto t = target(from, Symbol{y})) out.emplace_back(Symbol{y}, *t);
    return out;
}

namespace {

void require_augmented(const Grammar& g) {
    if (!g.augmented()) throw GrammarError(GrammarErrc::not_augmented, "automaton construction needs G'");
}

std::vector<Item1> kernel_key(const Item1Set& state, const Grammar& g) { return kernel_of(state, g).sorted(); }
std::vector<Item0> kernel_key(const ItemSet& state, const Grammar& g) { return kernel_of(state, g).sorted(); }

// The generic worklist construction: states are marked in creation order and
// each is expanded over the symbols right of its dots, in item order.
template <class Set, class GotoFn, class ClosureFn>
Automaton<Set> build_characteristic(const Grammar& g, AutomatonKind kind, Set p0, GotoFn goto_kernel,
                                    ClosureFn close) {
    Automaton<Set> aut;
    aut.kind = kind;
    aut.transitions = TransitionTable(g.symbol_count());
    std::map<decltype(kernel_key(p0, g)), StateId> by_kernel;

    by_kernel.emplace(kernel_key(p0, g), aut.transitions.add_state());
    aut.states.push_back(std::move(p0));

    for (std::uint32_t i = 0; i < aut.states.size(); ++i) {
        StateId from{i};
        for (auto y : outgoing_symbols(aut.states[i], g)) {
            auto tmp = goto_kernel(aut.states[i], y, g);
            auto key = tmp.sorted();
            auto it = by_kernel.find(key);
            if (it != by_kernel.end()) {
                aut.transitions.set(from, y, it->second);
                continue;
            }
            StateId to = aut.transitions.add_state();
            by_kernel.emplace(std::move(key), to);
            aut.states.push_back(close(tmp, g));
            aut.transitions.set(from, y, to);
        }
    }

    aut.final.resize(aut.states.size());
    for (std::size_t i = 0; i < aut.states.size(); ++i) aut.final[i] = !reducing_items(aut.states[i], g).empty();
    return aut;
}

}  // namespace

Lr0Automaton build_lr0(const Grammar& g) {
    require_augmented(g);
    ItemSet p0 = closure0(ItemSet{Item0{0, 0}}, g);
    return build_characteristic(
        g, AutomatonKind::lr0, std::move(p0),
        [](const ItemSet& p, Symbol y, const Grammar& gr) { return goto_kernel0(p, y, gr); },
        [](const ItemSet& k, const Grammar& gr) { return closure0(k, gr); });
}

Lr1Automaton build_lr1(const Grammar& g) {
    require_augmented(g);
    Item1Set p0 = closure1(Item1Set{Item1{Item0{0, 0}, {Lookahead::end()}}}, g);
    return build_characteristic(
        g, AutomatonKind::lr1, std::move(p0),
        [](const Item1Set& p, Symbol y, const Grammar& gr) { return goto_kernel1(p, y, gr); },
        [](const Item1Set& k, const Grammar& gr) { return closure1(k, gr); });
}

MergedAutomaton merge_lr1(const Lr1Automaton& lr1, const Grammar& g) {
    MergedAutomaton out;
    auto& m = out.automaton;
    m.kind = AutomatonKind::merged;
    m.transitions = TransitionTable(lr1.transitions.symbol_count());

    std::map<std::vector<Item0>, StateId> by_projection;
    out.class_of.resize(lr1.size());
    for (std::uint32_t i = 0; i < lr1.size(); ++i) {
        auto key = kernel_projection(lr1.states[i], g);
        auto it = by_projection.find(key);
        if (it == by_projection.end()) {
            StateId id = m.transitions.add_state();
            by_projection.emplace(std::move(key), id);
            m.states.push_back(lr1.states[i]);
            out.class_of[i] = id;
            continue;
        }
        out.class_of[i] = it->second;
        auto& merged = m.states[it->second.index];
        for (const auto& item : lr1.states[i]) {
            if (!merged.contains(item.core)) throw std::logic_error("projection-equal LR(1) states differ in cores");
            merged.add(item.core, item.la);
        }
    }

    for (std::uint32_t i = 0; i < lr1.size(); ++i)
        for (auto [y, to] : lr1.transitions.edges(StateId{i}))
            m.transitions.set(out.class_of[i], y, out.class_of[to.index]);

    m.initial = out.class_of[lr1.initial.index];
    m.final.resize(m.states.size());
    for (std::size_t i = 0; i < m.states.size(); ++i) m.final[i] = !reducing_items(m.states[i], g).empty();
    return out;
}

std::vector<Item0> kernel_projection(const ItemSet& state, const Grammar& g) { return kernel_key(state, g); }

std::vector<Item0> kernel_projection(const Item1Set& state, const Grammar& g) {
    return kernel_of(project(state), g).sorted();
}

std::vector<Item0> reducing_items(const ItemSet& state, const Grammar& g) {
    std::vector<Item0> out;
    for (auto item : state)
        if (is_reducing(item, g)) out.push_back(item);
    return out;
}

std::vector<Item0> reducing_items(const Item1Set& state, const Grammar& g) { return reducing_items(project(state), g); }

bool has_accepting_item(const ItemSet& state, const Grammar& g) {
    return std::any_of(state.begin(), state.end(), [&](Item0 i) { return is_accepting(i, g); });
}

bool has_accepting_item(const Item1Set& state, const Grammar& g) { return has_accepting_item(project(state), g); }

}  // namespace lrgen
