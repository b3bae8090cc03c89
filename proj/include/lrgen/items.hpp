#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrgen/grammar.hpp"

namespace lrgen {

// A -> alpha . beta, with `dot` = |alpha|.
struct Item0 {
    ProductionId production = 0;
    std::uint32_t dot = 0;

    friend constexpr auto operator<=>(Item0, Item0) = default;
};

struct ItemFlags {
    bool initial = false;    // S' -> . S
    bool accepting = false;  // S' -> S .
    bool kernel = false;     // initial, or dot not leftmost
    bool closure = false;    // not kernel
    bool reducing = false;   // dot rightmost and not accepting

    friend bool operator==(const ItemFlags&, const ItemFlags&) = default;
};

ItemFlags classify(Item0 item, const Grammar& g);
inline bool is_kernel(Item0 item, const Grammar& g) { return classify(item, g).kernel; }
inline bool is_reducing(Item0 item, const Grammar& g) { return classify(item, g).reducing; }
inline bool is_accepting(Item0 item, const Grammar& g) { return classify(item, g).accepting; }

// Symbol right of the dot, if any.
std::optional<Symbol> next_symbol(Item0 item, const Grammar& g);

/// Set of LR(0) items that remembers insertion order. Equality is set equality.
class ItemSet {
public:
    ItemSet() = default;
    ItemSet(std::initializer_list<Item0> init) {
        for (auto i : init) insert(i);
    }

    bool insert(Item0 item) {
        if (!index_.emplace(item, items_.size()).second) return false;
        items_.push_back(item);
        return true;
    }
    bool contains(Item0 item) const { return index_.count(item) != 0; }

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const Item0& operator[](std::size_t i) const { return items_[i]; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    std::vector<Item0> sorted() const;

    friend bool operator==(const ItemSet& a, const ItemSet& b) {
        return a.size() == b.size() && a.sorted() == b.sorted();
    }

private:
    std::vector<Item0> items_;
    std::map<Item0, std::size_t> index_;
};

/// LR(1) item; in symbolic contexts the lookahead may hold variables.
struct Item1 {
    Item0 core;
    LookaheadSet la;

    friend bool operator==(const Item1&, const Item1&) = default;
    friend auto operator<=>(const Item1&, const Item1&) = default;
};

using SymItem = Item1;

/// Item1 set keyed by core: at most one entry per LR(0) item, lookaheads of
/// equal cores are merged. Remembers insertion order of cores.
class Item1Set {
public:
    Item1Set() = default;
    Item1Set(std::initializer_list<Item1> init) {
        for (const auto& i : init) add(i.core, i.la);
    }

    // Inserts a new core or unions `la` into the existing one.
    // Returns the entry index and whether anything changed.
    std::pair<std::size_t, bool> add(Item0 core, const LookaheadSet& la);

    const Item1* find(Item0 core) const;
    Item1* find(Item0 core);
    bool contains(Item0 core) const { return index_.count(core) != 0; }

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const Item1& operator[](std::size_t i) const { return items_[i]; }
    Item1& operator[](std::size_t i) { return items_[i]; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    auto begin() { return items_.begin(); }
    auto end() { return items_.end(); }

    std::vector<Item1> sorted() const;

    friend bool operator==(const Item1Set& a, const Item1Set& b) { return a.sorted() == b.sorted(); }

private:
    std::vector<Item1> items_;
    std::map<Item0, std::size_t> index_;
};

using SymItemSet = Item1Set;

ItemSet kernel_of(const ItemSet& p, const Grammar& g);
Item1Set kernel_of(const Item1Set& p, const Grammar& g);

// Distinct cores, in insertion order.
ItemSet project(const Item1Set& p);

ItemSet closure0(const ItemSet& p, const Grammar& g);

// One iteration of the closure1 worklist, for inspection.
struct ClosureRound {
    Item1 taken;                       // item as it was when marked
    std::optional<LookaheadSet> delta;  // set when the item has a nonterminal after the dot
    std::vector<Item1> added;
    std::vector<Item1> updated;         // with their grown lookaheads
};

/// LR(1) closure with FIFO worklist; items whose lookahead grows are
/// re-queued at the tail. Works on ground and symbolic sets alike: a
/// variable d contributes FIRST(beta d) = FIRST(beta) plus d when beta is
/// nullable.
Item1Set closure1(const Item1Set& p, const Grammar& g, std::vector<ClosureRound>* trace = nullptr);

ItemSet goto_kernel0(const ItemSet& p, Symbol y, const Grammar& g);
Item1Set goto_kernel1(const Item1Set& p, Symbol y, const Grammar& g);

// Distinct symbols right of a dot, in item order.
std::vector<Symbol> outgoing_symbols(const ItemSet& p, const Grammar& g);
std::vector<Symbol> outgoing_symbols(const Item1Set& p, const Grammar& g);

/// "A -> a . B c"
std::string format_item(const Grammar& g, Item0 item);
/// "[A -> a . B c, {x, $, X0}]"
std::string format_item(const Grammar& g, const Item1& item);
/// "{x, $, X0}"
std::string format_lookaheads(const Grammar& g, const LookaheadSet& la);
std::string format_variable(Variable v);

}  // namespace lrgen
