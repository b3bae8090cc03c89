#include "lrgen/items.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace lrgen {

namespace {

const Production& checked_production(Item0 item, const Grammar& g) {
    const auto& p = g.production(item.production);
    if (item.dot > p.body.size()) throw std::out_of_range("item dot past end of production body");
    return p;
}

template <class Set>
std::vector<Symbol> outgoing(const Set& p, const Grammar& g, auto core_of) {
    std::vector<Symbol> out;
    for (const auto& item : p) {
        auto y = next_symbol(core_of(item), g);
        if (y && std::find(out.begin(), out.end(), *y) == out.end()) out.push_back(*y);
    }
    return out;
}

}  // namespace

ItemFlags classify(Item0 item, const Grammar& g) {
    const auto& p = checked_production(item, g);
    ItemFlags f;
    bool augmentation = g.augmented() && item.production == 0;
    f.initial = augmentation && item.dot == 0;
    f.accepting = augmentation && item.dot == p.body.size();
    f.kernel = f.initial || item.dot > 0;
    f.closure = !f.kernel;
    f.reducing = !f.accepting && item.dot == p.body.size();
    return f;
}

std::optional<Symbol> next_symbol(Item0 item, const Grammar& g) {
    const auto& p = checked_production(item, g);
    if (item.dot == p.body.size()) return std::nullopt;
    return p.body[item.dot];
}

std::vector<Item0> ItemSet::sorted() const {
    std::vector<Item0> out = items_;
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::size_t, bool> Item1Set::add(Item0 core, const LookaheadSet& la) {
    auto [it, fresh] = index_.emplace(core, items_.size());
    if (fresh) {
        items_.push_back(Item1{core, la});
        return {it->second, true};
    }
    return {it->second, items_[it->second].la.merge(la)};
}

const Item1* Item1Set::find(Item0 core) const {
    auto it = index_.find(core);
    return it == index_.end() ? nullptr : &items_[it->second];
}

Item1* Item1Set::find(Item0 core) {
    auto it = index_.find(core);
    return it == index_.end() ? nullptr : &items_[it->second];
}

std::vector<Item1> Item1Set::sorted() const {
    std::vector<Item1> out = items_;
    std::sort(out.begin(), out.end(), [](const Item1& a, const Item1& b) { return a.core < b.core; });
    return out;
}

ItemSet kernel_of(const ItemSet& p, const Grammar& g) {
    ItemSet out;
    for (auto item : p)
        if (is_kernel(item, g)) out.insert(item);
    return out;
}

Item1Set kernel_of(const Item1Set& p, const Grammar& g) {
    Item1Set out;
    for (const auto& item : p)
        if (is_kernel(item.core, g)) out.add(item.core, item.la);
    return out;
}

ItemSet project(const Item1Set& p) {
    ItemSet out;
    for (const auto& item : p) out.insert(item.core);
    return out;
}

ItemSet closure0(const ItemSet& p, const Grammar& g) {
    ItemSet out = p;
    // out only grows at the tail, so a cursor doubles as the unmarked queue.
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto b = next_symbol(out[i], g);
        if (!b || !g.is_nonterminal(*b)) continue;
        for (auto prod : g.productions_of(*b)) out.insert(Item0{prod, 0});
    }
    return out;
}

Item1Set closure1(const Item1Set& p, const Grammar& g, std::vector<ClosureRound>* trace) {
    Item1Set out = p;
    std::deque<std::size_t> unmarked;
    std::vector<bool> queued(out.size(), true);
    for (std::size_t i = 0; i < out.size(); ++i) unmarked.push_back(i);

    while (!unmarked.empty()) {
        std::size_t i = unmarked.front();
        unmarked.pop_front();
        queued[i] = false;
        const Item1 taken = out[i];

        ClosureRound round{taken, std::nullopt, {}, {}};
        auto b = next_symbol(taken.core, g);
        if (b && g.is_nonterminal(*b)) {
            const auto& body = g.production(taken.core.production).body;
            auto beta = std::span(body).subspan(taken.core.dot + 1);
            // union over d in Delta of FIRST(beta d)
            LookaheadSet delta1;
            if (!taken.la.empty()) {
                auto fb = first(g, beta);
                delta1 = fb.symbols;
                if (fb.nullable) delta1.merge(taken.la);
            }
            round.delta = delta1;

            for (auto prod : g.productions_of(*b)) {
                Item0 core{prod, 0};
                bool existed = out.contains(core);
                auto [idx, changed] = out.add(core, delta1);
                if (!existed) {
                    queued.push_back(true);
                    unmarked.push_back(idx);
                    round.added.push_back(out[idx]);
                } else if (changed) {
                    round.updated.push_back(out[idx]);
                    if (!queued[idx]) {
                        queued[idx] = true;
                        unmarked.push_back(idx);
                    }
                }
            }
        }
        if (trace) trace->push_back(std::move(round));
    }
    return out;
}

ItemSet goto_kernel0(const ItemSet& p, Symbol y, const Grammar& g) {
    ItemSet out;
    for (auto item : p)
        if (next_symbol(item, g) == y) out.insert(Item0{item.production, item.dot + 1});
    return out;
}

Item1Set goto_kernel1(const Item1Set& p, Symbol y, const Grammar& g) {
    Item1Set out;
    for (const auto& item : p)
        if (next_symbol(item.core, g) == y) out.add(Item0{item.core.production, item.core.dot + 1}, item.la);
    return out;
}

std::vector<Symbol> outgoing_symbols(const ItemSet& p, const Grammar& g) {
    return outgoing(p, g, [](Item0 i) { return i; });
}

std::vector<Symbol> outgoing_symbols(const Item1Set& p, const Grammar& g) {
    return outgoing(p, g, [](const Item1& i) { return i.core; });
}

std::string format_item(const Grammar& g, Item0 item) {
    const auto& p = checked_production(item, g);
    std::string out = g.name(p.driver) + " ->";
    for (std::size_t i = 0; i <= p.body.size(); ++i) {
        if (i == item.dot) out += " .";
        if (i < p.body.size()) out += " " + g.name(p.body[i]);
    }
    return out;
}

std::string format_item(const Grammar& g, const Item1& item) {
    return "[" + format_item(g, item.core) + ", " + format_lookaheads(g, item.la) + "]";
}

std::string format_variable(Variable v) { return "X" + std::to_string(v.index); }

std::string format_lookaheads(const Grammar& g, const LookaheadSet& la) {
    std::string out = "{";
    bool first_elem = true;
    for (auto e : la) {
        if (!first_elem) out += ", ";
        first_elem = false;
        out += e.is_variable() ? format_variable(e.as_variable()) : g.name(e.as_symbol());
    }
    return out + "}";
}

}  // namespace lrgen
