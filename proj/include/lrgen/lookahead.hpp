#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace lrgen {

// Grammar symbol handle. Ids follow first appearance in the grammar source;
// id 0 is always the endmarker "$".
struct Symbol {
    std::uint32_t id = 0;

    friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

inline constexpr Symbol kEndmarker{0};

// Placeholder for a not-yet-known set of lookahead terminals.
struct Variable {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(Variable, Variable) = default;
};

// One element of a lookahead set: a terminal, the endmarker or a variable.
// Ordering puts terminals first (by symbol id), then "$", then variables.
struct Lookahead {
    enum class Kind : std::uint8_t { terminal, endmarker, variable };

    Kind kind = Kind::terminal;
    std::uint32_t index = 0;

    static constexpr Lookahead symbol(Symbol s) {
        return s == kEndmarker ? Lookahead{Kind::endmarker, 0} : Lookahead{Kind::terminal, s.id};
    }
    static constexpr Lookahead end() { return {Kind::endmarker, 0}; }
    static constexpr Lookahead var(Variable v) { return {Kind::variable, v.index}; }

    constexpr bool is_variable() const { return kind == Kind::variable; }
    constexpr bool is_ground() const { return kind != Kind::variable; }
    constexpr Symbol as_symbol() const { return kind == Kind::endmarker ? kEndmarker : Symbol{index}; }
    constexpr Variable as_variable() const { return Variable{index}; }

    friend constexpr auto operator<=>(Lookahead, Lookahead) = default;
};

// Sorted set of lookahead elements.
class LookaheadSet {
public:
    using const_iterator = std::vector<Lookahead>::const_iterator;

    LookaheadSet() = default;
    LookaheadSet(std::initializer_list<Lookahead> init) {
        for (auto la : init) insert(la);
    }

    bool insert(Lookahead la) {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), la);
        if (it != elems_.end() && *it == la) return false;
        elems_.insert(it, la);
        return true;
    }

    // Returns true when the set grew.
    bool merge(const LookaheadSet& other) {
        if (other.elems_.empty() || includes(other)) return false;
        std::vector<Lookahead> out;
        out.reserve(elems_.size() + other.elems_.size());
        std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                       std::back_inserter(out));
        elems_ = std::move(out);
        return true;
    }

    bool erase(Lookahead la) {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), la);
        if (it == elems_.end() || *it != la) return false;
        elems_.erase(it);
        return true;
    }

    bool contains(Lookahead la) const { return std::binary_search(elems_.begin(), elems_.end(), la); }
    bool contains(Symbol s) const { return contains(Lookahead::symbol(s)); }
    bool contains(Variable v) const { return contains(Lookahead::var(v)); }

    bool includes(const LookaheadSet& other) const {
        return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end());
    }

    // Terminals and "$" only.
    LookaheadSet ground() const {
        LookaheadSet out;
        for (auto la : elems_)
            if (la.is_ground()) out.elems_.push_back(la);
        return out;
    }

    std::vector<Variable> variables() const {
        std::vector<Variable> out;
        for (auto la : elems_)
            if (la.is_variable()) out.push_back(la.as_variable());
        return out;
    }

    bool has_variables() const { return !elems_.empty() && elems_.back().is_variable(); }

    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    const_iterator begin() const { return elems_.begin(); }
    const_iterator end() const { return elems_.end(); }

    friend bool operator==(const LookaheadSet&, const LookaheadSet&) = default;
    friend auto operator<=>(const LookaheadSet& a, const LookaheadSet& b) {
        return std::lexicographical_compare_three_way(a.elems_.begin(), a.elems_.end(), b.elems_.begin(),
                                                      b.elems_.end());
    }

private:
    std::vector<Lookahead> elems_;
};

}  // namespace lrgen
