#include "lrgen/grammar.hpp"

#include <cassert>
#include <sstream>

namespace lrgen {

Grammar::Grammar(std::vector<SymbolInfo> symbols, Symbol start, std::vector<Production> productions)
    : symbols_(std::move(symbols)), start_(start) {
    if (symbols_.empty() || symbols_[0].kind != SymbolKind::endmarker)
        throw std::invalid_argument("symbol 0 must be the endmarker");
    if (!contains(start_) || symbols_[start_.id].kind != SymbolKind::nonterminal)
        throw GrammarError(GrammarErrc::not_a_nonterminal, "start symbol must be a nonterminal");
    productions_.push_back(Production{0, kEndmarker, {}});
    for (auto& p : productions) {
        if (p.id != productions_.size())
            throw std::invalid_argument("production ids must be dense and start at 1");
        if (!contains(p.driver) || symbols_[p.driver.id].kind != SymbolKind::nonterminal)
            throw GrammarError(GrammarErrc::not_a_nonterminal, "production driver must be a nonterminal");
        for (auto s : p.body) {
            if (!contains(s)) throw GrammarError(GrammarErrc::unknown_symbol, "unknown symbol in body");
            if (s == kEndmarker)
                throw GrammarError(GrammarErrc::reserved_symbol, "'$' may not appear in a production body");
        }
        productions_.push_back(std::move(p));
    }
    if (productions_.size() == 1) throw GrammarError(GrammarErrc::empty_grammar, "grammar has no productions");
    for (std::uint32_t i = 0; i < symbols_.size(); ++i) by_name_.emplace(symbols_[i].name, Symbol{i});
    finish();
}

const Grammar::SymbolInfo& Grammar::info(Symbol s) const {
    if (!contains(s)) throw GrammarError(GrammarErrc::unknown_symbol, "unknown symbol id " + std::to_string(s.id));
    return symbols_[s.id];
}

std::optional<Symbol> Grammar::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::vector<Symbol> Grammar::symbols_from(std::string_view names) const {
    std::vector<Symbol> out;
    std::istringstream in{std::string(names)};
    std::string word;
    while (in >> word) {
        auto s = find(word);
        if (!s) throw GrammarError(GrammarErrc::unknown_symbol, "unknown symbol '" + word + "'");
        out.push_back(*s);
    }
    return out;
}

Symbol Grammar::augmented_start() const {
    if (!augmented_start_) throw GrammarError(GrammarErrc::not_augmented, "grammar is not augmented");
    return *augmented_start_;
}

std::span<const Production> Grammar::productions() const {
    std::span<const Production> all(productions_);
    return augmented() ? all : all.subspan(1);
}

const Production& Grammar::production(ProductionId id) const {
    if (id >= productions_.size() || (id == 0 && !augmented()))
        throw std::out_of_range("no production with id " + std::to_string(id));
    return productions_[id];
}

const std::vector<ProductionId>& Grammar::productions_of(Symbol nonterminal) const {
    if (!is_nonterminal(nonterminal))
        throw GrammarError(GrammarErrc::not_a_nonterminal, "'" + name(nonterminal) + "' is not a nonterminal");
    return by_driver_[nonterminal.id];
}

bool Grammar::nullable(Symbol s) const {
    info(s);
    return nullable_[s.id];
}

const LookaheadSet& Grammar::first_of(Symbol s) const {
    info(s);
    return first_[s.id];
}

const LookaheadSet& Grammar::follow_of(Symbol nonterminal) const {
    if (!augmented()) throw GrammarError(GrammarErrc::not_augmented, "FOLLOW requires an augmented grammar");
    if (kind(nonterminal) != SymbolKind::nonterminal)
        throw GrammarError(GrammarErrc::not_a_nonterminal,
                           "FOLLOW is defined on nonterminals, got '" + name(nonterminal) + "'");
    return follow_[nonterminal.id];
}

void Grammar::finish() {
    terminals_.clear();
    nonterminals_.clear();
    for (std::uint32_t i = 1; i < symbols_.size(); ++i) {
        Symbol s{i};
        if (augmented_start_ && s == *augmented_start_) continue;
        (symbols_[i].kind == SymbolKind::terminal ? terminals_ : nonterminals_).push_back(s);
    }
    if (augmented_start_) nonterminals_.push_back(*augmented_start_);

    by_driver_.assign(symbols_.size(), {});
    for (const auto& p : productions()) by_driver_[p.driver.id].push_back(p.id);

    compute_first();
    if (augmented()) compute_follow();
}

void Grammar::compute_first() {
    nullable_.assign(symbols_.size(), false);
    first_.assign(symbols_.size(), {});
    for (std::uint32_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].kind != SymbolKind::nonterminal) first_[i].insert(Lookahead::symbol(Symbol{i}));

    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& p : productions()) {
            bool all_nullable = true;
            for (auto s : p.body) {
                changed |= first_[p.driver.id].merge(first_[s.id]);
                if (!nullable_[s.id]) {
                    all_nullable = false;
                    break;
                }
            }
            if (all_nullable && !nullable_[p.driver.id]) {
                nullable_[p.driver.id] = true;
                changed = true;
            }
        }
    }
}

void Grammar::compute_follow() {
    follow_.assign(symbols_.size(), {});
    follow_[augmented_start_->id].insert(Lookahead::end());
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& p : productions()) {
            for (std::size_t i = 0; i < p.body.size(); ++i) {
                auto b = p.body[i];
                if (symbols_[b.id].kind != SymbolKind::nonterminal) continue;
                auto rest = first(*this, std::span(p.body).subspan(i + 1));
                changed |= follow_[b.id].merge(rest.symbols);
                if (rest.nullable) changed |= follow_[b.id].merge(follow_[p.driver.id]);
            }
        }
    }
}

Grammar augment(const Grammar& g) {
    if (g.augmented())
        throw GrammarError(GrammarErrc::double_augmentation, "grammar is already augmented");
    Grammar out = g;
    std::string fresh = g.name(g.start()) + "'";
    while (out.by_name_.count(fresh)) fresh += "'";
    Symbol s_prime{static_cast<std::uint32_t>(out.symbols_.size())};
    out.symbols_.push_back({SymbolKind::nonterminal, fresh});
    out.by_name_.emplace(fresh, s_prime);
    out.augmented_start_ = s_prime;
    out.productions_[0] = Production{0, s_prime, {g.start()}};
    out.finish();
    return out;
}

std::vector<Production> check_reduced(const Grammar& g) {
    const auto n = g.symbol_count();
    std::vector<bool> generating(n, false);
    for (std::uint32_t i = 0; i < n; ++i) generating[i] = !g.is_nonterminal(Symbol{i});

    auto body_generates = [&](const Production& p) {
        for (auto s : p.body)
            if (!generating[s.id]) return false;
        return true;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& p : g.productions()) {
            if (!generating[p.driver.id] && body_generates(p)) {
                generating[p.driver.id] = true;
                changed = true;
            }
        }
    }

    std::vector<bool> reachable(n, false);
    Symbol root = g.augmented() ? g.augmented_start() : g.start();
    reachable[root.id] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& p : g.productions()) {
            if (!reachable[p.driver.id] || !body_generates(p)) continue;
            for (auto s : p.body) {
                if (!reachable[s.id]) {
                    reachable[s.id] = true;
                    changed = true;
                }
            }
        }
    }

    std::vector<Production> useless;
    for (const auto& p : g.productions())
        if (!reachable[p.driver.id] || !body_generates(p)) useless.push_back(p);
    return useless;
}

FirstSet first(const Grammar& g, std::span<const Symbol> alpha) {
    FirstSet out;
    out.nullable = true;
    for (auto s : alpha) {
        if (!g.contains(s))
            throw GrammarError(GrammarErrc::unknown_symbol, "unknown symbol id " + std::to_string(s.id));
        if (out.nullable) {
            out.symbols.merge(g.first_of(s));
            out.nullable = g.nullable(s);
        }
    }
    return out;
}

LookaheadSet follow(const Grammar& g, Symbol nonterminal) {
    if (!g.contains(nonterminal))
        throw GrammarError(GrammarErrc::unknown_symbol, "unknown symbol id " + std::to_string(nonterminal.id));
    return g.follow_of(nonterminal);
}

}  // namespace lrgen
