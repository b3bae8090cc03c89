#pragma once

// Brute-force reference computations used to check the library. None of
// these share code with the constructions they check beyond the Grammar
// data model.

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lrgen/grammar.hpp"

namespace lrgen::testing {

Grammar make_grammar(std::string_view text);  // loaded and augmented
Grammar g1();                                 // S -> L = R | R ; L -> * R | id ; R -> L ;

using Sentence = std::vector<Symbol>;

/// Every terminal string of length <= max_len derivable from `from`,
/// computed by a per-nonterminal fixpoint over bounded string sets.
std::set<Sentence> language_upto(const Grammar& g, Symbol from, std::size_t max_len);

/// All strings over the terminals of g with length <= max_len.
std::vector<Sentence> all_strings(const Grammar& g, std::size_t max_len);

/// FIRST of a nonterminal by enumerating leftmost derivations of bounded
/// length; the epsilon flag is reported separately.
struct BruteFirst {
    std::set<Symbol> symbols;
    bool nullable = false;
};
BruteFirst brute_first(const Grammar& g, Symbol nonterminal, std::size_t max_form_len = 7);

/// FOLLOW via sentential forms of "S' $" up to a length bound.
std::set<Symbol> brute_follow(const Grammar& g, Symbol nonterminal, std::size_t max_form_len = 8);

/// Productions that occur in some bounded derivation of a terminal string.
std::set<ProductionId> brute_useful_productions(const Grammar& g, std::size_t max_form_len = 7,
                                                std::size_t max_steps = 12);

/// For each vertex: union of init over everything reachable, itself included.
std::vector<std::set<int>> reachability_union(const std::vector<std::vector<std::size_t>>& edges,
                                              const std::vector<std::set<int>>& init);

std::set<std::string> names(const Grammar& g, const LookaheadSet& la);

}  // namespace lrgen::testing
