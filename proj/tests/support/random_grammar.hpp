#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lrgen/grammar.hpp"

namespace lrgen::testing {

struct RandomGrammarLimits {
    std::size_t max_nonterminals = 6;
    std::size_t max_productions = 12;
    std::size_t max_terminals = 3;
    std::size_t max_body = 3;
};

/// Grammar text with nonterminals A..F and terminals a..c. Not necessarily
/// reduced; see random_reduced_grammars().
std::string random_grammar_text(std::mt19937& rng, const RandomGrammarLimits& limits = {});

/// `count` distinct reduced, augmented grammars drawn from a fixed seed.
std::vector<Grammar> random_reduced_grammars(std::size_t count, std::uint32_t seed,
                                             const RandomGrammarLimits& limits = {});

}  // namespace lrgen::testing
