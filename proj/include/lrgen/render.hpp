#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lrgen/engine.hpp"
#include "lrgen/tables.hpp"

namespace lrgen {

inline constexpr int kFormatVersion = 1;

// "s6", "r4", "acc", "g3", "."
std::string format_action(Action a);
std::string format_cell(const std::vector<Action>& cell);  // joined with '/'
std::string format_production(const Grammar& g, ProductionId id);  // "L -> * R"
std::string format_conflict(const Grammar& g, const Conflict& c);

std::string first_follow_text(const Grammar& g);
nlohmann::ordered_json first_follow_json(const Grammar& g);

std::string automaton_text(const Grammar& g, const Lr0Automaton& aut);
std::string automaton_text(const Grammar& g, const Lr1Automaton& aut);
nlohmann::ordered_json automaton_json(const Grammar& g, const Lr0Automaton& aut);
nlohmann::ordered_json automaton_json(const Grammar& g, const Lr1Automaton& aut);
std::string automaton_dot(const Grammar& g, const Lr0Automaton& aut);
std::string automaton_dot(const Grammar& g, const Lr1Automaton& aut);

/// States with symbolic items next to their kernel equations, followed by
/// the reduced system (E_b, class, R_v, R_E) and the final values.
std::string symbolic_text(const Grammar& g, const SymbolicLalr& s);
nlohmann::ordered_json symbolic_json(const Grammar& g, const SymbolicLalr& s);

std::string table_text(const Grammar& g, const ParseTable& t);
nlohmann::ordered_json table_json(const Grammar& g, const ParseTable& t);

nlohmann::ordered_json parse_result_json(const Grammar& g, const ParseResult& r);

}  // namespace lrgen
