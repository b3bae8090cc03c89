#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "lrgen/tables.hpp"

namespace lrgen::cli {

enum class Command { check, first_follow, automaton, table, classify, parse };
enum class Format { text, json, dot };

struct RunConfig {
    Command command = Command::check;
    std::string grammar_path;
    std::optional<Method> method;
    Format format = Format::text;
    std::optional<std::string> input;
    bool trace = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConflictOrReject = 1;
inline constexpr int kExitUsage = 2;

// Grammar text is passed in so tests can run without touching the filesystem.
int run(const RunConfig& cfg, const std::string& grammar_text, std::ostream& out, std::ostream& err);
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Command-line entry point: parses argv and dispatches to run().
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lrgen::cli
