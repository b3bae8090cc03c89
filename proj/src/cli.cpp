#include "lrgen/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lrgen/engine.hpp"
#include "lrgen/render.hpp"

namespace lrgen::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void validate(const RunConfig& cfg) {
    bool needs_method = cfg.command == Command::automaton || cfg.command == Command::table ||
                        cfg.command == Command::parse;
    if (needs_method && !cfg.method) throw UsageError("--method is required for this command");
    if (cfg.command == Command::parse && !cfg.input) throw UsageError("--input is required for parse");
    if (cfg.format == Format::dot && cfg.command != Command::automaton)
        throw UsageError("--format dot is only valid for automaton");
}

Grammar load_reduced(const std::string& text) {
    Grammar g = augment(load_grammar(text));
    auto useless = check_reduced(g);
    if (!useless.empty()) {
        std::string msg = "grammar is not reduced; useless productions:";
        for (const auto& p : useless) msg += " [" + format_production(g, p.id) + "]";
        throw GrammarError(GrammarErrc::not_reduced, msg);
    }
    return g;
}

int do_check(const Grammar& g, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == Format::json) {
        out << nlohmann::ordered_json{{"format_version", kFormatVersion},
                                      {"reduced", true},
                                      {"start", g.name(g.start())},
                                      {"terminals", g.terminals().size()},
                                      {"nonterminals", g.nonterminals().size() - 1},
                                      {"productions", g.production_count() - 1}}
                   .dump(2)
            << "\n";
        return kExitOk;
    }
    out << "ok: start " << g.name(g.start()) << ", " << g.terminals().size() << " terminals, "
        << g.nonterminals().size() - 1 << " nonterminals, " << g.production_count() - 1 << " productions\n";
    for (const auto& p : g.productions()) out << "  " << p.id << ": " << format_production(g, p.id) << "\n";
    return kExitOk;
}

int do_automaton(const Grammar& g, const RunConfig& cfg, std::ostream& out) {
    auto c = construct(g, *cfg.method);
    auto emit = [&](const auto& aut) {
        switch (cfg.format) {
            case Format::text: out << automaton_text(g, aut); break;
            case Format::json: out << automaton_json(g, aut).dump(2) << "\n"; break;
            case Format::dot: out << automaton_dot(g, aut); break;
        }
    };
    if (c.lr0) {
        emit(*c.lr0);
    } else if (c.lr1) {
        emit(*c.lr1);
    } else if (c.merged) {
        emit(c.merged->automaton);
    } else if (cfg.format == Format::text) {
        out << symbolic_text(g, *c.symbolic);
    } else if (cfg.format == Format::json) {
        out << symbolic_json(g, *c.symbolic).dump(2) << "\n";
    } else {
        emit(c.symbolic->symbolic.automaton);
    }
    return kExitOk;
}

int do_table(const Grammar& g, const RunConfig& cfg, std::ostream& out) {
    auto c = construct(g, *cfg.method);
    if (cfg.format == Format::json)
        out << table_json(g, c.table).dump(2) << "\n";
    else
        out << table_text(g, c.table);
    return find_conflicts(c.table).empty() ? kExitOk : kExitConflictOrReject;
}

int do_classify(const Grammar& g, const RunConfig& cfg, std::ostream& out) {
    auto v = classify_grammar(g);
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    if (cfg.format == Format::json)
        out << nlohmann::ordered_json{{"format_version", kFormatVersion},
                                      {"slr1", v.slr1},
                                      {"lalr1", v.lalr1},
                                      {"lr1", v.lr1}}
                   .dump(2)
            << "\n";
    else
        out << "SLR(1): " << yn(v.slr1) << ", LALR(1): " << yn(v.lalr1) << ", LR(1): " << yn(v.lr1) << "\n";
    return v.lr1 ? kExitOk : kExitConflictOrReject;
}

int do_parse(const Grammar& g, const RunConfig& cfg, std::ostream& out) {
    std::vector<Token> tokens;
    try {
        tokens = tokenize(g, *cfg.input);
    } catch (const InputError& e) {
        if (cfg.format == Format::json)
            out << nlohmann::ordered_json{{"format_version", kFormatVersion},
                                          {"accepted", false},
                                          {"position", e.position()},
                                          {"error", e.what()}}
                       .dump(2)
                << "\n";
        else
            out << "rejected: " << e.what() << "\n";
        return kExitConflictOrReject;
    }

    auto c = construct(g, *cfg.method);
    auto conflicts = find_conflicts(c.table);
    if (!conflicts.empty()) {
        out << "table for " << method_name(*cfg.method) << " has " << conflicts.size()
            << " conflict(s); cannot parse\n";
        for (const auto& k : conflicts) out << "  " << format_conflict(g, k) << "\n";
        return kExitConflictOrReject;
    }

    ParseOptions opts;
    opts.trace = cfg.trace ? &out : nullptr;
    auto result = parse(g, c.table, tokens, opts);
    if (cfg.format == Format::json) {
        out << parse_result_json(g, result).dump(2) << "\n";
    } else if (result.accepted) {
        out << "accepted\n";
        out << "reductions:\n";
        for (auto id : result.derivation) out << "  " << id << ": " << format_production(g, id) << "\n";
        if (result.tree) out << "tree: " << format_tree(g, *result.tree) << "\n";
    } else {
        out << "rejected at position " << result.error_position << ", expected:";
        for (auto y : result.expected) out << " " << g.name(y);
        out << "\n";
    }
    return result.accepted ? kExitOk : kExitConflictOrReject;
}

}  // namespace

int run(const RunConfig& cfg, const std::string& grammar_text, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
        Grammar g = load_reduced(grammar_text);
        switch (cfg.command) {
            case Command::check: return do_check(g, cfg, out);
            case Command::first_follow:
                if (cfg.format == Format::json)
                    out << first_follow_json(g).dump(2) << "\n";
                else
                    out << first_follow_text(g);
                return kExitOk;
            case Command::automaton: return do_automaton(g, cfg, out);
            case Command::table: return do_table(g, cfg, out);
            case Command::classify: return do_classify(g, cfg, out);
            case Command::parse: return do_parse(g, cfg, out);
        }
    } catch (const UsageError& e) {
        err << "lrgen: " << e.what() << "\n";
    } catch (const GrammarError& e) {
        err << "lrgen: " << cfg.grammar_path << ": " << e.what() << "\n";
    }
    return kExitUsage;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ifstream in(cfg.grammar_path, std::ios::binary);
    if (!in) {
        err << "lrgen: cannot read grammar file '" << cfg.grammar_path << "'\n";
        return kExitUsage;
    }
    std::ostringstream text;
    text << in.rdbuf();
    return run(cfg, text.str(), out, err);
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"LR parser-table generator: SLR(1), LR(1) and LALR(1)"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string method, format = "text", input;

    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"dot", Format::dot}};
    const std::vector<std::string> methods{"slr1", "lr1", "lalr1-merged", "lalr1-symbolic"};

    struct Sub {
        const char* name;
        const char* help;
        Command command;
    };
    const Sub subs[] = {
        {"check", "Validate the grammar and check that it is reduced", Command::check},
        {"first-follow", "Print FIRST and FOLLOW sets", Command::first_follow},
        {"automaton", "Print the characteristic automaton", Command::automaton},
        {"table", "Print the parsing table and its conflicts", Command::table},
        {"classify", "Report SLR(1), LALR(1) and LR(1) membership", Command::classify},
        {"parse", "Parse an input string", Command::parse},
    };
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("grammar", cfg.grammar_path, "Grammar file")->required();
        sub->add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
        if (s.command == Command::automaton || s.command == Command::table || s.command == Command::parse)
            sub->add_option("-m,--method", method, "Construction method")->check(CLI::IsMember(methods));
        if (s.command == Command::parse) {
            sub->add_option("-i,--input", input, "Whitespace-separated terminals");
            sub->add_flag("-t,--trace", cfg.trace, "Print one line per parser step");
        }
        sub->callback([&cfg, c = s.command] { cfg.command = c; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    cfg.format = formats.at(format);
    if (!method.empty()) cfg.method = parse_method(method);
    for (auto* sub : app.get_subcommands())
        if (sub->get_name() == "parse" && sub->count("--input")) cfg.input = input;
    return run(cfg, out, err);
}

}  // namespace lrgen::cli
