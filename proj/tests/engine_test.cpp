#include <sstream>

#include "doctest.h"
#include "lrgen/engine.hpp"
#include "lrgen/render.hpp"
#include "support/oracles.hpp"
#include "support/random_grammar.hpp"

using namespace lrgen;
using lrgen::testing::g1;
using lrgen::testing::make_grammar;

namespace {

std::vector<Token> to_tokens(const testing::Sentence& s) {
    std::vector<Token> out;
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(Token{s[i], i});
    return out;
}

std::size_t internal_nodes(const ParseTree& t) {
    std::size_t n = t.production ? 1 : 0;
    for (const auto& c : t.children) n += internal_nodes(c);
    return n;
}

}  // namespace

TEST_SUITE("engine") {
    TEST_CASE("tokenize") {
        auto g = g1();
        auto t = tokenize(g, "id = id");
        REQUIRE(t.size() == 3);
        CHECK(g.name(t[1].symbol) == "=");
        CHECK(t[2].position == 2);
        CHECK(tokenize(g, "").empty());
        CHECK(tokenize(g, "  \t\n").empty());
        try {
            tokenize(g, "id + id");
            FAIL("expected error");
        } catch (const InputError& e) {
            CHECK(e.position() == 1);
        }
        CHECK_THROWS_AS(tokenize(g, "id = L"), InputError);
        CHECK_THROWS_AS(tokenize(g, "id $"), InputError);
    }

    TEST_CASE("parse id = id with the LALR table") {
        auto g = g1();
        auto table = construct(g, Method::lalr1_symbolic).table;
        auto tokens = tokenize(g, "id = id");
        auto r = parse(g, table, tokens);
        REQUIRE(r.accepted);
        CHECK(r.derivation == std::vector<ProductionId>{4, 4, 5, 1});
        CHECK(derivation_check(g, r, tokens));
        REQUIRE(r.tree);
        CHECK(format_tree(g, *r.tree) == "S(L(id) = R(L(id)))");
        CHECK(internal_nodes(*r.tree) == r.derivation.size());
    }

    TEST_CASE("parse id with the LR(1) table") {
        auto g = g1();
        auto table = construct(g, Method::lr1).table;
        auto tokens = tokenize(g, "id");
        auto r = parse(g, table, tokens);
        REQUIRE(r.accepted);
        CHECK(r.derivation == std::vector<ProductionId>{4, 5, 2});
        CHECK(derivation_check(g, r, tokens));
    }

    TEST_CASE("rejection reports position and expected symbols") {
        auto g = g1();
        for (auto m : {Method::lr1, Method::lalr1_merged, Method::lalr1_symbolic}) {
            auto table = construct(g, m).table;
            auto r = parse(g, table, tokenize(g, "= id"));
            CHECK_FALSE(r.accepted);
            CHECK(r.error_position == 0);
            std::set<std::string> expected;
            for (auto y : r.expected) expected.insert(g.name(y));
            CHECK(expected == std::set<std::string>{"*", "id"});
            auto eof = parse(g, table, tokenize(g, "id ="));
            CHECK_FALSE(eof.accepted);
            CHECK(eof.error_position == 2);
        }
    }

    TEST_CASE("conflicted tables are refused") {
        auto g = g1();
        CHECK_THROWS_AS(parse(g, construct(g, Method::slr1).table, tokenize(g, "id")), EngineError);
    }

    TEST_CASE("trace lines") {
        auto g = g1();
        auto table = construct(g, Method::lalr1_merged).table;
        std::ostringstream trace;
        ParseOptions opts;
        opts.trace = &trace;
        parse(g, table, tokenize(g, "id"), opts);
        auto text = trace.str();
        CHECK(text.rfind("STACK: 0 | INPUT: id $ | ACTION: shift 5\n", 0) == 0);
        CHECK(text.find("STACK: 0 5 | INPUT: $ | ACTION: reduce 4 (L -> id)") != std::string::npos);
        CHECK(text.find("ACTION: accept") != std::string::npos);
    }

    TEST_CASE("epsilon grammar") {
        auto g = make_grammar("S -> %empty ;");
        auto table = construct(g, Method::lr1).table;
        auto r = parse(g, table, {});
        REQUIRE(r.accepted);
        CHECK(r.derivation == std::vector<ProductionId>{1});
        CHECK(derivation_check(g, r, {}));
        CHECK_FALSE(parse(g, table, tokenize(g, "")).derivation.empty());
    }

    TEST_CASE("derivation_check rejects tampered derivations") {
        auto g = g1();
        auto table = construct(g, Method::lr1).table;
        auto tokens = tokenize(g, "id = id");
        auto r = parse(g, table, tokens);
        REQUIRE(r.accepted);
        auto swapped = r;
        std::swap(swapped.derivation[1], swapped.derivation[2]);
        CHECK_FALSE(derivation_check(g, swapped, tokens));
        auto shorter = r;
        shorter.derivation.pop_back();
        CHECK_FALSE(derivation_check(g, shorter, tokens));
        CHECK_FALSE(derivation_check(g, r, tokenize(g, "id = * id")));
    }

    TEST_CASE("parse agrees with bounded enumeration and across methods") {
        int grammars = 0;
        for (const auto& g : testing::random_reduced_grammars(120, 909, {4, 8, 3, 3})) {
            std::vector<ParseTable> tables;
            for (auto m : {Method::slr1, Method::lr1, Method::lalr1_merged, Method::lalr1_symbolic}) {
                auto t = construct(g, m).table;
                if (find_conflicts(t).empty()) tables.push_back(std::move(t));
            }
            if (tables.empty()) continue;
            ++grammars;
            auto lang = testing::language_upto(g, g.start(), 5);
            for (const auto& s : testing::all_strings(g, 5)) {
                auto tokens = to_tokens(s);
                ParseOptions opts;
                opts.check_stack = true;
                auto first_result = parse(g, tables[0], tokens, opts);
                CHECK(first_result.accepted == (lang.count(s) == 1));
                if (first_result.accepted) {
                    CHECK(derivation_check(g, first_result, tokens));
                    CHECK(internal_nodes(*first_result.tree) == first_result.derivation.size());
                }
                for (std::size_t i = 1; i < tables.size(); ++i) {
                    auto r = parse(g, tables[i], tokens);
                    CHECK(r.accepted == first_result.accepted);
                    // Rejections may differ in the reductions done before the error is seen.
                    if (r.accepted)
                        CHECK(r.derivation == first_result.derivation);
                    else
                        CHECK(r.error_position == first_result.error_position);
                }
                // Deterministic.
                CHECK(parse(g, tables[0], tokens).actions == first_result.actions);
            }
        }
        CHECK(grammars >= 20);
    }

    TEST_CASE("parse result JSON") {
        auto g = g1();
        auto r = parse(g, construct(g, Method::lr1).table, tokenize(g, "id"));
        auto j = parse_result_json(g, r);
        CHECK(j["accepted"] == true);
        CHECK(j["derivation"].size() == 3);
    }
}
