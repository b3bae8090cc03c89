#include <random>

#include "doctest.h"
#include "lrgen/render.hpp"
#include "lrgen/symbolic.hpp"
#include "support/oracles.hpp"
#include "support/random_grammar.hpp"

using namespace lrgen;
using lrgen::testing::g1;
using lrgen::testing::make_grammar;
using lrgen::testing::names;

namespace {

using Names = std::set<std::string>;

Variable X(std::uint32_t i) { return Variable{i}; }

LookaheadSet vars(std::initializer_list<std::uint32_t> ids) {
    LookaheadSet out;
    for (auto i : ids) out.insert(Lookahead::var(Variable{i}));
    return out;
}

}  // namespace

TEST_SUITE("symbolic") {
    TEST_CASE("symbolic automaton of G1 has the expected equations") {
        auto g = g1();
        auto s = build_symbolic(g);
        CHECK(s.automaton.size() == 10);
        CHECK(s.automaton.kind == AutomatonKind::symbolic);
        const auto& es = s.equations;
        REQUIRE(es.size() == 11);
        const std::vector<Names> expected{
            {"$"},       {"X0"}, {"X0"},          {"X0"},       {"X0"},  {"=", "X0", "X5", "X7"},
            {"=", "X0", "X5", "X7"}, {"X2"}, {"X5"}, {"X5", "X7"}, {"X7"},
        };
        for (std::uint32_t i = 0; i < 11; ++i) {
            INFO("X" << i);
            CHECK(names(g, es.look(X(i))) == expected[i]);
        }
        std::vector<std::uint32_t> owners;
        for (std::uint32_t i = 0; i < 11; ++i) owners.push_back(es.owner[i].state.index);
        CHECK(owners == std::vector<std::uint32_t>{0, 1, 2, 2, 3, 4, 5, 6, 7, 8, 9});
        std::vector<std::uint32_t> reducing;
        for (auto x : es.reducing_variables()) reducing.push_back(x.index);
        CHECK(reducing == std::vector<std::uint32_t>{3, 4, 6, 8, 9, 10});
        std::vector<std::uint32_t> bypassing;
        for (auto x : es.bypassing_variables()) bypassing.push_back(x.index);
        CHECK(bypassing == std::vector<std::uint32_t>{0, 1, 2, 5, 7});
    }

    TEST_CASE("closure items of P0 and P4 carry the propagated lookaheads") {
        auto g = g1();
        auto s = build_symbolic(g);
        const auto& p0 = s.automaton[StateId{0}];
        CHECK(names(g, p0.find(Item0{3, 0})->la) == Names{"=", "X0"});
        CHECK(names(g, p0.find(Item0{5, 0})->la) == Names{"X0"});
        const auto& p4 = s.automaton[StateId{4}];
        CHECK(names(g, p4.find(Item0{4, 0})->la) == Names{"X5"});
        // Each kernel item is labelled by exactly its own variable.
        for (const auto& state : s.automaton.states)
            for (const auto& it : kernel_of(state, g)) {
                CHECK(it.la.size() == 1);
                CHECK(it.la.has_variables());
            }
    }

    TEST_CASE("reduce_system on G1") {
        auto g = g1();
        auto s = build_symbolic(g);
        auto rs = reduce_system(s.equations);
        CHECK(rs.class_of(X(1)) == X(0));
        CHECK(rs.class_of(X(2)) == X(0));
        CHECK(rs.class_of(X(7)) == X(0));
        CHECK(rs.class_of(X(0)) == X(0));
        CHECK(rs.class_of(X(5)) == X(5));
        CHECK_FALSE(rs.rep[3].has_value());
        CHECK(rs.rvars == std::vector<Variable>{X(0), X(5)});
        REQUIRE(rs.equations.size() == 2);
        CHECK(names(g, rs.equations.at(X(0))) == Names{"$"});
        CHECK(names(g, rs.equations.at(X(5))) == Names{"=", "X0"});

        auto dg = build_dependency_graph(rs);
        CHECK(dg.size() == 2);
        std::size_t edges = 0;
        for (const auto& e : dg.edges) edges += e.size();
        CHECK(edges == 1);
        REQUIRE(dg.position(X(5)));
        REQUIRE(dg.edges[*dg.position(X(5))].size() == 1);
        CHECK(dg.edges[*dg.position(X(5))][0] == *dg.position(X(0)));
    }

    TEST_CASE("valuation of G1") {
        auto sol = solve_symbolic(g1());
        auto g = g1();
        CHECK(names(g, sol.values.at(X(0))) == Names{"$"});
        CHECK(names(g, sol.values.at(X(5))) == Names{"=", "$"});
        for (auto i : {1u, 2u, 3u, 4u, 7u, 10u}) {
            INFO("X" << i);
            CHECK(names(g, sol.values.at(X(i))) == Names{"$"});
        }
        for (auto i : {6u, 8u, 9u}) {
            INFO("X" << i);
            CHECK(names(g, sol.values.at(X(i))) == Names{"=", "$"});
        }
        CHECK(sol.values.size() == 11);
        for (const auto& [x, v] : sol.values.values()) CHECK_FALSE(v.has_variables());
    }

    TEST_CASE("reduce_system handles chains, self loops and cycles") {
        EquationSystem es;
        auto e = [](std::initializer_list<std::uint32_t> v, std::initializer_list<std::uint32_t> t) {
            LookaheadSet out = vars(v);
            for (auto s : t) out.insert(Lookahead::symbol(Symbol{s}));
            return out;
        };
        es.fresh(e({}, {0}), false, {});       // X0 = {$}
        es.fresh(e({0, 1}, {}), false, {});    // X1 = {X0, X1}: alias of X0
        es.fresh(e({1}, {}), false, {});       // X2 = {X1}: alias of X0 through X1
        es.fresh(e({2, 4}, {5}), false, {});   // X3 = {a, X2, X4}: representative
        es.fresh(e({3}, {6}), false, {});      // X4 = {b, X3}
        es.fresh(e({3, 4}, {}), true, {});     // X5 reducing
        auto rs = reduce_system(es);
        CHECK(rs.class_of(X(1)) == X(0));
        CHECK(rs.class_of(X(2)) == X(0));
        CHECK(rs.rvars == std::vector<Variable>{X(0), X(3), X(4)});
        CHECK(rs.equations.at(X(3)) == e({0, 4}, {5}));
        auto val = actualize(es, rs, evaluate(build_dependency_graph(rs)));
        LookaheadSet both = e({}, {0, 5, 6});
        CHECK(val.at(X(3)) == both);
        CHECK(val.at(X(4)) == both);
        CHECK(val.at(X(5)) == both);
        CHECK(val.at(X(2)) == e({}, {0}));
    }

    TEST_CASE("reduce_system rejects malformed systems") {
        EquationSystem forward;
        forward.fresh(vars({1}), false, {});
        forward.fresh(vars({}), false, {});
        CHECK_THROWS_AS(reduce_system(forward), std::logic_error);

        EquationSystem uses_reducing;
        LookaheadSet end;
        end.insert(Lookahead::end());
        uses_reducing.fresh(end, true, {});
        uses_reducing.fresh(vars({0}), false, {});
        CHECK_THROWS_AS(reduce_system(uses_reducing), std::logic_error);
    }

    TEST_CASE("evaluate equals reachability union on random digraphs") {
        std::mt19937 rng(1234);
        for (int trial = 0; trial < 300; ++trial) {
            std::size_t n = 1 + rng() % 12;
            DependencyGraph dg;
            std::vector<std::set<int>> init(n);
            dg.edges.resize(n);
            for (std::size_t v = 0; v < n; ++v) {
                dg.vertices.push_back(X(static_cast<std::uint32_t>(v)));
                LookaheadSet s;
                for (int t = 0; t < 5; ++t)
                    if (rng() % 4 == 0) {
                        s.insert(Lookahead::symbol(Symbol{static_cast<std::uint32_t>(t + 1)}));
                        init[v].insert(t);
                    }
                dg.init.push_back(s);
                for (std::size_t w = 0; w < n; ++w)
                    if (rng() % 5 == 0) dg.edges[v].push_back(w);
            }
            auto expected = testing::reachability_union(dg.edges, init);
            auto val = evaluate(dg);
            for (std::size_t v = 0; v < n; ++v) {
                std::set<int> got;
                for (auto la : val.at(dg.vertices[v])) got.insert(static_cast<int>(la.as_symbol().id) - 1);
                CHECK(got == expected[v]);
            }
        }
    }

    TEST_CASE("evaluate on an empty graph") { CHECK(evaluate(DependencyGraph{}).size() == 0); }

    TEST_CASE("symbolic automaton has the LR(0) shape on random grammars") {
        for (const auto& g : testing::random_reduced_grammars(60, 77)) {
            auto sol = solve_symbolic(g);
            auto a0 = build_lr0(g);
            REQUIRE(sol.symbolic.automaton.size() == a0.size());
            for (std::uint32_t i = 0; i < a0.size(); ++i)
                CHECK(project(sol.symbolic.automaton[StateId{i}]) == a0[StateId{i}]);
            CHECK(sol.values.size() == sol.symbolic.equations.size());
            // val(X) contains the ground part of look(X).
            for (auto x : sol.symbolic.equations.variables())
                CHECK(sol.values.at(x).includes(sol.symbolic.equations.look(x).ground()));
        }
    }

    TEST_CASE("symbolic rendering") {
        auto g = g1();
        auto sol = solve_symbolic(g);
        auto text = symbolic_text(g, sol);
        CHECK(text.find("look(X5) = {=, X0, X5, X7}") != std::string::npos);
        CHECK(text.find("val(X9) = {=, $}") != std::string::npos);
        auto j = symbolic_json(g, sol);
        CHECK(j["format_version"] == 1);
    }
}
