#include "doctest.h"
#include "lrgen/automata.hpp"
#include "lrgen/render.hpp"
#include "support/oracles.hpp"
#include "support/random_grammar.hpp"

using namespace lrgen;
using lrgen::testing::g1;
using lrgen::testing::make_grammar;
using lrgen::testing::names;

namespace {

std::map<std::uint32_t, std::vector<std::string>> finals0(const Grammar& g, const Lr0Automaton& a) {
    std::map<std::uint32_t, std::vector<std::string>> out;
    for (auto s : a.finals())
        for (auto it : reducing_items(a[s], g)) out[s.index].push_back(format_item(g, it));
    return out;
}

// Every state is reachable from the initial one.
template <class A>
bool all_reachable(const A& a) {
    std::vector<bool> seen(a.size(), false);
    std::vector<StateId> stack{a.initial};
    seen[a.initial.index] = true;
    while (!stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        for (auto [y, t] : a.transitions.edges(s))
            if (!seen[t.index]) {
                seen[t.index] = true;
                stack.push_back(t);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

TEST_SUITE("automata") {
    TEST_CASE("LR(0) automaton of G1") {
        auto g = g1();
        auto a = build_lr0(g);
        CHECK(a.size() == 10);
        CHECK(finals0(g, a) == std::map<std::uint32_t, std::vector<std::string>>{
                                   {2, {"R -> L ."}},
                                   {3, {"S -> R ."}},
                                   {5, {"L -> id ."}},
                                   {7, {"L -> * R ."}},
                                   {8, {"R -> L ."}},
                                   {9, {"S -> L = R ."}},
                               });
        for (std::uint32_t i = 0; i < a.size(); ++i) CHECK(has_accepting_item(a[StateId{i}], g) == (i == 1));
        auto sym = [&](const char* n) { return *g.find(n); };
        CHECK(a.transitions.target(StateId{2}, sym("="))->index == 6);
        CHECK(a.transitions.target(StateId{6}, sym("R"))->index == 9);
        CHECK(a.transitions.target(StateId{4}, sym("*"))->index == 4);
        CHECK_FALSE(a.transitions.target(StateId{1}, sym("=")).has_value());
        CHECK(all_reachable(a));
    }

    TEST_CASE("LR(1) automaton of G1") {
        auto g = g1();
        auto a = build_lr1(g);
        CHECK(a.size() == 14);
        std::map<std::uint32_t, std::vector<std::string>> finals;
        for (auto s : a.finals())
            for (const auto& it : a[s])
                if (is_reducing(it.core, g)) finals[s.index].push_back(format_item(g, it));
        CHECK(finals == std::map<std::uint32_t, std::vector<std::string>>{
                            {2, {"[R -> L ., {$}]"}},
                            {3, {"[S -> R ., {$}]"}},
                            {5, {"[L -> id ., {=, $}]"}},
                            {7, {"[L -> * R ., {=, $}]"}},
                            {8, {"[R -> L ., {=, $}]"}},
                            {9, {"[S -> L = R ., {$}]"}},
                            {10, {"[R -> L ., {$}]"}},
                            {12, {"[L -> id ., {$}]"}},
                            {13, {"[L -> * R ., {$}]"}},
                        });
        CHECK(has_accepting_item(a[StateId{1}], g));
        CHECK(all_reachable(a));
    }

    TEST_CASE("merged LR(1) automaton of G1") {
        auto g = g1();
        auto lr1 = build_lr1(g);
        auto m = merge_lr1(lr1, g);
        CHECK(m.automaton.size() == 10);
        CHECK(m.automaton.kind == AutomatonKind::merged);
        // {P8, P10}, {P5, P12}, {P7, P13}, {P4, P11}
        CHECK(m.class_of[10].index == m.class_of[8].index);
        CHECK(m.class_of[12].index == m.class_of[5].index);
        CHECK(m.class_of[13].index == m.class_of[7].index);
        CHECK(m.class_of[11].index == m.class_of[4].index);
        CHECK(m.class_of[2].index != m.class_of[10].index);
        auto r = m.automaton[m.class_of[8]].find(Item0{5, 1});
        REQUIRE(r);
        CHECK(names(g, r->la) == std::set<std::string>{"=", "$"});
        auto id = m.automaton[m.class_of[5]].find(Item0{4, 1});
        CHECK(names(g, id->la) == std::set<std::string>{"=", "$"});
    }

    TEST_CASE("projections correspond across constructions") {
        std::vector<Grammar> corpus{g1()};
        for (auto& g : testing::random_reduced_grammars(60, 101)) corpus.push_back(std::move(g));
        for (const auto& g : corpus) {
            auto a0 = build_lr0(g);
            auto a1 = build_lr1(g);
            auto m = merge_lr1(a1, g);
            REQUIRE(m.automaton.size() == a0.size());
            std::set<std::vector<Item0>> p0, pm, p1;
            for (const auto& s : a0.states) p0.insert(kernel_projection(s, g));
            for (const auto& s : m.automaton.states) pm.insert(kernel_projection(s, g));
            for (const auto& s : a1.states) p1.insert(kernel_projection(s, g));
            CHECK(p0 == pm);
            CHECK(p0 == p1);
            CHECK(p0.size() == a0.size());
            CHECK(a1.size() >= a0.size());
            // LR(1) states are pairwise distinct.
            std::set<std::vector<Item1>> distinct;
            for (const auto& s : a1.states) distinct.insert(kernel_of(s, g).sorted());
            CHECK(distinct.size() == a1.size());
            // Transitions of merged classes follow the LR(1) ones.
            for (std::uint32_t s = 0; s < a1.size(); ++s)
                for (auto [y, t] : a1.transitions.edges(StateId{s}))
                    CHECK(m.automaton.transitions.target(m.class_of[s], y) == m.class_of[t.index]);
            // Final flags agree with the presence of reducing items.
            for (std::uint32_t s = 0; s < a0.size(); ++s)
                CHECK(a0.final[s] == !reducing_items(a0[StateId{s}], g).empty());
            CHECK(all_reachable(a0));
            CHECK(all_reachable(a1));
        }
    }

    TEST_CASE("state identity is independent of item insertion order") {
        auto g = g1();
        ItemSet a{Item0{1, 1}, Item0{5, 1}};
        ItemSet b{Item0{5, 1}, Item0{1, 1}};
        CHECK(kernel_projection(a, g) == kernel_projection(b, g));
    }

    TEST_CASE("transition table rejects nondeterminism") {
        TransitionTable t(3);
        auto s0 = t.add_state();
        auto s1 = t.add_state();
        auto s2 = t.add_state();
        t.set(s0, Symbol{1}, s1);
        t.set(s0, Symbol{1}, s1);
        CHECK_THROWS_AS(t.set(s0, Symbol{1}, s2), std::logic_error);
        CHECK(t.edges(s0).size() == 1);
    }

    TEST_CASE("epsilon grammar") {
        auto g = make_grammar("S -> %empty ;");
        auto a = build_lr0(g);
        CHECK(a.size() == 2);
        CHECK(a.is_final(StateId{0}));
        auto a1 = build_lr1(g);
        CHECK(a1.size() == 2);
    }

    TEST_CASE("text and JSON rendering") {
        auto g = g1();
        auto a = build_lr0(g);
        auto text = automaton_text(g, a);
        CHECK(text.find("P9 (final):") != std::string::npos);
        auto j = automaton_json(g, a);
        CHECK(j["format_version"] == 1);
        CHECK(j["states"].size() == 10);
        CHECK(automaton_json(g, a).dump() == j.dump());
    }
}
