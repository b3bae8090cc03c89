#include "lrgen/symbolic.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lrgen {

Variable EquationSystem::fresh(LookaheadSet init, bool is_reducing_var, Owner who) {
    Variable x{static_cast<std::uint32_t>(rhs.size())};
    rhs.push_back(std::move(init));
    reducing.push_back(is_reducing_var);
    owner.push_back(who);
    return x;
}

std::vector<Variable> EquationSystem::variables() const {
    std::vector<Variable> out;
    for (std::uint32_t i = 0; i < rhs.size(); ++i) out.push_back(Variable{i});
    return out;
}

std::vector<Variable> EquationSystem::reducing_variables() const {
    std::vector<Variable> out;
    for (std::uint32_t i = 0; i < rhs.size(); ++i)
        if (reducing[i]) out.push_back(Variable{i});
    return out;
}

std::vector<Variable> EquationSystem::bypassing_variables() const {
    std::vector<Variable> out;
    for (std::uint32_t i = 0; i < rhs.size(); ++i)
        if (!reducing[i]) out.push_back(Variable{i});
    return out;
}

SymbolicAutomaton build_symbolic(const Grammar& g) {
    if (!g.augmented()) throw GrammarError(GrammarErrc::not_augmented, "automaton construction needs G'");
    SymbolicAutomaton out;
    auto& aut = out.automaton;
    auto& es = out.equations;
    aut.kind = AutomatonKind::symbolic;
    aut.transitions = TransitionTable(g.symbol_count());

    const Item0 initial{0, 0};
    Variable x0 = es.fresh({Lookahead::end()}, false, {StateId{0}, initial});
    std::map<std::vector<Item0>, StateId> by_projection;
    by_projection.emplace(std::vector<Item0>{initial}, aut.transitions.add_state());
    aut.states.push_back(closure1(Item1Set{Item1{initial, {Lookahead::var(x0)}}}, g));

    for (std::uint32_t i = 0; i < aut.states.size(); ++i) {
        StateId from{i};
        for (auto y : outgoing_symbols(aut.states[i], g)) {
            Item1Set tmp = goto_kernel1(aut.states[i], y, g);
            auto key = project(tmp).sorted();
            if (auto it = by_projection.find(key); it != by_projection.end()) {
                const auto& target = aut.states[it->second.index];
                for (const auto& item : tmp) {
                    const Item1* k = target.find(item.core);
                    if (!k || k->la.size() != 1 || !k->la.has_variables())
                        throw std::logic_error("symbolic kernel item without its variable");
                    es.rhs[k->la.begin()->index].merge(item.la);
                }
                aut.transitions.set(from, y, it->second);
                continue;
            }
            StateId to = aut.transitions.add_state();
            for (auto& item : tmp) {
                Variable x = es.fresh(item.la, is_reducing(item.core, g), {to, item.core});
                item.la = LookaheadSet{Lookahead::var(x)};
            }
            by_projection.emplace(std::move(key), to);
            aut.states.push_back(closure1(tmp, g));
            aut.transitions.set(from, y, to);
        }
    }

    aut.final.resize(aut.states.size());
    for (std::size_t i = 0; i < aut.states.size(); ++i) aut.final[i] = !reducing_items(aut.states[i], g).empty();
    return out;
}

Variable ReducedSystem::class_of(Variable x) const {
    if (x.index >= rep.size() || !rep[x.index])
        throw std::logic_error(format_variable(x) + " has no class representative");
    return *rep[x.index];
}

ReducedSystem reduce_system(const EquationSystem& es) {
    ReducedSystem rs;
    rs.rep.resize(es.size());

    for (auto x : es.bypassing_variables()) {
        LookaheadSet delta = es.look(x);
        delta.erase(Lookahead::var(x));
        if (delta.size() == 1 && delta.has_variables()) {
            Variable alias = delta.begin()->as_variable();
            if (!rs.rep[alias.index])
                throw std::logic_error(format_variable(x) + " refers to " + format_variable(alias) +
                                       " before its class is known");
            rs.rep[x.index] = rs.rep[alias.index];
        } else {
            rs.rep[x.index] = x;
            rs.rvars.push_back(x);
        }
    }

    for (auto x : rs.rvars) {
        const auto& delta = es.look(x);
        LookaheadSet cleaned = delta.ground();
        for (auto v : delta.variables()) {
            if (es.is_reducing(v))
                throw std::logic_error("reducing variable " + format_variable(v) + " occurs on a right-hand side");
            cleaned.insert(Lookahead::var(rs.class_of(v)));
        }
        cleaned.erase(Lookahead::var(x));
        rs.equations.emplace(x, std::move(cleaned));
    }
    return rs;
}

std::optional<std::size_t> DependencyGraph::position(Variable x) const {
    auto it = std::find(vertices.begin(), vertices.end(), x);
    if (it == vertices.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

DependencyGraph build_dependency_graph(const ReducedSystem& rs) {
    DependencyGraph dg;
    std::map<Variable, std::size_t> pos;
    for (auto x : rs.rvars) {
        pos.emplace(x, dg.vertices.size());
        dg.vertices.push_back(x);
    }
    dg.edges.resize(dg.vertices.size());
    dg.init.resize(dg.vertices.size());
    for (std::size_t i = 0; i < dg.vertices.size(); ++i) {
        auto eq = rs.equations.find(dg.vertices[i]);
        if (eq == rs.equations.end()) throw std::logic_error("representative without a reduced equation");
        dg.init[i] = eq->second.ground();
        for (auto v : eq->second.variables()) {
            auto it = pos.find(v);
            if (it == pos.end()) throw std::logic_error("edge to a non-representative variable");
            dg.edges[i].push_back(it->second);
        }
    }
    return dg;
}

const LookaheadSet& Valuation::at(Variable x) const {
    auto it = values_.find(x);
    if (it == values_.end()) throw std::out_of_range(format_variable(x) + " has no value");
    return it->second;
}

Valuation evaluate(const DependencyGraph& dg) {
    constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();
    const std::size_t n = dg.size();
    std::vector<std::size_t> scc(n, 0);
    std::vector<LookaheadSet> val(n);
    std::vector<std::size_t> stack;

    // Explicit frames stand in for the recursive traverse().
    struct Frame {
        std::size_t vertex;
        std::size_t depth;
        std::size_t next_edge = 0;
        bool descended = false;
    };
    std::vector<Frame> frames;
    auto enter = [&](std::size_t v) {
        stack.push_back(v);
        std::size_t depth = stack.size();
        scc[v] = depth;
        val[v] = dg.init[v];
        frames.push_back(Frame{v, depth});
    };

    for (std::size_t root = 0; root < n; ++root) {
        if (scc[root] != 0) continue;
        enter(root);
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& out = dg.edges[f.vertex];
            if (f.next_edge < out.size()) {
                std::size_t w = out[f.next_edge];
                if (!f.descended && scc[w] == 0) {
                    f.descended = true;
                    enter(w);
                    continue;
                }
                scc[f.vertex] = std::min(scc[f.vertex], scc[w]);
                val[f.vertex].merge(val[w]);
                ++f.next_edge;
                f.descended = false;
                continue;
            }
            if (scc[f.vertex] == f.depth) {
                for (;;) {
                    std::size_t top = stack.back();
                    scc[top] = kInfinity;
                    val[top] = val[f.vertex];
                    stack.pop_back();
                    if (top == f.vertex) break;
                }
            }
            frames.pop_back();
        }
    }

    Valuation out;
    for (std::size_t i = 0; i < n; ++i) out.set(dg.vertices[i], std::move(val[i]));
    return out;
}

Valuation actualize(const EquationSystem& es, const ReducedSystem& rs, const Valuation& partial) {
    Valuation out = partial;
    for (auto x : es.bypassing_variables())
        if (!out.has(x)) out.set(x, partial.at(rs.class_of(x)));

    for (auto x : es.reducing_variables()) {
        const auto& delta = es.look(x);
        LookaheadSet value = delta.ground();
        for (auto v : delta.variables()) {
            if (!out.has(v))
                throw std::logic_error("dangling variable " + format_variable(v) + " in look(" + format_variable(x) + ")");
            value.merge(out.at(v));
        }
        out.set(x, std::move(value));
    }
    return out;
}

SymbolicLalr solve_symbolic(const Grammar& g) {
    SymbolicLalr out;
    out.symbolic = build_symbolic(g);
    out.reduced = reduce_system(out.symbolic.equations);
    out.graph = build_dependency_graph(out.reduced);
    out.values = actualize(out.symbolic.equations, out.reduced, evaluate(out.graph));
    return out;
}

}  // namespace lrgen
