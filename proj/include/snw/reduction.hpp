#pragma once

#include <utility>
#include <vector>

#include "snw/seymour.hpp"

namespace snw {

// One reduction event: either a single edge removal or a restriction to a
// vertex subset. Details are expressed in the labels of the digraph the step
// was applied to (restrictions relabel, so later steps use the new labels).
struct ReductionStep {
    enum class Kind { edge_removal, vertex_restriction };
    Kind kind;
    std::pair<int, int> edge{-1, -1};
    VertexSet kept;
};

struct ReductionTrace {
    Digraph initial;
    Digraph final_graph;
    Rational lambda;
    std::vector<ReductionStep> steps;
};

struct ReductionResult {
    Digraph graph;
    ReductionTrace trace;
};

namespace detail {

// Ascending (u, v) scan with restart: remove the first edge whose removal
// keeps the graph a lambda-counterexample, repeat until no edge qualifies.
inline Digraph edge_minimal_core(Digraph g, const Rational& lambda,
                                 std::vector<ReductionStep>* steps) {
    bool removed = true;
    while (removed) {
        removed = false;
        for (const auto& [u, v] : g.edges()) {
            Digraph candidate = g.without_edge(u, v);
            if (is_lambda_counterexample(candidate, lambda)) {
                g = std::move(candidate);
                if (steps) steps->push_back({ReductionStep::Kind::edge_removal, {u, v}, {}});
                removed = true;
                break;
            }
        }
    }
    return g;
}

}  // namespace detail

// Edge-minimal reduct: same vertex set, no single edge removal leaves a
// lambda-counterexample. Deterministic by the ascending-scan policy.
inline ReductionResult edge_minimal_reduce(const Digraph& g, const Rational& lambda) {
    if (!is_lambda_counterexample(g, lambda))
        fail(errc::not_a_counterexample, "input is not a lambda-counterexample");
    ReductionTrace trace{g, g, lambda, {}};
    trace.final_graph = detail::edge_minimal_core(g, lambda, &trace.steps);
    return {trace.final_graph, std::move(trace)};
}

// Alternates edge-minimal reduction with restriction to a strongly connected
// component that is itself a lambda-counterexample (smallest such component,
// ties broken by lexicographically least vertex set) until the result is
// strongly connected and edge-minimal. A sink component of the condensation
// keeps its first and second neighborhoods intact, so a qualifying component
// must exist; failing to find one is a hard error, not something to skip.
inline ReductionResult minimal_reduce(const Digraph& g, const Rational& lambda) {
    if (!is_lambda_counterexample(g, lambda))
        fail(errc::not_a_counterexample, "input is not a lambda-counterexample");
    ReductionTrace trace{g, g, lambda, {}};
    Digraph current = g;
    while (true) {
        current = detail::edge_minimal_core(current, lambda, &trace.steps);
        if (is_strongly_connected(current)) break;
        std::optional<VertexSet> pick;
        Digraph picked;
        for (const auto& comp : strongly_connected_components(current)) {
            Digraph sub = induced_subgraph(current, comp);
            if (!is_lambda_counterexample(sub, lambda)) continue;
            if (!pick || comp.count() < pick->count() ||
                (comp.count() == pick->count() && lex_less(comp, *pick))) {
                pick = comp;
                picked = std::move(sub);
            }
        }
        if (!pick)
            fail(errc::no_counterexample_component,
                 "no strongly connected component is a lambda-counterexample");
        trace.steps.push_back({ReductionStep::Kind::vertex_restriction, {-1, -1}, *pick});
        current = std::move(picked);
    }
    trace.final_graph = current;
    return {current, std::move(trace)};
}

// Replays a trace from its initial graph, checking that every intermediate
// digraph is still a lambda-counterexample and that the replay lands exactly
// on the recorded final graph.
inline bool trace_is_sound(const ReductionTrace& trace) {
    Digraph g = trace.initial;
    if (!is_lambda_counterexample(g, trace.lambda)) return false;
    for (const auto& step : trace.steps) {
        if (step.kind == ReductionStep::Kind::edge_removal) {
            if (!g.has_edge(step.edge.first, step.edge.second)) return false;
            g = g.without_edge(step.edge.first, step.edge.second);
        } else {
            g = induced_subgraph(g, step.kept);
        }
        if (!is_lambda_counterexample(g, trace.lambda)) return false;
    }
    return g == trace.final_graph;
}

}  // namespace snw
