#include <doctest.h>

#include "snw/enumeration.hpp"
#include "snw/reduction.hpp"

using namespace snw;

namespace {

Digraph c3() { return Digraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}); }
Digraph c5() { return Digraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
Digraph two_c3() {
    return Digraph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

}  // namespace

TEST_CASE("the triangle is already edge-minimal at lambda 2") {
    // removing any of the three edges creates a sink, so no removal survives
    const Rational lam(2, 1);
    for (const auto& [u, v] : c3().edges())
        CHECK_FALSE(is_lambda_counterexample(c3().without_edge(u, v), lam));
    const auto r = edge_minimal_reduce(c3(), lam);
    CHECK(r.graph == c3());
    CHECK(r.trace.steps.empty());
    CHECK(trace_is_sound(r.trace));
}

TEST_CASE("extra in-edges into the cycle survive only if the source keeps its ratio") {
    const Rational lam(2, 1);
    // one feeder edge: removing it would make vertex 3 a sink, so it stays
    const Digraph one_feed = Digraph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}});
    REQUIRE(is_lambda_counterexample(one_feed, lam));
    CHECK(edge_minimal_reduce(one_feed, lam).graph == one_feed);

    // two feeder edges: (3,0) goes (vertex 3 still has 1 < 2*1), then (3,1) must stay
    const Digraph two_feed = Digraph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}});
    REQUIRE(is_lambda_counterexample(two_feed, lam));
    const auto r = edge_minimal_reduce(two_feed, lam);
    CHECK(r.graph == Digraph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {3, 1}}));
    REQUIRE(r.trace.steps.size() == 1);
    CHECK(r.trace.steps[0].edge == std::pair<int, int>{3, 0});
}

TEST_CASE("edge-minimal reduction is idempotent") {
    const Rational lam(3, 2);
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const Digraph g = random_oriented(4 + static_cast<int>(seed % 4), 0.6, seed);
        if (!is_lambda_counterexample(g, lam)) continue;
        const auto once = edge_minimal_reduce(g, lam);
        CHECK(trace_is_sound(once.trace));
        const auto twice = edge_minimal_reduce(once.graph, lam);
        CHECK(twice.graph == once.graph);
        CHECK(twice.trace.steps.empty());
    }
}

TEST_CASE("reduction rejects graphs that are not counterexamples") {
    CHECK_THROWS_AS(edge_minimal_reduce(c3(), Rational(1, 1)), Error);
    CHECK_THROWS_AS(minimal_reduce(c3(), Rational(1, 1)), Error);
    try {
        minimal_reduce(c3(), Rational(1, 1));
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_a_counterexample);
    }
}

TEST_CASE("minimal reduction picks one strongly connected component") {
    const Rational lam(2, 1);
    const auto pair = minimal_reduce(two_c3(), lam);
    CHECK(pair.graph == c3());
    REQUIRE(pair.trace.steps.size() == 1);
    CHECK(pair.trace.steps[0].kind == ReductionStep::Kind::vertex_restriction);
    CHECK(pair.trace.steps[0].kept == VertexSet::of(6, {0, 1, 2}));  // lexicographic tie-break
    CHECK(trace_is_sound(pair.trace));

    CHECK(minimal_reduce(c3(), lam).graph == c3());
    CHECK(minimal_reduce(c5(), lam).graph == c5());
}

TEST_CASE("minimal reduction output invariants over a random pool") {
    for (const Rational lam : {Rational(3, 2), Rational(2, 1), Rational(3, 1)}) {
        int reduced = 0;
        for (std::uint64_t seed = 0; seed < 500 && reduced < 40; ++seed) {
            const Digraph g = random_oriented(5 + static_cast<int>(seed % 4), 0.55, seed * 7 + 1);
            if (!is_lambda_counterexample(g, lam)) continue;
            ++reduced;
            const auto r = minimal_reduce(g, lam);
            CHECK(trace_is_sound(r.trace));
            CHECK(is_lambda_counterexample(r.graph, lam));
            CHECK(is_strongly_connected(r.graph));
            CHECK(edge_minimal_reduce(r.graph, lam).graph == r.graph);  // fixpoint
            // the main lemma's subset inequality holds on the reduct
            CHECK_FALSE(subset_inequality_check(r.graph, lam).has_value());
        }
        CHECK(reduced > 0);  // the pool actually exercised this lambda
    }
}
