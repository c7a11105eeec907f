#include <doctest.h>

#include <functional>

#include "snw/dg_io.hpp"
#include "snw/digraph.hpp"

using namespace snw;

namespace {

Digraph c3() { return Digraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}); }
Digraph t3() { return Digraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}); }
Digraph two_c3() {
    return Digraph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return errc::parse_error;
}

}  // namespace

TEST_CASE("from_edges builds the directed triangle") {
    const Digraph g = c3();
    CHECK(g.n() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 0));
}

TEST_CASE("from_edges rejects malformed input") {
    CHECK(code_of([] { Digraph::from_edges(3, {{0, 1}, {1, 0}}); }) == errc::two_cycle);
    CHECK(code_of([] { Digraph::from_edges(3, {{1, 1}}); }) == errc::loop_edge);
    CHECK(code_of([] { Digraph::from_edges(3, {{0, 1}, {0, 1}}); }) == errc::duplicate_edge);
    CHECK(code_of([] { Digraph::from_edges(3, {{0, 3}}); }) == errc::vertex_out_of_range);
    CHECK(code_of([] { Digraph::from_edges(3, {{-1, 0}}); }) == errc::vertex_out_of_range);
    CHECK(code_of([] { Digraph(0); }) == errc::bad_vertex_count);
    CHECK(code_of([] { Digraph(65); }) == errc::bad_vertex_count);
}

TEST_CASE("in-adjacency is the transpose of out-adjacency") {
    const Digraph g = Digraph::from_edges(5, {{0, 1}, {0, 2}, {3, 1}, {4, 0}, {2, 4}});
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            CHECK(((g.out_mask(u) >> v) & 1) == ((g.in_mask(v) >> u) & 1));
    const Digraph r = g.reversed();
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) CHECK(g.has_edge(u, v) == r.has_edge(v, u));
}

TEST_CASE("edges come out in ascending order") {
    const Digraph g = Digraph::from_edges(4, {{3, 0}, {1, 2}, {0, 2}, {0, 1}});
    const std::vector<std::pair<int, int>> want = {{0, 1}, {0, 2}, {1, 2}, {3, 0}};
    CHECK(g.edges() == want);
}

TEST_CASE("induced subgraph relabels ascending") {
    CHECK(induced_subgraph(c3(), VertexSet::of(3, {0, 1})) ==
          Digraph::from_edges(2, {{0, 1}}));
    CHECK(induced_subgraph(c3(), VertexSet::full(3)) == c3());
    CHECK(induced_subgraph(two_c3(), VertexSet::of(6, {0, 1, 2})) == c3());
    // second component relabels 3,4,5 -> 0,1,2
    CHECK(induced_subgraph(two_c3(), VertexSet::of(6, {3, 4, 5})) == c3());
    CHECK(code_of([] { induced_subgraph(c3(), VertexSet::empty(3)); }) == errc::empty_set);
}

TEST_CASE("strong connectivity basics") {
    CHECK(is_strongly_connected(c3()));
    CHECK_FALSE(is_strongly_connected(t3()));
    CHECK_FALSE(is_strongly_connected(two_c3()));

    const auto t3_comps = strongly_connected_components(t3());
    REQUIRE(t3_comps.size() == 3);
    // reverse topological: the sink {2} closes first
    CHECK(t3_comps[0] == VertexSet::of(3, {2}));
    CHECK(t3_comps[1] == VertexSet::of(3, {1}));
    CHECK(t3_comps[2] == VertexSet::of(3, {0}));

    const auto pair_comps = strongly_connected_components(two_c3());
    REQUIRE(pair_comps.size() == 2);
    CHECK(pair_comps[0] == VertexSet::of(6, {0, 1, 2}));
    CHECK(pair_comps[1] == VertexSet::of(6, {3, 4, 5}));
}

TEST_CASE("component order is reverse topological on every 4-vertex digraph") {
    // cross-component edges must point from later components to earlier ones
    for (std::uint64_t index = 0; index < 729; ++index) {
        Digraph g(4);
        {
            std::uint64_t x = index;
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    if (x % 3 == 1) edges.emplace_back(i, j);
                    if (x % 3 == 2) edges.emplace_back(j, i);
                    x /= 3;
                }
            g = Digraph::from_edges(4, edges);
        }
        const auto comps = strongly_connected_components(g);
        std::array<int, 4> comp_of{};
        for (std::size_t c = 0; c < comps.size(); ++c)
            comps[c].for_each([&](int v) { comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c); });
        for (const auto& [u, v] : g.edges())
            if (comp_of[static_cast<std::size_t>(u)] != comp_of[static_cast<std::size_t>(v)])
                CHECK(comp_of[static_cast<std::size_t>(u)] > comp_of[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("vertex set lexicographic order") {
    CHECK(lex_less(VertexSet::of(4, {0, 3}), VertexSet::of(4, {1, 2})));
    CHECK_FALSE(lex_less(VertexSet::of(4, {1, 2}), VertexSet::of(4, {0, 3})));
    CHECK(lex_less(VertexSet::of(4, {0}), VertexSet::of(4, {0, 1})));
    CHECK_FALSE(lex_less(VertexSet::of(4, {2}), VertexSet::of(4, {2})));
    CHECK(VertexSet::of(5, {4, 1}).members() == std::vector<int>{1, 4});
}
