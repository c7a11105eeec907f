#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "snw/distance.hpp"
#include "snw/seymour.hpp"

namespace snw {

// Labeled oriented graphs on n vertices are in bijection with base-3 numbers
// of C(n,2) digits: one digit per unordered pair (i, j), i < j, pairs in
// lexicographic order, digit 0 = no edge, 1 = i->j, 2 = j->i.

inline int pair_count(int n) { return n * (n - 1) / 2; }

// 3^C(n,2); a 64-bit value holds this up to n = 9.
inline std::uint64_t oriented_universe_size(int n) {
    if (n > 9)
        fail(errc::universe_too_large,
             "3^" + std::to_string(pair_count(n)) + " labeled graphs exceed the 64-bit index");
    std::uint64_t u = 1;
    for (int i = 0; i < pair_count(n); ++i) u *= 3;
    return u;
}

inline std::uint64_t tournament_universe_size(int n) {
    return std::uint64_t{1} << pair_count(n);
}

inline Digraph decode(int n, std::uint64_t index) {
    if (index >= oriented_universe_size(n))
        fail(errc::index_out_of_range, "graph index out of range for n = " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            switch (index % 3) {
                case 1: edges.emplace_back(i, j); break;
                case 2: edges.emplace_back(j, i); break;
                default: break;
            }
            index /= 3;
        }
    }
    return Digraph::from_edges(n, edges);
}

inline std::uint64_t encode(const Digraph& g) {
    oriented_universe_size(g.n());  // range guard
    std::uint64_t value = 0;
    std::uint64_t place = 1;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = i + 1; j < g.n(); ++j) {
            if (g.has_edge(i, j))
                value += place;
            else if (g.has_edge(j, i))
                value += 2 * place;
            place *= 3;
        }
    }
    return value;
}

// SplitMix64: the project's single PRNG. Fixed algorithm, fully determined
// by the 64-bit seed, identical output on every platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// For each unordered pair (i, j) in lexicographic order: one unit draw
// decides presence (< p), and if present one further draw's low bit decides
// direction (0 = i->j, 1 = j->i).
inline Digraph random_oriented(int n, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.next_unit() < p) {
                if (rng.next() & 1)
                    edges.emplace_back(j, i);
                else
                    edges.emplace_back(i, j);
            }
        }
    }
    return Digraph::from_edges(n, edges);
}

namespace detail {

// Shortest cycle with the lexicographically least starting vertex, walked by
// always taking the least-index out-neighbor that still completes the cycle.
inline std::vector<std::pair<int, int>> least_shortest_cycle(const Digraph& g,
                                                             const DistanceMatrix& m) {
    const int len = girth(m);
    int start = -1;
    for (int v = 0; v < g.n() && start < 0; ++v)
        if (m.at(v, v) == len) start = v;
    std::vector<std::pair<int, int>> cycle;
    int cur = start;
    for (int step = 1; step < len; ++step) {
        int next = -1;
        VertexSet{g.n(), g.out_mask(cur)}.for_each([&](int w) {
            if (next < 0 && w != start && m.at(w, start) == len - step) next = w;
        });
        cycle.emplace_back(cur, next);
        cur = next;
    }
    cycle.emplace_back(cur, start);
    return cycle;
}

}  // namespace detail

struct MFreeSample {
    Digraph graph;
    int repair_deletions = 0;
};

// Random oriented graph repaired to girth > m by repeatedly deleting one
// uniformly random edge of a shortest cycle. The repair biases the
// distribution over m-free graphs; the deletion count is reported so runs
// can disclose it.
inline MFreeSample random_m_free_sample(int n, double p, int m, std::uint64_t seed) {
    if (m < 2) fail(errc::bad_m, "m must be >= 2");
    MFreeSample out{random_oriented(n, p, seed), 0};
    SplitMix64 rng(seed ^ 0xA5A5A5A5A5A5A5A5ULL);
    while (true) {
        const DistanceMatrix dm = distances(out.graph);
        if (girth(dm) > m) break;
        const auto cycle = detail::least_shortest_cycle(out.graph, dm);
        const auto& [u, v] = cycle[static_cast<std::size_t>(rng.next() % cycle.size())];
        out.graph = out.graph.without_edge(u, v);
        ++out.repair_deletions;
    }
    return out;
}

inline Digraph random_m_free(int n, double p, int m, std::uint64_t seed) {
    return random_m_free_sample(n, p, m, seed).graph;
}

// Minimum encoding over all vertex relabelings. Two digraphs on the same
// vertex count are isomorphic iff their canonical indices are equal.
inline std::uint64_t canonical_form(const Digraph& g) {
    const int n = g.n();
    if (n > 8) fail(errc::too_large_for_canonical, "canonical form sweeps n! relabelings, n <= 8");
    std::vector<int> old_of_new(static_cast<std::size_t>(n));
    std::iota(old_of_new.begin(), old_of_new.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<std::uint64_t> place(static_cast<std::size_t>(pair_count(n)));
    std::uint64_t p3 = 1;
    for (auto& pl : place) {
        pl = p3;
        p3 *= 3;
    }
    do {
        std::uint64_t value = 0;
        int k = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j, ++k) {
                const int u = old_of_new[static_cast<std::size_t>(i)];
                const int v = old_of_new[static_cast<std::size_t>(j)];
                if (g.has_edge(u, v))
                    value += place[static_cast<std::size_t>(k)];
                else if (g.has_edge(v, u))
                    value += 2 * place[static_cast<std::size_t>(k)];
            }
        }
        best = std::min(best, value);
    } while (std::next_permutation(old_of_new.begin(), old_of_new.end()));
    return best;
}

// Conjunction of structural filters applied during enumeration.
struct Filter {
    bool tournament = false;
    bool in_regular = false;
    bool strongly_connected = false;
    std::optional<int> m_free;

    bool passes(const Digraph& g) const {
        if (tournament && g.edge_count() != pair_count(g.n())) return false;
        if (in_regular && !in_regular_check(g)) return false;
        if (strongly_connected && !is_strongly_connected(g)) return false;
        if (m_free && !is_m_free(g, *m_free)) return false;
        return true;
    }
};

struct GeneratorConfig {
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    Filter filter;
};

struct EnumStats {
    std::uint64_t universe = 0;
    std::uint64_t visited = 0;
    std::uint64_t passed = 0;
    std::int64_t elapsed_ms = 0;
};

namespace detail {

inline Digraph decode_tournament(int n, std::uint64_t index) {
    Digraph g(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (index & 1)
                edges.emplace_back(j, i);
            else
                edges.emplace_back(i, j);
            index >>= 1;
        }
    }
    return Digraph::from_edges(n, edges);
}

}  // namespace detail

// Visits indices [begin, end) of the labeled-graph universe (all oriented
// graphs, or all tournaments when the filter asks for them) in ascending
// order and calls visit(index, graph) for each graph passing the filter.
// Returns the number of filter passes.
template <class Visitor>
std::uint64_t enumerate_range(int n, const Filter& filter, std::uint64_t begin, std::uint64_t end,
                              Visitor&& visit) {
    std::uint64_t passed = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
        Digraph g = filter.tournament ? detail::decode_tournament(n, i) : decode(n, i);
        if (!filter.passes(g)) continue;
        ++passed;
        visit(i, g);
    }
    return passed;
}

// Full single-threaded sweep. The exhaustive base-3 universe is capped at
// n = 6 (3^15 graphs) and the tournament universe at n = 8 (2^28).
template <class Visitor>
EnumStats enumerate(const GeneratorConfig& cfg, Visitor&& visit) {
    const auto start = std::chrono::steady_clock::now();
    EnumStats stats;
    if (cfg.filter.tournament) {
        if (cfg.n > 8)
            fail(errc::universe_too_large, "tournament sweep needs 2^" +
                                               std::to_string(pair_count(cfg.n)) +
                                               " orientations; capped at n = 8");
        stats.universe = tournament_universe_size(cfg.n);
    } else {
        if (cfg.n > 6)
            fail(errc::universe_too_large, "full sweep needs 3^" +
                                               std::to_string(pair_count(cfg.n)) +
                                               " graphs; capped at n = 6");
        stats.universe = oriented_universe_size(cfg.n);
    }
    stats.visited = stats.universe;
    stats.passed = enumerate_range(cfg.n, cfg.filter, 0, stats.universe, visit);
    stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return stats;
}

}  // namespace snw
