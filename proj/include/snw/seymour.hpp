#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "snw/digraph.hpp"
#include "snw/distance.hpp"
#include "snw/rational.hpp"

namespace snw {

// First and second neighborhoods never touch the diagonal convention (the
// shortest cycle through a vertex has length >= 3), so d1 and d2 reduce to
// two rounds of mask unions. Everything conjecture-facing runs on this path.
inline std::uint64_t second_out_mask(const Digraph& g, int v) {
    const std::uint64_t first = g.out_mask(v);
    std::uint64_t reach = 0;
    for (std::uint64_t f = first; f != 0; f &= f - 1) reach |= g.out_mask(std::countr_zero(f));
    return reach & ~first & ~bit(v);
}

inline std::uint64_t second_in_mask(const Digraph& g, int v) {
    const std::uint64_t first = g.in_mask(v);
    std::uint64_t reach = 0;
    for (std::uint64_t f = first; f != 0; f &= f - 1) reach |= g.in_mask(std::countr_zero(f));
    return reach & ~first & ~bit(v);
}

// N_1^+(S) = union of the members' out-neighborhoods (a minimum distance of
// exactly 1 is an edge from some member).
inline std::uint64_t set_first_out_mask(const Digraph& g, std::uint64_t s) {
    std::uint64_t first = 0;
    for (std::uint64_t m = s; m != 0; m &= m - 1) first |= g.out_mask(std::countr_zero(m));
    return first;
}

// N_2^+(S) = (union of the members' second neighborhoods) minus N_1^+(S):
// minimum distance 2 means some member sits at distance 2 and none at 1.
inline std::uint64_t set_second_out_mask(const Digraph& g, std::uint64_t s) {
    std::uint64_t second = 0;
    for (std::uint64_t m = s; m != 0; m &= m - 1) second |= second_out_mask(g, std::countr_zero(m));
    return second & ~set_first_out_mask(g, s);
}

// A Seymour vertex: d1+(v) <= d2+(v). Sinks qualify with 0 <= 0.
inline VertexSet seymour_vertices(const Digraph& g) {
    VertexSet s{g.n(), 0};
    for (int v = 0; v < g.n(); ++v)
        if (g.out_degree(v) <= std::popcount(second_out_mask(g, v))) s.add(v);
    return s;
}

// Largest d2+(v)/d1+(v) over the vertices, as an exact rational. Any sink
// makes the quantity unbounded (nullopt). A digraph is a lambda-counterexample
// exactly when this value exists and is strictly below lambda.
inline std::optional<Rational> best_lambda(const Digraph& g) {
    std::optional<Rational> best;
    for (int v = 0; v < g.n(); ++v) {
        const int d1 = g.out_degree(v);
        if (d1 == 0) return std::nullopt;
        const Rational ratio(std::popcount(second_out_mask(g, v)), d1);
        if (!best || *best < ratio) best = ratio;
    }
    return best;
}

inline bool is_lambda_counterexample(const Digraph& g, const Rational& lambda) {
    if (!lambda.positive()) fail(errc::non_positive_lambda, "lambda must be positive");
    for (int v = 0; v < g.n(); ++v) {
        const int d1 = g.out_degree(v);
        const int d2 = std::popcount(second_out_mask(g, v));
        if (!lambda.scaled_greater_than(d2, d1)) return false;  // needs d2 < lambda*d1 strictly
    }
    return true;
}

namespace detail {

// Visits the k-subsets of [0, n) in lexicographic order of their ascending
// member lists. fn receives the bit mask; returning true stops the sweep.
template <class Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
    if (k > n) return false;
    std::array<int, max_vertices> idx{};
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i = 0; i < k; ++i) mask |= bit(idx[i]);
        if (fn(mask)) return true;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) return false;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

// (cardinality, lexicographic) sweep over subset sizes [1, max_card].
template <class Fn>
bool sweep_subsets(int n, int max_card, Fn&& fn) {
    for (int k = 1; k <= max_card; ++k)
        if (for_each_combination(n, k, fn)) return true;
    return false;
}

}  // namespace detail

enum class SearchMode { exact, greedy };

// Witness for the subset form of the conjecture: a non-empty proper S with
// d1+(S) <= d2+(S). Exact mode sweeps all proper subsets in (cardinality,
// lexicographic) order, so the reported witness is canonical. Greedy mode is
// a heuristic that may return nullopt on graphs that do have a witness, but
// every set it returns has been checked against the exact definitions.
inline std::optional<VertexSet> subset_seymour_search(const Digraph& g,
                                                      SearchMode mode = SearchMode::exact) {
    const int n = g.n();
    if (n < 2) fail(errc::bad_vertex_count, "subset search needs at least two vertices");
    const auto qualifies = [&](std::uint64_t s) {
        return std::popcount(set_first_out_mask(g, s)) <= std::popcount(set_second_out_mask(g, s));
    };
    if (mode == SearchMode::exact) {
        if (n > 24) fail(errc::too_large_for_exact, "exact subset sweep capped at n = 24");
        std::optional<VertexSet> found;
        detail::sweep_subsets(n, n - 1, [&](std::uint64_t mask) {
            if (!qualifies(mask)) return false;
            found = VertexSet{n, mask};
            return true;
        });
        return found;
    }
    // Grow from each singleton, each step adding the vertex that maximizes
    // d2+(S) - d1+(S); stop as soon as a qualifying proper subset appears.
    for (int seed = 0; seed < n; ++seed) {
        std::uint64_t s = bit(seed);
        while (true) {
            if (qualifies(s)) return VertexSet{n, s};
            if (std::popcount(s) >= n - 1) break;
            int best_v = -1;
            int best_score = 0;
            for (int v = 0; v < n; ++v) {
                if (s & bit(v)) continue;
                const std::uint64_t t = s | bit(v);
                const int score = std::popcount(set_second_out_mask(g, t)) -
                                  std::popcount(set_first_out_mask(g, t));
                if (best_v < 0 || score > best_score) {
                    best_v = v;
                    best_score = score;
                }
            }
            s |= bit(best_v);
        }
    }
    return std::nullopt;
}

// Checks the subset inequality d2+(S) < lambda * d1+(S) over every non-empty
// S (including S = V) whose first neighborhood is non-empty. Returns nullopt
// when all pass, otherwise the first violating subset in (cardinality,
// lexicographic) order.
inline std::optional<VertexSet> subset_inequality_check(const Digraph& g, const Rational& lambda) {
    if (!lambda.positive()) fail(errc::non_positive_lambda, "lambda must be positive");
    const int n = g.n();
    if (n > 24) fail(errc::too_large_for_exact, "exhaustive subset sweep capped at n = 24");
    std::optional<VertexSet> witness;
    detail::sweep_subsets(n, n, [&](std::uint64_t mask) {
        const std::uint64_t first = set_first_out_mask(g, mask);
        if (first == 0) return false;
        const int d2 = std::popcount(set_second_out_mask(g, mask));
        if (lambda.scaled_greater_than(d2, std::popcount(first))) return false;
        witness = VertexSet{n, mask};
        return true;
    });
    return witness;
}

// Diagnostic from the main lemma's proof: among the subsets T of N_1^+(S)
// with lambda*|T| > |N_1^+(T) \ S|, pick one of maximum cardinality
// (lexicographic tie-break). Nullopt when no subset qualifies.
inline std::optional<VertexSet> lemma_T_witness(const Digraph& g, const VertexSet& s,
                                                const Rational& lambda) {
    if (!lambda.positive()) fail(errc::non_positive_lambda, "lambda must be positive");
    const std::uint64_t first = set_first_out_mask(g, s.bits);
    if (first == 0) fail(errc::empty_first_neighborhood, "N_1^+(S) is empty");
    const std::vector<int> pool = VertexSet{g.n(), first}.members();
    const int p = static_cast<int>(pool.size());
    if (p > 24) fail(errc::too_large_for_exact, "T sweep capped at |N_1^+(S)| = 24");
    for (int k = p; k >= 1; --k) {
        std::optional<VertexSet> found;
        detail::for_each_combination(p, k, [&](std::uint64_t pool_mask) {
            std::uint64_t t = 0;
            VertexSet{p, pool_mask}.for_each([&](int i) { t |= bit(pool[i]); });
            const int escape = std::popcount(set_first_out_mask(g, t) & ~s.bits);
            if (!lambda.scaled_greater_than(escape, std::popcount(t))) return false;
            found = VertexSet{g.n(), t};
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

// d_1, d_2, ... down to the last non-zero entry, in both directions.
struct NeighborhoodProfile {
    std::vector<int> out_sizes;
    std::vector<int> in_sizes;
};

inline NeighborhoodProfile vertex_profile(const DistanceMatrix& m, int v) {
    NeighborhoodProfile p;
    for (int k = 1; k <= m.n(); ++k) {
        int out = 0;
        int in = 0;
        for (int u = 0; u < m.n(); ++u) {
            if (m.at(v, u) == k) ++out;
            if (m.at(u, v) == k) ++in;
        }
        if (out > 0) {
            p.out_sizes.resize(static_cast<std::size_t>(k), 0);
            p.out_sizes[static_cast<std::size_t>(k) - 1] = out;
        }
        if (in > 0) {
            p.in_sizes.resize(static_cast<std::size_t>(k), 0);
            p.in_sizes[static_cast<std::size_t>(k) - 1] = in;
        }
    }
    return p;
}

inline NeighborhoodProfile set_profile(const DistanceMatrix& m, const VertexSet& s) {
    NeighborhoodProfile p;
    for (int k = 1; k <= m.n(); ++k) {
        const int out = set_kth_out_neighborhood(m, s, k).count();
        const int in = set_kth_in_neighborhood(m, s, k).count();
        if (out > 0) {
            p.out_sizes.resize(static_cast<std::size_t>(k), 0);
            p.out_sizes[static_cast<std::size_t>(k) - 1] = out;
        }
        if (in > 0) {
            p.in_sizes.resize(static_cast<std::size_t>(k), 0);
            p.in_sizes[static_cast<std::size_t>(k) - 1] = in;
        }
    }
    return p;
}

// Shrinking-chain report for one vertex: whether d_{k+1} < lambda * d_k holds
// along the whole out-profile, the size of the union U of the out
// neighborhoods, and the triangular bound |U| <= d1*(d1+1)/2 that the chain
// implies at lambda = 1.
struct ShrinkageResult {
    NeighborhoodProfile profile;
    bool chain_holds = true;
    int union_size = 0;
    bool within_binom_bound = true;
};

inline ShrinkageResult shrinkage_profile(const Digraph& g, int v, const Rational& lambda) {
    ShrinkageResult r;
    r.profile = vertex_profile(distances(g), v);
    const auto& out = r.profile.out_sizes;
    for (std::size_t k = 0; k < out.size(); ++k) {
        const int next = k + 1 < out.size() ? out[k + 1] : 0;
        if (!lambda.scaled_greater_than(next, out[k])) r.chain_holds = false;
        r.union_size += out[k];
    }
    const int delta = out.empty() ? 0 : out[0];
    r.within_binom_bound = r.union_size <= delta * (delta + 1) / 2;
    return r;
}

// In-regularity and the deficient set from the regular-graph argument.
inline std::optional<int> in_regular_check(const Digraph& g) {
    const int d = g.in_degree(0);
    for (int v = 1; v < g.n(); ++v)
        if (g.in_degree(v) != d) return std::nullopt;
    return d;
}

inline VertexSet deficient_in_vertices(const Digraph& g) {
    VertexSet s{g.n(), 0};
    for (int v = 0; v < g.n(); ++v)
        if (g.in_degree(v) > std::popcount(second_in_mask(g, v))) s.add(v);
    return s;
}

// Per-graph summary used by the analyze command and the campaign reports.
struct RatioEntry {
    int v;
    int d1;
    int d2;
};

struct SeymourReport {
    int n = 0;
    int girth = unreachable_dist;
    VertexSet seymour;
    std::vector<RatioEntry> ratios;
    std::optional<Rational> best;  // nullopt = unbounded (some sink)
    std::optional<VertexSet> subset_witness;
};

inline SeymourReport analyze(const Digraph& g) {
    SeymourReport r;
    r.n = g.n();
    r.girth = girth(g);
    r.seymour = seymour_vertices(g);
    for (int v = 0; v < g.n(); ++v)
        r.ratios.push_back({v, g.out_degree(v), std::popcount(second_out_mask(g, v))});
    r.best = best_lambda(g);
    if (g.n() >= 2)
        r.subset_witness =
            subset_seymour_search(g, g.n() <= 24 ? SearchMode::exact : SearchMode::greedy);
    return r;
}

}  // namespace snw
