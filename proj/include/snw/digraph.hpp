#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "snw/error.hpp"

namespace snw {

// Single-word bit masks cap the vertex universe at 64. Every desk-scale
// experiment runs at n <= 12; widening to multi-word masks would only touch
// VertexSet and the two adjacency arrays below.
inline constexpr int max_vertices = 64;

inline constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// A subset of a fixed vertex universe [0, n).
struct VertexSet {
    int n = 0;
    std::uint64_t bits = 0;

    static VertexSet empty(int n) { return {n, 0}; }
    static VertexSet full(int n) {
        return {n, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }
    static VertexSet single(int n, int v) { return {n, bit(v)}; }
    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s{n, 0};
        for (int v : vs) s.add(v);
        return s;
    }

    bool contains(int v) const { return (bits >> v) & 1; }
    void add(int v) { bits |= bit(v); }
    void remove(int v) { bits &= ~bit(v); }
    int count() const { return std::popcount(bits); }
    bool none() const { return bits == 0; }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t m = bits; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t m = bits; m != 0; m &= m - 1) fn(std::countr_zero(m));
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n == b.n && a.bits == b.bits;
    }
};

// Lexicographic order on the ascending member lists, e.g. {0,3} < {1,2} and
// {0} < {0,1}. This is the tie-break order used wherever a canonical subset
// has to be reported.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
    std::uint64_t x = a.bits;
    std::uint64_t y = b.bits;
    while (x != 0 && y != 0) {
        const int va = std::countr_zero(x);
        const int vb = std::countr_zero(y);
        if (va != vb) return va < vb;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

// Oriented simple digraph: no loops, no two-cycles. Adjacency is one out-mask
// and one in-mask per vertex; the in side is kept as the exact transpose of
// the out side at all times. Immutable in practice: edits return copies.
class Digraph {
  public:
    Digraph() = default;

    explicit Digraph(int n) : n_(n) {
        if (n < 1 || n > max_vertices)
            fail(errc::bad_vertex_count, "vertex count must be in [1, 64], got " + std::to_string(n));
    }

    static Digraph from_edges(int n, std::span<const std::pair<int, int>> edges) {
        Digraph g(n);
        for (const auto& [u, v] : edges) g.add_edge_checked(u, v);
        return g;
    }

    static Digraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    int n() const { return n_; }

    bool has_edge(int u, int v) const { return (out_[u] >> v) & 1; }

    std::uint64_t out_mask(int v) const { return out_[v]; }
    std::uint64_t in_mask(int v) const { return in_[v]; }

    VertexSet out_neighbors(int v) const { return {n_, out_[v]}; }
    VertexSet in_neighbors(int v) const { return {n_, in_[v]}; }

    int out_degree(int v) const { return std::popcount(out_[v]); }
    int in_degree(int v) const { return std::popcount(in_[v]); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += out_degree(v);
        return total;
    }

    // Edges in ascending (u, v) order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < n_; ++u)
            VertexSet{n_, out_[u]}.for_each([&](int v) { out.emplace_back(u, v); });
        return out;
    }

    Digraph reversed() const {
        Digraph g(n_);
        g.out_ = in_;
        g.in_ = out_;
        return g;
    }

    Digraph without_edge(int u, int v) const {
        Digraph g = *this;
        g.out_[u] &= ~bit(v);
        g.in_[v] &= ~bit(u);
        return g;
    }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.out_[v] != b.out_[v]) return false;
        return true;
    }

  private:
    void add_edge_checked(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            fail(errc::vertex_out_of_range,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," +
                     std::to_string(n_) + ")");
        if (u == v) fail(errc::loop_edge, "loop at vertex " + std::to_string(u));
        if (has_edge(v, u))
            fail(errc::two_cycle,
                 "edges (" + std::to_string(u) + "," + std::to_string(v) + ") and reverse both present");
        if (has_edge(u, v))
            fail(errc::duplicate_edge,
                 "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        out_[u] |= bit(v);
        in_[v] |= bit(u);
    }

    int n_ = 0;
    std::array<std::uint64_t, max_vertices> out_{};
    std::array<std::uint64_t, max_vertices> in_{};
};

// Subgraph induced by S, vertices relabeled in ascending original order.
inline Digraph induced_subgraph(const Digraph& g, const VertexSet& s) {
    if (s.none()) fail(errc::empty_set, "induced subgraph of empty set");
    const std::vector<int> keep = s.members();
    std::array<int, max_vertices> relabel{};
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) relabel[keep[i]] = i;
    Digraph out(static_cast<int>(keep.size()));
    std::vector<std::pair<int, int>> edges;
    for (int u : keep)
        VertexSet{g.n(), g.out_mask(u) & s.bits}.for_each(
            [&](int v) { edges.emplace_back(relabel[u], relabel[v]); });
    return Digraph::from_edges(static_cast<int>(keep.size()), edges);
}

namespace detail {

// Tarjan, roots taken in ascending vertex order. Components complete only
// after everything reachable from them has completed, so the emission order
// is a reverse topological order of the condensation.
struct TarjanState {
    const Digraph& g;
    std::array<int, max_vertices> index{};
    std::array<int, max_vertices> low{};
    std::uint64_t on_stack = 0;
    std::vector<int> stack;
    int next_index = 1;  // 0 means unvisited
    std::vector<VertexSet> components;

    explicit TarjanState(const Digraph& graph) : g(graph) {}

    void visit(int v) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack |= bit(v);
        VertexSet{g.n(), g.out_mask(v)}.for_each([&](int w) {
            if (index[w] == 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack & bit(w)) {
                low[v] = std::min(low[v], index[w]);
            }
        });
        if (low[v] == index[v]) {
            VertexSet comp{g.n(), 0};
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack &= ~bit(w);
                comp.add(w);
            } while (w != v);
            components.push_back(comp);
        }
    }
};

}  // namespace detail

inline std::vector<VertexSet> strongly_connected_components(const Digraph& g) {
    detail::TarjanState state(g);
    for (int v = 0; v < g.n(); ++v)
        if (state.index[v] == 0) state.visit(v);
    return state.components;
}

inline bool is_strongly_connected(const Digraph& g) {
    return strongly_connected_components(g).size() == 1;
}

}  // namespace snw
