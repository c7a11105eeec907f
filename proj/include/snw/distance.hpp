#pragma once

#include <algorithm>
#include <array>
#include <cstdint>

#include "snw/digraph.hpp"

namespace snw {

// Unreachable sentinel: strictly greater than any finite distance (<= 64) so
// min-aggregation needs no branching, small enough that sentinel + 1 is safe.
inline constexpr int unreachable_dist = 1 << 20;

inline bool reachable(int d) { return d < unreachable_dist; }

// All-pairs shortest directed path lengths. The diagonal is not zero: it is
// the length of the shortest directed cycle through the vertex (unreachable
// if the vertex lies on no cycle), so every finite entry is >= 1 and every
// finite diagonal entry is >= 3.
class DistanceMatrix {
  public:
    explicit DistanceMatrix(int n) : n_(n) {}

    int n() const { return n_; }

    int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    void set(int u, int v, int dist) { d_[static_cast<std::size_t>(u) * n_ + v] = dist; }

  private:
    int n_;
    std::array<int, static_cast<std::size_t>(max_vertices) * max_vertices> d_;
};

// BFS from every source over bit-mask frontiers, then the diagonal as
// 1 + min over out-neighbors u of dist(u, v).
inline DistanceMatrix distances(const Digraph& g) {
    const int n = g.n();
    DistanceMatrix m(n);
    for (int s = 0; s < n; ++s) {
        for (int v = 0; v < n; ++v) m.set(s, v, unreachable_dist);
        std::uint64_t visited = bit(s);
        std::uint64_t frontier = g.out_mask(s);
        int level = 1;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
                const int v = std::countr_zero(f);
                m.set(s, v, level);
                next |= g.out_mask(v);
            }
            visited |= frontier;
            frontier = next & ~visited;
            ++level;
        }
    }
    for (int v = 0; v < n; ++v) {
        int best = unreachable_dist;
        VertexSet{n, g.out_mask(v)}.for_each([&](int u) { best = std::min(best, m.at(u, v)); });
        m.set(v, v, reachable(best) ? best + 1 : unreachable_dist);
    }
    return m;
}

// N_k^+(v): vertices at directed distance exactly k from v. May contain v
// itself once k reaches the length of the shortest cycle through v.
inline VertexSet kth_out_neighborhood(const DistanceMatrix& m, int v, int k) {
    VertexSet s{m.n(), 0};
    for (int u = 0; u < m.n(); ++u)
        if (m.at(v, u) == k) s.add(u);
    return s;
}

inline VertexSet kth_in_neighborhood(const DistanceMatrix& m, int v, int k) {
    VertexSet s{m.n(), 0};
    for (int u = 0; u < m.n(); ++u)
        if (m.at(u, v) == k) s.add(u);
    return s;
}

// N_k^+(S): vertices u with min over s in S of dist(s, u) equal to k. Ranges
// over the whole universe, so S may intersect its own neighborhoods.
inline VertexSet set_kth_out_neighborhood(const DistanceMatrix& m, const VertexSet& s, int k) {
    if (s.none()) fail(errc::empty_set, "set neighborhood of empty set");
    VertexSet out{m.n(), 0};
    for (int u = 0; u < m.n(); ++u) {
        int best = unreachable_dist;
        s.for_each([&](int w) { best = std::min(best, m.at(w, u)); });
        if (best == k) out.add(u);
    }
    return out;
}

inline VertexSet set_kth_in_neighborhood(const DistanceMatrix& m, const VertexSet& s, int k) {
    if (s.none()) fail(errc::empty_set, "set neighborhood of empty set");
    VertexSet out{m.n(), 0};
    for (int u = 0; u < m.n(); ++u) {
        int best = unreachable_dist;
        s.for_each([&](int w) { best = std::min(best, m.at(u, w)); });
        if (best == k) out.add(u);
    }
    return out;
}

inline int girth(const DistanceMatrix& m) {
    int best = unreachable_dist;
    for (int v = 0; v < m.n(); ++v) best = std::min(best, m.at(v, v));
    return best;
}

inline int girth(const Digraph& g) { return girth(distances(g)); }

// m-free: no directed cycle of length at most m.
inline bool is_m_free(const Digraph& g, int m) { return girth(g) > m; }

}  // namespace snw
