#ifndef QEXTREMAL_GRAPH_HPP
#define QEXTREMAL_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qextremal/errors.hpp"

namespace qext {

// Subset of vertex ids as a 64-bit mask; only bits 0..n-1 of the host graph
// may be set.
using VertexSet = std::uint64_t;

inline constexpr VertexSet vs_bit(int v) { return VertexSet{1} << v; }
inline constexpr bool vs_contains(VertexSet s, int v) { return (s >> v) & 1; }
inline constexpr int vs_size(VertexSet s) { return std::popcount(s); }
inline constexpr VertexSet vs_full(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Visits the vertices of `s` in ascending order.
template <typename F>
inline void vs_for_each(VertexSet s, F&& fn) {
    while (s) {
        int v = std::countr_zero(s);
        fn(v);
        s &= s - 1;
    }
}

inline std::vector<int> vs_to_vector(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(vs_size(s)));
    vs_for_each(s, [&](int v) { out.push_back(v); });
    return out;
}

// Immutable simple undirected graph on at most 64 vertices, one adjacency
// bitmask row per vertex. Rows are symmetric and loop-free by construction;
// all mutating-style operations return a new value.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    int vertex_count() const { return n_; }

    VertexSet row(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return vs_contains(adj_[static_cast<std::size_t>(u)], v);
    }

    int degree(int v) const { return vs_size(row(v)); }

    int max_degree() const {
        int best = 0;
        for (int v = 0; v < n_; ++v) best = std::max(best, vs_size(adj_[static_cast<std::size_t>(v)]));
        return best;
    }

    int min_degree() const {
        int best = kMaxVertices;
        for (int v = 0; v < n_; ++v) best = std::min(best, vs_size(adj_[static_cast<std::size_t>(v)]));
        return best;
    }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += vs_size(adj_[static_cast<std::size_t>(v)]);
        return total / 2;
    }

    // Closed neighborhood reachable from `start` by repeated expansion.
    VertexSet reachable_from(int start) const {
        check_vertex(start);
        VertexSet reached = vs_bit(start);
        for (;;) {
            VertexSet next = reached;
            vs_for_each(reached, [&](int v) { next |= adj_[static_cast<std::size_t>(v)]; });
            if (next == reached) return reached;
            reached = next;
        }
    }

    bool is_connected() const { return reachable_from(0) == vs_full(n_); }

    // Neighbors of the set S, excluding S itself.
    VertexSet neighborhood(VertexSet s) const {
        VertexSet nb = 0;
        vs_for_each(s, [&](int v) { nb |= adj_[static_cast<std::size_t>(v)]; });
        return nb & ~s;
    }

    // Is the induced subgraph G[S] connected? Empty S counts as not connected.
    bool induces_connected(VertexSet s) const {
        if (s == 0) return false;
        int start = std::countr_zero(s);
        VertexSet reached = vs_bit(start);
        for (;;) {
            VertexSet next = reached;
            vs_for_each(reached, [&](int v) { next |= adj_[static_cast<std::size_t>(v)] & s; });
            if (next == reached) break;
            reached = next;
        }
        return reached == s;
    }

    std::vector<VertexSet> components() const {
        std::vector<VertexSet> comps;
        VertexSet seen = 0;
        for (int v = 0; v < n_; ++v) {
            if (vs_contains(seen, v)) continue;
            VertexSet c = reachable_from(v);
            comps.push_back(c);
            seen |= c;
        }
        return comps;
    }

    Graph with_edge(int u, int v) const {
        check_edge_args(u, v);
        Graph g = *this;
        g.adj_[static_cast<std::size_t>(u)] |= vs_bit(v);
        g.adj_[static_cast<std::size_t>(v)] |= vs_bit(u);
        return g;
    }

    Graph without_edge(int u, int v) const {
        check_edge_args(u, v);
        Graph g = *this;
        g.adj_[static_cast<std::size_t>(u)] &= ~vs_bit(v);
        g.adj_[static_cast<std::size_t>(v)] &= ~vs_bit(u);
        return g;
    }

    // New graph with one extra vertex (id n) adjacent to exactly `neighbors`.
    Graph with_added_vertex(VertexSet neighbors) const {
        if (n_ >= kMaxVertices) throw capacity_error("graph already has 64 vertices");
        if (neighbors & ~vs_full(n_)) throw domain_error("neighbor mask out of range");
        Graph g;
        g.n_ = n_ + 1;
        g.adj_ = adj_;
        g.adj_.push_back(neighbors);
        vs_for_each(neighbors, [&](int v) { g.adj_[static_cast<std::size_t>(v)] |= vs_bit(n_); });
        return g;
    }

    // Relabeled copy: vertex v of this graph becomes vertex position[v].
    Graph permuted(std::span<const int> position) const {
        if (static_cast<int>(position.size()) != n_) throw domain_error("permutation size mismatch");
        Graph g;
        g.n_ = n_;
        g.adj_.assign(static_cast<std::size_t>(n_), 0);
        for (int u = 0; u < n_; ++u) {
            vs_for_each(adj_[static_cast<std::size_t>(u)], [&](int v) {
                g.adj_[static_cast<std::size_t>(position[static_cast<std::size_t>(u)])] |=
                    vs_bit(position[static_cast<std::size_t>(v)]);
            });
        }
        return g;
    }

    // Induced subgraph on S; vertices are relabeled 0..|S|-1 in ascending order.
    Graph induced(VertexSet s) const {
        std::vector<int> verts = vs_to_vector(s & vs_full(n_));
        if (verts.empty()) throw domain_error("induced subgraph needs at least one vertex");
        Graph g;
        g.n_ = static_cast<int>(verts.size());
        g.adj_.assign(verts.size(), 0);
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (has_edge(verts[i], verts[j])) {
                    g.adj_[i] |= vs_bit(static_cast<int>(j));
                    g.adj_[j] |= vs_bit(static_cast<int>(i));
                }
        return g;
    }

    bool operator==(const Graph& other) const = default;

    friend Graph build_graph(int n, std::span<const std::pair<int, int>> edges);
    friend Graph single_vertex();

private:
    Graph() = default;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw domain_error("vertex id " + std::to_string(v) + " out of range");
    }
    void check_edge_args(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw domain_error("loop at vertex " + std::to_string(u));
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

inline Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 1) throw domain_error("graph needs at least one vertex");
    if (n > Graph::kMaxVertices) throw capacity_error("graph order " + std::to_string(n) + " exceeds 64");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw domain_error("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw domain_error("loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)] |= vs_bit(v);
        g.adj_[static_cast<std::size_t>(v)] |= vs_bit(u);
    }
    return g;
}

inline Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return build_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

inline Graph single_vertex() {
    Graph g;
    g.n_ = 1;
    g.adj_.assign(1, 0);
    return g;
}

}  // namespace qext

#endif
