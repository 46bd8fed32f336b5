#ifndef QEXTREMAL_FAMILIES_HPP
#define QEXTREMAL_FAMILIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "qextremal/errors.hpp"
#include "qextremal/graph.hpp"

namespace qext {

// All constructors use fixed, documented labelings so that reports and caches
// are reproducible; isomorphism-level claims go through canonical forms.

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return build_graph(n, std::span<const std::pair<int, int>>(edges));
}

inline Graph complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw domain_error("complete_bipartite needs both sides nonempty");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) edges.emplace_back(i, s + j);
    return build_graph(s + t, std::span<const std::pair<int, int>>(edges));
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(n, std::span<const std::pair<int, int>>(edges));
}

inline Graph cycle(int n) {
    if (n < 3) throw domain_error("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build_graph(n, std::span<const std::pair<int, int>>(edges));
}

// Disjoint union; H's vertices are shifted past G's.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng + nh > Graph::kMaxVertices) throw capacity_error("union order exceeds 64");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < ng; ++u)
        vs_for_each(g.row(u), [&](int v) { if (u < v) edges.emplace_back(u, v); });
    for (int u = 0; u < nh; ++u)
        vs_for_each(h.row(u), [&](int v) { if (u < v) edges.emplace_back(ng + u, ng + v); });
    return build_graph(ng + nh, std::span<const std::pair<int, int>>(edges));
}

// Join: disjoint union plus every cross edge.
inline Graph join(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) out = out.with_edge(u, ng + v);
    return out;
}

// K_n with the edge (0,1) removed.
inline Graph kn_minus_e(int n) {
    if (n < 2) throw domain_error("kn_minus_e needs n >= 2");
    return complete(n).without_edge(0, 1);
}

// K_n minus the perfect matching (0,1), (2,3), ...; (n-2)-regular. Odd n is
// rejected: the odd-order near-matching candidate is odd_case_family, not a
// silently truncated matching.
inline Graph kn_minus_perfect_matching(int n) {
    if (n < 2 || n % 2 != 0) throw domain_error("kn_minus_perfect_matching needs even n >= 2");
    Graph g = complete(n);
    for (int i = 0; i < n; i += 2) g = g.without_edge(i, i + 1);
    return g;
}

// S^{n-t}(K_t): K_t on 0..t-1 with the edge (0,1) replaced by the path
// 0, t, t+1, ..., n-1, 1. n = t returns K_t itself.
inline Graph subdivided_clique(int n, int t) {
    if (t < 3) throw domain_error("subdivided_clique needs t >= 3");
    if (n < t) throw domain_error("subdivided_clique needs n >= t");
    if (n == t) return complete(t);
    Graph g = kn_minus_e(t);
    int prev = 0;
    for (int v = t; v < n; ++v) {
        g = g.with_added_vertex(vs_bit(prev));
        prev = v;
    }
    return g.with_edge(prev, 1);
}

// G^e_t: K_t minus the edge (0,1), plus pendant vertices t (at 0) and t+1
// (at 1). Order t+2.
inline Graph double_pendant_clique(int t) {
    if (t < 3) throw domain_error("double_pendant_clique needs t >= 3");
    return kn_minus_e(t).with_added_vertex(vs_bit(0)).with_added_vertex(vs_bit(1));
}

// F_{s,t}(n) = K_{s-1} joined to (p K_t together with K_r), n-s+1 = p*t + r.
// Disconnected output is allowed when s = 1.
inline Graph f_family(int s, int t, int n) {
    if (s < 1 || t < 1 || n < s) throw domain_error("f_family needs s >= 1, t >= 1, n >= s");
    if (n > Graph::kMaxVertices) throw capacity_error("f_family order exceeds 64");
    int p = (n - s + 1) / t;
    int r = (n - s + 1) % t;
    std::vector<std::pair<int, int>> edges;
    int base = s - 1;
    for (int i = 0; i < base; ++i)
        for (int j = i + 1; j < base; ++j) edges.emplace_back(i, j);
    auto add_clique = [&](int start, int size) {
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) edges.emplace_back(start + i, start + j);
        for (int i = 0; i < base; ++i)
            for (int j = 0; j < size; ++j) edges.emplace_back(i, start + j);
    };
    int at = base;
    for (int k = 0; k < p; ++k, at += t) add_clique(at, t);
    add_clique(at, r);
    return build_graph(n, std::span<const std::pair<int, int>>(edges));
}

// Near-matching complement on n = t+1 vertices, the structure the odd-order
// extremal analysis derives: u* = 0; A_0 = 1..t-1-a1; A_1 = the next a1 ids;
// w = t. {u*} with A induces K_t minus a perfect matching on A_1, and w is
// adjacent exactly to A_1. Every vertex except w has degree t-1; w has a1.
inline Graph odd_case_family(int t, int a1) {
    if (t < 4) throw domain_error("odd_case_family needs t >= 4");
    if (a1 % 2 != 0 || a1 < 2 || a1 > t - 2)
        throw domain_error("odd_case_family needs even a1 with 2 <= a1 <= t-2");
    Graph g = complete(t);
    int a1_start = t - a1;
    for (int i = a1_start; i < t; i += 2) g = g.without_edge(i, i + 1);
    VertexSet w_neighbors = 0;
    for (int i = a1_start; i < t; ++i) w_neighbors |= vs_bit(i);
    return g.with_added_vertex(w_neighbors);
}

}  // namespace qext

#endif
