#ifndef QEXTREMAL_TEST_ORACLES_HPP
#define QEXTREMAL_TEST_ORACLES_HPP

// Test-only reference implementations, deliberately independent of the
// library's computation paths: a dense Jacobi eigensolver (vs power
// iteration), permutation-exhaustive isomorphism (vs canonical forms), and
// filter-all labeled enumeration (vs canonical augmentation).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "qextremal/canonical.hpp"
#include "qextremal/graph.hpp"

namespace oracle {

// Cyclic Jacobi rotations on a dense symmetric matrix; returns the largest
// eigenvalue.
inline double jacobi_largest_eigenvalue(std::vector<std::vector<double>> a, double tol = 1e-13) {
    std::size_t n = a.size();
    if (n == 1) return a[0][0];
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < tol * tol) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    double best = a[0][0];
    for (std::size_t i = 1; i < n; ++i) best = std::max(best, a[i][i]);
    return best;
}

// Exhaustive permutation isomorphism test.
inline bool brute_is_isomorphic(const qext::Graph& a, const qext::Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (a.permuted(perm) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// The graph encoded by the bits of `mask` over the C(n,2) vertex pairs in
// column-major upper-triangle order.
inline qext::Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(row, col);
    return qext::build_graph(n, std::span<const std::pair<int, int>>(edges));
}

// Filter-all fallback: every labeled graph, connectivity plus degree-cap
// filters, canonical dedup. Exact but exponential; fine through n = 6.
inline std::set<qext::CanonicalForm> enumerate_connected_bruteforce(int n, int max_deg) {
    std::set<qext::CanonicalForm> classes;
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        qext::Graph g = graph_from_mask(n, mask);
        if (g.max_degree() > max_deg) continue;
        if (!g.is_connected()) continue;
        classes.insert(qext::canonical_form(g));
    }
    return classes;
}

// Count of connected labeled graphs on n vertices, by raw bitmask flood
// fill; avoids the Graph type entirely.
inline long labeled_connected_count(int n) {
    long count = 0;
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        unsigned rows[12] = {0};
        int bit = 0;
        for (int col = 1; col < n; ++col)
            for (int row = 0; row < col; ++row, ++bit)
                if ((mask >> bit) & 1) {
                    rows[row] |= 1u << col;
                    rows[col] |= 1u << row;
                }
        unsigned reached = 1, prev = 0;
        while (reached != prev) {
            prev = reached;
            unsigned next = reached;
            for (int v = 0; v < n; ++v)
                if ((reached >> v) & 1) next |= rows[v];
            reached = next;
        }
        if (reached == (1u << n) - 1) ++count;
    }
    return count;
}

}  // namespace oracle

#endif
