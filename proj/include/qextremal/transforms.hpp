#ifndef QEXTREMAL_TRANSFORMS_HPP
#define QEXTREMAL_TRANSFORMS_HPP

#include <string>

#include "qextremal/errors.hpp"
#include "qextremal/graph.hpp"
#include "qextremal/spectral.hpp"

namespace qext {

// Edge rotation: every edge v-w with w in `moved` becomes u-w. Requires
// moved to sit inside N(v) \ N(u) and to avoid both endpoints, so the edge
// count is preserved and no edge is doubled.
struct RotationSpec {
    int u = 0;
    int v = 0;
    VertexSet moved = 0;
};

inline constexpr double kPerronTol = 1e-12;

inline void validate_rotation(const Graph& g, const RotationSpec& spec) {
    int n = g.vertex_count();
    if (spec.u < 0 || spec.u >= n) throw domain_error("rotation vertex u=" + std::to_string(spec.u) + " out of range");
    if (spec.v < 0 || spec.v >= n) throw domain_error("rotation vertex v=" + std::to_string(spec.v) + " out of range");
    if (spec.u == spec.v) throw domain_error("rotation needs distinct u and v");
    if (spec.moved & ~vs_full(n)) throw domain_error("moved set has out-of-range vertices");
    if (vs_contains(spec.moved, spec.u)) throw domain_error("moved set contains u=" + std::to_string(spec.u));
    if (vs_contains(spec.moved, spec.v)) throw domain_error("moved set contains v=" + std::to_string(spec.v));
    VertexSet bad_not_v = spec.moved & ~g.row(spec.v);
    if (bad_not_v)
        throw domain_error("moved vertex " + std::to_string(std::countr_zero(bad_not_v)) +
                           " is not a neighbor of v=" + std::to_string(spec.v));
    VertexSet bad_u = spec.moved & g.row(spec.u);
    if (bad_u)
        throw domain_error("moved vertex " + std::to_string(std::countr_zero(bad_u)) +
                           " is already a neighbor of u=" + std::to_string(spec.u));
}

inline Graph rotate_edges(const Graph& g, const RotationSpec& spec) {
    validate_rotation(g, spec);
    Graph out = g;
    vs_for_each(spec.moved, [&](int w) { out = out.without_edge(spec.v, w).with_edge(spec.u, w); });
    return out;
}

enum class RotationOutcome { increase_confirmed, hypothesis_not_met, inconclusive };

inline const char* to_string(RotationOutcome o) {
    switch (o) {
        case RotationOutcome::increase_confirmed: return "increase_confirmed";
        case RotationOutcome::hypothesis_not_met: return "hypothesis_not_met";
        default: return "inconclusive";
    }
}

// Executable form of the rotation lemma: when the Perron entry at u is at
// least the one at v, rotating edges from v to u must strictly raise the
// Q-index. The rotated graph may be disconnected (v can lose all its edges),
// so its Q-index is taken over components.
inline RotationOutcome check_rotation_increase(const Graph& g, const RotationSpec& spec,
                                            double hypothesis_tol = kPerronTol,
                                            double margin = kStrictMargin,
                                            double eig_tol = kDefaultEigTol) {
    if (!g.is_connected()) throw disconnected_error("check_rotation_increase requires a connected graph");
    validate_rotation(g, spec);
    SpectralResult before = q_index(g, eig_tol);
    double xu = before.perron[static_cast<std::size_t>(spec.u)];
    double xv = before.perron[static_cast<std::size_t>(spec.v)];
    if (xu < xv - hypothesis_tol) return RotationOutcome::hypothesis_not_met;
    double after = q_index_max_over_components(rotate_edges(g, spec), eig_tol);
    if (after > before.q1 + margin) return RotationOutcome::increase_confirmed;
    return RotationOutcome::inconclusive;
}

// Single-edge form of subgraph monotonicity: removing edge (u,v) from a
// connected graph must strictly lower the Q-index, provided the graph stays
// connected (the eigensolver's domain).
inline bool check_monotonicity(const Graph& g, int u, int v, double margin = kStrictMargin,
                               double eig_tol = kDefaultEigTol) {
    if (!g.is_connected()) throw disconnected_error("check_monotonicity requires a connected graph");
    if (!g.has_edge(u, v)) throw domain_error("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    Graph reduced = g.without_edge(u, v);
    if (!reduced.is_connected())
        throw disconnected_error("removing (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") disconnects the graph; pick another edge");
    return q_index(reduced, eig_tol).q1 < q_index(g, eig_tol).q1 - margin;
}

}  // namespace qext

#endif
