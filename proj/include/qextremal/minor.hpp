#ifndef QEXTREMAL_MINOR_HPP
#define QEXTREMAL_MINOR_HPP

#include <string>
#include <vector>

#include "qextremal/errors.hpp"
#include "qextremal/graph.hpp"

namespace qext {

// Star-minor evidence: a connected witness set S whose outside neighborhood
// has at least t vertices (contract S to the center, each boundary vertex is
// a leaf branch set), or an exhaustion marker recording the scan cap.
struct MinorCertificate {
    enum class Kind { witness, absent };
    Kind kind = Kind::absent;
    VertexSet witness_set = 0;
    VertexSet boundary = 0;
    int threshold = 0;  // the t that was asked about
    int scan_cap = 0;
};

inline constexpr int kBoundaryScanCap = 24;
inline constexpr int kBranchOracleCap = 10;
inline constexpr int kUnrestrictedOracleCap = 7;

struct BoundaryResult {
    int size = 0;
    VertexSet witness = 0;
};

namespace detail {

// DFS over connected vertex sets: each connected S is visited exactly once by
// growing from its minimum vertex and only ever adding neighbors larger than
// that minimum. `threshold` enables early exit and the supersets-can-only-
// shrink prune (a proper superset of S has boundary at most n - |S| - 1).
template <typename Visit>
inline void scan_connected_sets(const Graph& g, int threshold, Visit&& visit) {
    int n = g.vertex_count();
    struct Frame {
        VertexSet set;
        VertexSet frontier;  // candidate additions: neighbors of set not yet decided
        VertexSet banned;    // vertices excluded from this branch
    };
    for (int start = 0; start < n; ++start) {
        VertexSet below = vs_full(start + 1) >> 1;  // vertices < start stay out
        std::vector<Frame> stack;
        stack.push_back({vs_bit(start), g.row(start) & ~below, below});
        while (!stack.empty()) {
            Frame fr = stack.back();
            stack.pop_back();
            if (!visit(fr.set, g.neighborhood(fr.set))) return;
            if (threshold > 0 && n - vs_size(fr.set) - 1 < threshold) continue;
            VertexSet cand = fr.frontier & ~fr.banned;
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                VertexSet grown = fr.set | vs_bit(v);
                VertexSet frontier = (fr.frontier | g.row(v)) & ~grown;
                stack.push_back({grown, frontier, fr.banned});
                fr.banned |= vs_bit(v);  // later siblings must not re-add v
            }
        }
    }
}

}  // namespace detail

// Maximum of |N(S) \ S| over all nonempty connected S, with a maximizing S
// (ties broken toward the smallest witness mask).
inline BoundaryResult max_connected_boundary(const Graph& g, int cap = kBoundaryScanCap) {
    int n = g.vertex_count();
    if (n > cap)
        throw capacity_error("boundary scan capped at " + std::to_string(cap) +
                             " vertices (got " + std::to_string(n) +
                             "); fall back to the max-degree bound");
    BoundaryResult best;
    best.witness = vs_bit(0);
    best.size = vs_size(g.neighborhood(vs_bit(0)));
    detail::scan_connected_sets(g, /*threshold=*/0, [&](VertexSet s, VertexSet bd) {
        int size = vs_size(bd);
        if (size > best.size || (size == best.size && s < best.witness)) {
            best.size = size;
            best.witness = s;
        }
        return true;
    });
    return best;
}

// Witness iff some connected S has at least t outside neighbors. Singletons
// are scanned first (a vertex of degree >= t is its own witness), then the
// grown sets; the scan exits on the first hit in its deterministic order.
inline MinorCertificate has_k1t_minor(const Graph& g, int t, int cap = kBoundaryScanCap) {
    if (t < 1) throw domain_error("has_k1t_minor needs t >= 1");
    int n = g.vertex_count();
    if (n > cap)
        throw capacity_error("minor scan capped at " + std::to_string(cap) +
                             " vertices (got " + std::to_string(n) + ")");
    MinorCertificate cert;
    cert.threshold = t;
    cert.scan_cap = cap;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= t) {
            cert.kind = MinorCertificate::Kind::witness;
            cert.witness_set = vs_bit(v);
            cert.boundary = g.row(v);
            return cert;
        }
    detail::scan_connected_sets(g, t, [&](VertexSet s, VertexSet bd) {
        if (vs_size(bd) >= t) {
            cert.kind = MinorCertificate::Kind::witness;
            cert.witness_set = s;
            cert.boundary = bd;
            return false;
        }
        return true;
    });
    return cert;
}

// Re-checks a witness certificate from scratch against the graph.
inline bool certificate_valid(const Graph& g, const MinorCertificate& cert) {
    if (cert.kind == MinorCertificate::Kind::absent) return true;
    if (cert.witness_set == 0) return false;
    if (!g.induces_connected(cert.witness_set)) return false;
    if (cert.boundary & cert.witness_set) return false;
    if (vs_size(cert.boundary) < cert.threshold) return false;
    bool all_adjacent = true;
    vs_for_each(cert.boundary, [&](int v) {
        if ((g.row(v) & cert.witness_set) == 0) all_adjacent = false;
    });
    return all_adjacent;
}

// Independent oracle: flat scan over all 2^n vertex masks, no pruning or
// early exit. A mask is a valid star center when it induces a connected
// subgraph and at least t outside vertices see it; those vertices serve as
// singleton leaf branch sets.
inline bool branch_set_oracle(const Graph& g, int t) {
    if (t < 1) throw domain_error("branch_set_oracle needs t >= 1");
    int n = g.vertex_count();
    if (n > kBranchOracleCap)
        throw capacity_error("branch_set_oracle capped at " + std::to_string(kBranchOracleCap) + " vertices");
    bool found = false;
    for (VertexSet mask = 1; mask < (VertexSet{1} << n); ++mask) {
        if (!g.induces_connected(mask)) continue;
        if (vs_size(g.neighborhood(mask)) >= t) found = true;
    }
    return found;
}

namespace detail {

// Can `remaining` host k pairwise-disjoint connected sets, each adjacent to
// the fixed center set? Branch sets are built around each anchor vertex in
// N(center); multi-vertex branch sets are explored, not assumed away.
inline bool pack_branch_sets(const Graph& g, VertexSet center, VertexSet remaining, int k) {
    if (k == 0) return true;
    VertexSet anchors = g.neighborhood(center) & remaining;
    if (vs_size(anchors) < k) return false;
    int anchor = std::countr_zero(anchors);
    // Either no branch set uses this anchor vertex at all...
    if (pack_branch_sets(g, center, remaining & ~vs_bit(anchor), k)) return true;
    // ...or one of them is a connected set through it inside `remaining`.
    bool ok = false;
    struct Frame {
        VertexSet set, frontier, banned;
    };
    std::vector<Frame> stack;
    stack.push_back({vs_bit(anchor), g.row(anchor) & remaining, 0});
    while (!stack.empty() && !ok) {
        Frame fr = stack.back();
        stack.pop_back();
        if (pack_branch_sets(g, center, remaining & ~fr.set, k - 1)) {
            ok = true;
            break;
        }
        VertexSet cand = fr.frontier & ~fr.banned;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            VertexSet grown = fr.set | vs_bit(v);
            stack.push_back({grown, (fr.frontier | (g.row(v) & remaining)) & ~grown, fr.banned});
            fr.banned |= vs_bit(v);
        }
    }
    return ok;
}

}  // namespace detail

// Unrestricted variant: searches for t+1 genuinely arbitrary disjoint
// connected branch sets (center plus t leaves, leaves possibly multi-vertex).
// Exists to discharge the singleton-leaf reduction used by the oracle.
inline bool branch_set_oracle_unrestricted(const Graph& g, int t) {
    if (t < 1) throw domain_error("branch_set_oracle_unrestricted needs t >= 1");
    int n = g.vertex_count();
    if (n > kUnrestrictedOracleCap)
        throw capacity_error("unrestricted oracle capped at " + std::to_string(kUnrestrictedOracleCap) +
                             " vertices");
    for (VertexSet center = 1; center < (VertexSet{1} << n); ++center) {
        if (!g.induces_connected(center)) continue;
        if (detail::pack_branch_sets(g, center, vs_full(n) & ~center, t)) return true;
    }
    return false;
}

}  // namespace qext

#endif
