#ifndef QEXTREMAL_ENUMERATE_HPP
#define QEXTREMAL_ENUMERATE_HPP

#include <algorithm>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qextremal/canonical.hpp"
#include "qextremal/errors.hpp"
#include "qextremal/graph.hpp"

namespace qext {

inline constexpr int kEnumerationCap = 10;

namespace detail {

struct LevelEntry {
    Graph graph;  // canonically labeled representative
    CanonicalForm form;
    std::vector<std::vector<int>> aut;  // minimal labelings == Aut(graph), identity included
};

inline VertexSet remap_set(VertexSet s, const std::vector<int>& position) {
    VertexSet out = 0;
    vs_for_each(s, [&](int v) { out |= vs_bit(position[static_cast<std::size_t>(v)]); });
    return out;
}

// Automorphisms of the canonical graph, as position maps: compose each tied
// labeling with the inverse of the chosen canonical one. Always contains the
// identity.
inline std::vector<std::vector<int>> canonical_automorphisms(const CanonicalAnalysis& analysis) {
    std::size_t n = analysis.canonical_labeling.size();
    std::vector<int> at_position(n);
    for (std::size_t v = 0; v < n; ++v)
        at_position[static_cast<std::size_t>(analysis.canonical_labeling[v])] = static_cast<int>(v);
    std::vector<std::vector<int>> auts;
    auts.reserve(analysis.minimal_labelings.size());
    for (const auto& lab : analysis.minimal_labelings) {
        std::vector<int> a(n);
        for (std::size_t p = 0; p < n; ++p) a[p] = lab[static_cast<std::size_t>(at_position[p])];
        auts.push_back(std::move(a));
    }
    return auts;
}

// Canonical-deletion acceptance: walk canonical positions from the back; the
// vertices landing on a position across all tied labelings form one orbit,
// and the first such orbit whose removal keeps the graph connected is the
// deletion orbit. The child survives iff its new vertex is in that orbit.
inline bool augmentation_accepted(const Graph& child, const CanonicalAnalysis& analysis) {
    int n = child.vertex_count();
    int added = n - 1;
    VertexSet seen = 0;
    for (int p = n - 1; p >= 0; --p) {
        VertexSet orbit = 0;
        for (const auto& lab : analysis.minimal_labelings) {
            for (int v = 0; v < n; ++v)
                if (lab[static_cast<std::size_t>(v)] == p) {
                    orbit |= vs_bit(v);
                    break;
                }
        }
        if (orbit & seen) continue;
        seen |= orbit;
        int rep = std::countr_zero(orbit);
        if (child.induces_connected(vs_full(n) & ~vs_bit(rep))) return vs_contains(orbit, added);
    }
    return false;  // unreachable: every connected graph has a non-cut vertex
}

// All children of one parent that pass the acceptance test. The parent is
// canonically labeled, so its tied labelings are exactly its automorphisms
// and orbit-minimal neighbor sets are true orbit representatives.
inline void extend_parent(const LevelEntry& parent, int max_deg, std::vector<LevelEntry>& out) {
    int k = parent.graph.vertex_count();
    VertexSet saturated = 0;
    for (int v = 0; v < k; ++v)
        if (parent.graph.degree(v) >= max_deg) saturated |= vs_bit(v);

    for (VertexSet s = 1; s < (VertexSet{1} << k); ++s) {
        if (vs_size(s) > max_deg) continue;
        if (s & saturated) continue;
        bool orbit_min = true;
        if (parent.aut.size() > 1) {
            for (const auto& lab : parent.aut) {
                if (remap_set(s, lab) < s) {
                    orbit_min = false;
                    break;
                }
            }
        }
        if (!orbit_min) continue;
        Graph child = parent.graph.with_added_vertex(s);
        CanonicalAnalysis analysis = canonical_analysis(child);
        if (!augmentation_accepted(child, analysis))
            continue;
        out.push_back({std::move(analysis.canonical_graph), std::move(analysis.form),
                       canonical_automorphisms(analysis)});
    }
}

inline std::vector<LevelEntry> enumerate_levels(int n, int max_deg, int workers) {
    CanonicalAnalysis seed = canonical_analysis(single_vertex());
    std::vector<LevelEntry> level{{seed.canonical_graph, seed.form, canonical_automorphisms(seed)}};
    for (int k = 1; k < n; ++k) {
        std::vector<LevelEntry> next;
        if (workers <= 1 || level.size() < 2) {
            for (const auto& parent : level) extend_parent(parent, max_deg, next);
        } else {
            std::vector<std::vector<LevelEntry>> shard(static_cast<std::size_t>(workers));
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    for (std::size_t i = static_cast<std::size_t>(w); i < level.size();
                         i += static_cast<std::size_t>(workers))
                        extend_parent(level[i], max_deg, shard[static_cast<std::size_t>(w)]);
                });
            for (auto& th : pool) th.join();
            for (auto& part : shard)
                for (auto& entry : part) next.push_back(std::move(entry));
        }
        std::sort(next.begin(), next.end(),
                  [](const LevelEntry& a, const LevelEntry& b) { return a.form < b.form; });
        level = std::move(next);
    }
    return level;
}

}  // namespace detail

// Every connected graph on n vertices with max degree <= max_deg, exactly
// once up to isomorphism, as canonical representatives sorted by canonical
// form. Built level by level: each class is kept only when its freshly added
// vertex lies in the canonical deletion orbit, so the output is duplicate-
// free without any cross-worker bookkeeping.
inline std::vector<Graph> enumerate_connected(int n, int max_deg, int workers = 1) {
    if (n < 1) throw domain_error("enumerate_connected needs n >= 1");
    if (n > kEnumerationCap)
        throw capacity_error("enumeration capped at " + std::to_string(kEnumerationCap) + " vertices");
    if (workers < 1) workers = 1;
    max_deg = std::min(max_deg, n - 1);
    if (n >= 2 && max_deg < 1) return {};

    std::vector<Graph> out;
    for (auto& entry : detail::enumerate_levels(n, max_deg, workers)) out.push_back(std::move(entry.graph));
    return out;
}

}  // namespace qext

#endif
