#ifndef QEXTREMAL_TRIALS_HPP
#define QEXTREMAL_TRIALS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qextremal/graph.hpp"
#include "qextremal/spectral.hpp"
#include "qextremal/transforms.hpp"

namespace qext {

// Seeded random-graph property runs for the two perturbation claims. Single
// threaded and driven by one generator, so a seed fixes the whole run.

inline Graph random_connected_graph(std::mt19937_64& rng, int min_n, int max_n, double edge_p = 0.5) {
    std::uniform_int_distribution<int> pick_n(min_n, max_n);
    std::bernoulli_distribution coin(edge_p);
    for (;;) {
        int n = pick_n(rng);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) edges.emplace_back(i, j);
        Graph g = build_graph(n, std::span<const std::pair<int, int>>(edges));
        if (g.is_connected()) return g;
    }
}

struct TrialSummary {
    int trials = 0;
    int failures = 0;
    std::string first_failure;
};

// Delete one connectivity-preserving edge from a random connected graph and
// demand a strict Q-index drop. Trees (all edges bridges) are resampled.
inline TrialSummary run_monotonicity_trials(int count, std::uint64_t seed, int min_n = 3, int max_n = 8,
                                            double margin = kStrictMargin) {
    std::mt19937_64 rng(seed);
    TrialSummary summary;
    while (summary.trials < count) {
        Graph g = random_connected_graph(rng, min_n, max_n);
        std::vector<std::pair<int, int>> deletable;
        for (int u = 0; u < g.vertex_count(); ++u)
            vs_for_each(g.row(u), [&](int v) {
                if (u < v && g.without_edge(u, v).is_connected()) deletable.emplace_back(u, v);
            });
        if (deletable.empty()) continue;
        auto [u, v] = deletable[std::uniform_int_distribution<std::size_t>(0, deletable.size() - 1)(rng)];
        ++summary.trials;
        if (!check_monotonicity(g, u, v, margin)) {
            ++summary.failures;
            if (summary.first_failure.empty())
                summary.first_failure = "trial " + std::to_string(summary.trials) + ": edge (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")";
        }
    }
    return summary;
}

// Random rotations whose Perron hypothesis holds must strictly raise the
// Q-index. Draws are retried until the hypothesis is met with a nonempty
// moved set, so every counted trial is a live instance of the claim.
inline TrialSummary run_rotation_trials(int count, std::uint64_t seed, int min_n = 3, int max_n = 8,
                                        double hypothesis_tol = kPerronTol,
                                        double margin = kStrictMargin) {
    std::mt19937_64 rng(seed);
    TrialSummary summary;
    while (summary.trials < count) {
        Graph g = random_connected_graph(rng, min_n, max_n);
        int n = g.vertex_count();
        std::uniform_int_distribution<int> pick(0, n - 1);
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        VertexSet pool = g.row(v) & ~g.row(u) & ~vs_bit(u);
        if (pool == 0) continue;
        VertexSet moved = 0;
        vs_for_each(pool, [&](int w) {
            if (std::bernoulli_distribution(0.5)(rng)) moved |= vs_bit(w);
        });
        if (moved == 0) moved = vs_bit(std::countr_zero(pool));
        SpectralResult spectral = q_index(g);
        if (spectral.perron[static_cast<std::size_t>(u)] <
            spectral.perron[static_cast<std::size_t>(v)] - hypothesis_tol)
            continue;
        ++summary.trials;
        RotationOutcome outcome = check_rotation_increase(g, {u, v, moved}, hypothesis_tol, margin);
        if (outcome != RotationOutcome::increase_confirmed) {
            ++summary.failures;
            if (summary.first_failure.empty())
                summary.first_failure = "trial " + std::to_string(summary.trials) + ": u=" +
                                        std::to_string(u) + " v=" + std::to_string(v) +
                                        " outcome=" + to_string(outcome);
        }
    }
    return summary;
}

}  // namespace qext

#endif
