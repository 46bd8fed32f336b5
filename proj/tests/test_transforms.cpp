#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "qextremal/canonical.hpp"
#include "qextremal/families.hpp"
#include "qextremal/transforms.hpp"
#include "qextremal/trials.hpp"

using namespace qext;
using Catch::Approx;

TEST_CASE("rotate_edges rewires and preserves the edge count") {
    // Path 0-1-2-3: moving 3 from 2 over to 1 makes the star at 1.
    Graph p4 = path(4);
    Graph rotated = rotate_edges(p4, {1, 2, vs_bit(3)});
    CHECK(is_isomorphic(rotated, complete_bipartite(1, 3)));
    CHECK(rotated.edge_count() == p4.edge_count());

    CHECK(rotate_edges(p4, {1, 2, 0}) == p4);  // empty move is the identity

    // C_5 with u, v adjacent: degree bookkeeping.
    Graph c5 = cycle(5);
    int u = 0, v = 1, far_neighbor = 2;  // 2 is v's other neighbor, not adjacent to 0
    Graph rotated5 = rotate_edges(c5, {u, v, vs_bit(far_neighbor)});
    CHECK(rotated5.edge_count() == 5);
    CHECK(rotated5.degree(u) == c5.degree(u) + 1);
    CHECK(rotated5.degree(v) == c5.degree(v) - 1);
}

TEST_CASE("rotation spec violations name the offending vertex") {
    Graph p4 = path(4);
    CHECK_THROWS_WITH(rotate_edges(p4, {1, 2, vs_bit(0)}),
                      Catch::Matchers::ContainsSubstring("0"));  // 0 not a neighbor of v=2
    CHECK_THROWS_WITH(rotate_edges(p4, {0, 2, vs_bit(1)}),
                      Catch::Matchers::ContainsSubstring("1"));  // 1 already a neighbor of u=0
    CHECK_THROWS_AS(rotate_edges(p4, {2, 2, 0}), domain_error);
    CHECK_THROWS_AS(rotate_edges(p4, {1, 2, vs_bit(2)}), domain_error);  // v inside moved
    CHECK_THROWS_AS(rotate_edges(p4, {1, 5, 0}), domain_error);
}

TEST_CASE("reverse rotation restores the original graph") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 60) {
        Graph g = random_connected_graph(rng, 4, 8);
        int n = g.vertex_count();
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v) continue;
        VertexSet pool = g.row(v) & ~g.row(u) & ~vs_bit(u);
        if (!pool) continue;
        Graph rotated = rotate_edges(g, {u, v, pool});
        CHECK(rotate_edges(rotated, {v, u, pool}) == g);
        ++done;
    }
}

TEST_CASE("rotation increase check") {
    // Perron symmetry makes x_1 = x_2 on the path, so the hypothesis holds
    // and the Q-index must jump from 2+sqrt(2) to 4.
    Graph p4 = path(4);
    CHECK(check_rotation_increase(p4, {1, 2, vs_bit(3)}) == RotationOutcome::increase_confirmed);
    CHECK(q_index_max_over_components(rotate_edges(p4, {1, 2, vs_bit(3)})) == Approx(4.0).margin(1e-9));

    CHECK(check_rotation_increase(p4, {1, 2, 0}) == RotationOutcome::inconclusive);  // s = 0

    // Leaf-to-center move with x_u < x_v: hypothesis rejected.
    CHECK(check_rotation_increase(p4, {0, 1, vs_bit(2)}) == RotationOutcome::hypothesis_not_met);

    CHECK_THROWS_AS(check_rotation_increase(build_graph(4, {{0, 1}, {2, 3}}), {0, 2, vs_bit(3)}),
                    disconnected_error);
}

TEST_CASE("single edge deletion strictly lowers the Q-index") {
    CHECK(check_monotonicity(complete(4), 0, 1));
    CHECK(check_monotonicity(cycle(5), 0, 1));
    CHECK_THROWS_AS(check_monotonicity(complete(2), 0, 1), disconnected_error);
    CHECK_THROWS_AS(check_monotonicity(path(4), 0, 2), domain_error);  // no such edge
    // The drop across K_4 -> K_4 - e matches the closed form.
    double before = q_index(complete(4)).q1;
    double after = q_index(complete(4).without_edge(0, 1)).q1;
    CHECK(before == Approx(6.0).margin(1e-9));
    CHECK(after == Approx(5.2360679775).margin(1e-8));
}

TEST_CASE("seeded perturbation trials, reduced count") {
    TrialSummary mono = run_monotonicity_trials(60, 2024);
    CHECK(mono.trials == 60);
    CHECK(mono.failures == 0);
    TrialSummary rot = run_rotation_trials(60, 2025);
    CHECK(rot.trials == 60);
    CHECK(rot.failures == 0);
}

TEST_CASE("trial runs are reproducible for a fixed seed") {
    TrialSummary a = run_monotonicity_trials(25, 99);
    TrialSummary b = run_monotonicity_trials(25, 99);
    CHECK(a.trials == b.trials);
    CHECK(a.failures == b.failures);
}
