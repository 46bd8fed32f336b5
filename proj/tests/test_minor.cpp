#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qextremal/enumerate.hpp"
#include "qextremal/families.hpp"
#include "qextremal/minor.hpp"

using namespace qext;

TEST_CASE("max_connected_boundary") {
    BoundaryResult star = max_connected_boundary(complete_bipartite(1, 3));
    CHECK(star.size == 3);
    CHECK(star.witness == vs_bit(0));  // the center

    for (int n : {4, 6, 9}) CHECK(max_connected_boundary(cycle(n)).size == 2);
    CHECK(max_connected_boundary(subdivided_clique(6, 4)).size == 3);
    CHECK(max_connected_boundary(single_vertex()).size == 0);
    CHECK_THROWS_AS(max_connected_boundary(complete(25)), capacity_error);
}

TEST_CASE("has_k1t_minor basics") {
    CHECK(has_k1t_minor(complete_bipartite(1, 3), 3).kind == MinorCertificate::Kind::witness);
    CHECK(has_k1t_minor(cycle(9), 3).kind == MinorCertificate::Kind::absent);
    for (int t = 3; t <= 6; ++t)
        for (int n = t + 1; n <= t + 4; ++n)
            CHECK(has_k1t_minor(subdivided_clique(n, t), t).kind == MinorCertificate::Kind::absent);
    CHECK_THROWS_AS(has_k1t_minor(complete(3), 0), domain_error);
}

TEST_CASE("witness certificates re-validate") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() & 1) edges.emplace_back(i, j);
        Graph g = build_graph(n, std::span<const std::pair<int, int>>(edges));
        int t = 3 + static_cast<int>(rng() % 3);
        MinorCertificate cert = has_k1t_minor(g, t);
        CHECK(certificate_valid(g, cert));
        // A vertex of degree >= t is always a single-vertex witness.
        if (g.max_degree() >= t) CHECK(cert.kind == MinorCertificate::Kind::witness);
    }
}

TEST_CASE("corrupted certificates are rejected") {
    Graph g = complete_bipartite(1, 4);
    MinorCertificate cert = has_k1t_minor(g, 4);
    REQUIRE(cert.kind == MinorCertificate::Kind::witness);
    MinorCertificate overlap = cert;
    overlap.boundary |= cert.witness_set;
    CHECK_FALSE(certificate_valid(g, overlap));
    MinorCertificate disconnected = cert;
    disconnected.witness_set = vs_bit(1) | vs_bit(2);  // two leaves: not connected
    CHECK_FALSE(certificate_valid(g, disconnected));
    MinorCertificate thin = cert;
    thin.boundary = vs_bit(1);
    CHECK_FALSE(certificate_valid(g, thin));
}

TEST_CASE("adding an edge never destroys a witness") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) edges.emplace_back(i, j);
        Graph g = build_graph(n, std::span<const std::pair<int, int>>(edges));
        int t = 3 + static_cast<int>(rng() % 2);
        if (has_k1t_minor(g, t).kind != MinorCertificate::Kind::witness) continue;
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v || g.has_edge(u, v)) continue;
        CHECK(has_k1t_minor(g.with_edge(u, v), t).kind == MinorCertificate::Kind::witness);
    }
}

TEST_CASE("branch set oracle basics") {
    CHECK(branch_set_oracle(complete(4), 3));
    CHECK_FALSE(branch_set_oracle(path(6), 3));
    CHECK_THROWS_AS(branch_set_oracle(complete(11), 3), capacity_error);
    CHECK_THROWS_AS(branch_set_oracle_unrestricted(complete(8), 3), capacity_error);
}

TEST_CASE("scan, oracle and unrestricted oracle agree on all connected graphs, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected(n, n > 1 ? n - 1 : 0)) {
            for (int t : {3, 4, 5}) {
                bool scan = has_k1t_minor(g, t).kind == MinorCertificate::Kind::witness;
                CHECK(scan == branch_set_oracle(g, t));
                CHECK(scan == branch_set_oracle_unrestricted(g, t));
            }
        }
    }
}

TEST_CASE("singleton-leaf reduction holds on all connected graphs, n = 7") {
    long mismatches = 0;
    for (const Graph& g : enumerate_connected(7, 6))
        for (int t : {3, 4, 5})
            if (branch_set_oracle(g, t) != branch_set_oracle_unrestricted(g, t)) ++mismatches;
    CHECK(mismatches == 0);
}
