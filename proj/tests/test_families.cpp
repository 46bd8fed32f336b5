#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "qextremal/canonical.hpp"
#include "qextremal/families.hpp"
#include "qextremal/minor.hpp"
#include "qextremal/spectral.hpp"

using namespace qext;

namespace {

std::vector<int> degree_multiset(const Graph& g) {
    std::vector<int> degrees;
    for (int v = 0; v < g.vertex_count(); ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace

TEST_CASE("basic constructors") {
    CHECK(complete(4).edge_count() == 6);
    Graph k23 = complete_bipartite(2, 3);
    CHECK(k23.edge_count() == 6);
    CHECK(degree_multiset(k23) == std::vector<int>{2, 2, 2, 3, 3});
    CHECK(join(single_vertex(), cycle(4)).edge_count() == 8);
    Graph two_triangles = disjoint_union(complete(3), complete(3));
    CHECK(two_triangles.vertex_count() == 6);
    CHECK(two_triangles.edge_count() == 6);
    CHECK_FALSE(two_triangles.is_connected());
}

TEST_CASE("kn_minus_e") {
    CHECK(is_isomorphic(kn_minus_e(3), path(3)));
    CHECK(degree_multiset(kn_minus_e(4)) == std::vector<int>{2, 2, 3, 3});
    CHECK(kn_minus_e(5).edge_count() == 9);
    CHECK_THROWS_AS(kn_minus_e(1), domain_error);
}

TEST_CASE("kn_minus_perfect_matching") {
    CHECK(is_isomorphic(kn_minus_perfect_matching(4), cycle(4)));
    Graph g6 = kn_minus_perfect_matching(6);
    CHECK(g6.edge_count() == 12);
    CHECK(g6.max_degree() == 4);
    CHECK(g6.min_degree() == 4);
    CHECK_THROWS_AS(kn_minus_perfect_matching(5), domain_error);
    // Regular equality case: q1 = 2t-2 at n = t+1 = 4, t = 3.
    CHECK(q_index(kn_minus_perfect_matching(4)).q1 == Catch::Approx(4.0).margin(1e-10));
}

TEST_CASE("subdivided_clique") {
    CHECK(is_isomorphic(subdivided_clique(5, 3), cycle(5)));
    Graph s2k4 = subdivided_clique(6, 4);
    CHECK(s2k4.edge_count() == 8);
    CHECK(s2k4.max_degree() == 3);
    CHECK(subdivided_clique(4, 4) == complete(4));
    Graph once = subdivided_clique(5, 4);  // one subdivision of a K_4 edge
    CHECK(once.vertex_count() == 5);
    CHECK(once.edge_count() == 6 - 1 + 2);
    CHECK_THROWS_AS(subdivided_clique(3, 4), domain_error);
    CHECK_THROWS_AS(subdivided_clique(5, 2), domain_error);
    for (int t = 3; t <= 7; ++t)
        for (int n = t + 1; n <= t + 5 && n <= 12; ++n) {
            Graph g = subdivided_clique(n, t);
            CHECK(g.is_connected());
            CHECK(g.edge_count() == t * (t - 1) / 2 - 1 + (n - t + 1));
        }
}

TEST_CASE("double_pendant_clique") {
    CHECK(is_isomorphic(double_pendant_clique(3), path(5)));
    Graph t4 = double_pendant_clique(4);
    CHECK(t4.vertex_count() == 6);
    CHECK(t4.edge_count() == 7);
    CHECK(degree_multiset(double_pendant_clique(5)) == std::vector<int>{1, 1, 4, 4, 4, 4, 4});
    CHECK_THROWS_AS(double_pendant_clique(2), domain_error);
}

TEST_CASE("f_family") {
    Graph f238 = f_family(2, 3, 8);  // p = 2, r = 1
    CHECK(f238.vertex_count() == 8);
    CHECK(f238.edge_count() == 13);
    Graph f137 = f_family(1, 3, 7);  // empty join side: p K_t plus K_r on their own
    CHECK(f137.vertex_count() == 7);
    CHECK_FALSE(f137.is_connected());
    Graph f237 = f_family(2, 3, 7);  // p = 2, r = 0
    CHECK(f237.vertex_count() == 7);
    CHECK(f237.is_connected());
    CHECK_THROWS_AS(f_family(0, 3, 5), domain_error);
    CHECK_THROWS_AS(f_family(2, 3, 65), capacity_error);
}

TEST_CASE("odd_case_family structure") {
    Graph g42 = odd_case_family(4, 2);
    CHECK(g42.vertex_count() == 5);
    CHECK(g42.edge_count() == 7);
    // Non-edges are exactly u*w, (A_0)w and the matched pair inside A_1.
    CHECK_FALSE(g42.has_edge(0, 4));
    CHECK_FALSE(g42.has_edge(1, 4));
    CHECK_FALSE(g42.has_edge(2, 3));
    CHECK(degree_multiset(g42) == std::vector<int>{2, 3, 3, 3, 3});

    Graph g64 = odd_case_family(6, 4);
    CHECK(g64.vertex_count() == 7);
    CHECK(g64.edge_count() == 17);
    CHECK(g64.degree(6) == 4);

    CHECK_THROWS_AS(odd_case_family(3, 2), domain_error);
    CHECK_THROWS_AS(odd_case_family(6, 3), domain_error);
    CHECK_THROWS_AS(odd_case_family(6, 0), domain_error);
    CHECK_THROWS_AS(odd_case_family(6, 6), domain_error);
}

TEST_CASE("odd_case_family satisfies its cubic") {
    double q1 = q_index(odd_case_family(4, 2)).q1;
    CHECK(q1 * q1 * q1 - 9 * q1 * q1 + 20 * q1 - 8 == Catch::Approx(0.0).margin(1e-7));
}

TEST_CASE("families are star-minor free as claimed") {
    for (int t = 3; t <= 7; ++t)
        for (int n = t + 1; n <= t + 5; ++n) {
            Graph g = subdivided_clique(n, t);
            CHECK(g.is_connected());
            CHECK(has_k1t_minor(g, t).kind == MinorCertificate::Kind::absent);
        }
    // Even-order near-matching complement: (t-1)-regular and minor-free.
    for (int t : {3, 5, 7}) {
        Graph g = kn_minus_perfect_matching(t + 1);
        CHECK(g.max_degree() == t - 1);
        CHECK(has_k1t_minor(g, t).kind == MinorCertificate::Kind::absent);
    }
    for (int t : {4, 6})
        for (int a1 = 2; a1 <= t - 2; a1 += 2) {
            Graph g = odd_case_family(t, a1);
            CHECK(g.max_degree() == t - 1);
            CHECK(has_k1t_minor(g, t).kind == MinorCertificate::Kind::absent);
        }
}

TEST_CASE("constructors are deterministic") {
    CHECK(subdivided_clique(7, 4) == subdivided_clique(7, 4));
    CHECK(odd_case_family(6, 2) == odd_case_family(6, 2));
    CHECK(f_family(2, 4, 9) == f_family(2, 4, 9));
}
