#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "qextremal/canonical.hpp"
#include "qextremal/enumerate.hpp"
#include "qextremal/families.hpp"

using namespace qext;

TEST_CASE("class counts match the known values") {
    CHECK(enumerate_connected(1, 0).size() == 1);
    CHECK(enumerate_connected(2, 1).size() == 1);
    CHECK(enumerate_connected(3, 2).size() == 2);
    CHECK(enumerate_connected(4, 3).size() == 6);
    CHECK(enumerate_connected(5, 4).size() == 21);
    CHECK(enumerate_connected(6, 5).size() == 112);
    CHECK(enumerate_connected(7, 6).size() == 853);
    CHECK(enumerate_connected(8, 7).size() == 11117);
}

TEST_CASE("degree-capped enumeration") {
    std::vector<Graph> paths_and_cycles = enumerate_connected(6, 2);
    REQUIRE(paths_and_cycles.size() == 2);
    CHECK(is_isomorphic(paths_and_cycles[0], path(6)) != is_isomorphic(paths_and_cycles[0], cycle(6)));
    CHECK(is_isomorphic(paths_and_cycles[1], path(6)) != is_isomorphic(paths_and_cycles[1], cycle(6)));

    CHECK(enumerate_connected(4, 1).empty());  // no connected graph on 4 vertices with max degree 1
    CHECK(enumerate_connected(2, 0).empty());
}

TEST_CASE("output is sorted, duplicate-free, canonically labeled") {
    std::vector<Graph> stream = enumerate_connected(6, 5);
    CanonicalForm prev;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        CanonicalAnalysis an = canonical_analysis(stream[i]);
        CHECK(an.canonical_graph == stream[i]);  // already in canonical labeling
        if (i > 0) CHECK(prev < an.form);
        prev = an.form;
    }
}

TEST_CASE("matches the filter-all fallback through n = 6") {
    for (int n = 2; n <= 6; ++n) {
        for (int max_deg = 2; max_deg <= n - 1; ++max_deg) {
            std::set<CanonicalForm> brute = oracle::enumerate_connected_bruteforce(n, max_deg);
            std::set<CanonicalForm> fast;
            for (const Graph& g : enumerate_connected(n, max_deg)) fast.insert(canonical_form(g));
            CHECK(fast == brute);
        }
    }
}

TEST_CASE("class sizes add up to the labeled count at n = 7") {
    // Orbit-stabilizer: sum of 7!/|Aut| over classes equals the number of
    // connected labeled graphs, counted independently by mask scan.
    double labeled_sum = 0.0;
    for (const Graph& g : enumerate_connected(7, 6))
        labeled_sum += 5040.0 / static_cast<double>(canonical_analysis(g).automorphism_count);
    CHECK(labeled_sum == 1866256.0);
    CHECK(oracle::labeled_connected_count(7) == 1866256);
    CHECK(oracle::labeled_connected_count(6) == 26704);
}

TEST_CASE("worker count does not change the stream") {
    std::vector<Graph> one = enumerate_connected(7, 4, 1);
    std::vector<Graph> four = enumerate_connected(7, 4, 4);
    CHECK(one == four);
}

TEST_CASE("caps and degenerate inputs") {
    CHECK_THROWS_AS(enumerate_connected(11, 4), capacity_error);
    CHECK_THROWS_AS(enumerate_connected(0, 1), domain_error);
    CHECK(enumerate_connected(1, 5).size() == 1);  // max_deg clamps to n-1
}
