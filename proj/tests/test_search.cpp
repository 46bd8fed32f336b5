#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "qextremal/canonical.hpp"
#include "qextremal/families.hpp"
#include "qextremal/graph6.hpp"
#include "qextremal/report.hpp"
#include "qextremal/search.hpp"

using namespace qext;
using Catch::Approx;

TEST_CASE("config validation") {
    CHECK_THROWS_AS(validate(SearchConfig{5, 2}), domain_error);
    CHECK_THROWS_AS(validate(SearchConfig{4, 4}), domain_error);
    CHECK_THROWS_AS(validate(SearchConfig{11, 3}), capacity_error);
    CHECK_THROWS_AS(validate(SearchConfig{5, 4, 1e-10, 1e-10}), domain_error);  // gap < 10*tol
    CHECK_NOTHROW(validate(SearchConfig{5, 4}));
}

TEST_CASE("cycles win for t = 3") {
    for (int n = 4; n <= 7; ++n) {
        VerifyResult vr = verify_theorem(SearchConfig{n, 3});
        CHECK(vr.pass);
        REQUIRE(vr.report.extremal.size() == 1);
        CHECK(vr.report.extremal.front().form == canonical_form(cycle(n)));
        CHECK(vr.report.extremal.front().q1 == Approx(4.0).margin(1e-8));
        CHECK(vr.report.family_size == 2);  // the path and the cycle
    }
}

TEST_CASE("odd-order winner at t = 4, n = 5") {
    SearchReport report = extremal_search(SearchConfig{5, 4});
    CHECK(report.family_size == 10);
    REQUIRE(report.extremal.size() == 1);
    CHECK(report.extremal.front().form == canonical_form(odd_case_family(4, 2)));
    // Frozen from an independent dense-solver run.
    CHECK(report.extremal.front().q1 == Approx(5.7784571183).margin(1e-8));
    CHECK(report.runner_up_q1 == Approx(5.4679323649).margin(1e-8));
    CHECK(report.matches_prediction);
    CHECK(report.unique);
}

TEST_CASE("subdivided clique wins at t = 4, n = 6 and 7") {
    SearchReport r6 = extremal_search(SearchConfig{6, 4});
    CHECK(r6.family_size == 16);
    CHECK(r6.extremal.front().form == canonical_form(subdivided_clique(6, 4)));
    CHECK(r6.extremal.front().q1 == Approx(5.7092753594).margin(1e-8));
    // The runner-up is the double-pendant graph: its cubic root shows up here.
    CHECK(r6.runner_up_q1 == Approx(cubic_largest_root(double_pendant_cubic(4))).margin(1e-8));

    SearchReport r7 = extremal_search(SearchConfig{7, 4});
    CHECK(r7.family_size == 20);
    CHECK(r7.extremal.front().form == canonical_form(subdivided_clique(7, 4)));
    CHECK(r7.extremal.front().q1 == Approx(5.6878263618).margin(1e-8));
}

TEST_CASE("matching complement wins at t = 5, n = 6") {
    SearchReport report = extremal_search(SearchConfig{6, 5});
    CHECK(report.extremal.front().form == canonical_form(kn_minus_perfect_matching(6)));
    CHECK(report.extremal.front().q1 == Approx(8.0).margin(1e-8));  // 2t-2, regular upper bound tight
    CHECK(report.structural.delta == 4);
}

TEST_CASE("forcing the literal odd-order prediction fails") {
    Graph literal = complete(5).without_edge(0, 1).without_edge(2, 3);
    VerifyResult vr = verify_theorem(SearchConfig{5, 4}, nullptr, literal);
    CHECK_FALSE(vr.pass);
    CHECK_FALSE(vr.report.prediction_minor_free);
    CHECK_FALSE(vr.report.matches_prediction);
    CHECK(vr.report.unique);  // the search itself is unaffected by the override
}

TEST_CASE("predicted extremal graph selection") {
    CHECK(canonical_form(predicted_extremal(3, 4)) == canonical_form(cycle(4)));
    CHECK(canonical_form(predicted_extremal(4, 5)) == canonical_form(odd_case_family(4, 2)));
    CHECK(canonical_form(predicted_extremal(5, 6)) == canonical_form(kn_minus_perfect_matching(6)));
    CHECK(canonical_form(predicted_extremal(4, 7)) == canonical_form(subdivided_clique(7, 4)));
}

TEST_CASE("structural audit fields") {
    SearchReport report = extremal_search(SearchConfig{6, 4});
    CHECK(report.structural.delta == 3);
    CHECK(report.structural.delta_is_t_minus_1);
    CHECK(report.structural.a_size == 3);
    CHECK(report.structural.db_zero_on_a0);
    CHECK(report.structural.db_le1_on_a1);
    CHECK(report.structural.db_le2_on_b);
}

TEST_CASE("disconnected competitor summary") {
    SearchReport report = extremal_search(SearchConfig{6, 4});
    CHECK(report.disconnected_best_q1 == Approx(6.0).margin(1e-8));  // 2t-2 via K_t plus isolated
    Graph witness = graph6_decode(report.disconnected_witness_g6);
    CHECK(witness.vertex_count() == 6);
    CHECK_FALSE(witness.is_connected());
    CHECK(has_k1t_minor(witness, 4).kind == MinorCertificate::Kind::absent);
}

TEST_CASE("degree cap never drops a minor-free class") {
    // The search generator caps degrees at t-1; rerun uncapped at n = 6 and
    // compare the surviving families.
    for (int t : {4, 5}) {
        std::set<CanonicalForm> capped, uncapped;
        for (const Graph& g : enumerate_connected(6, t - 1))
            if (has_k1t_minor(g, t).kind == MinorCertificate::Kind::absent)
                capped.insert(canonical_form(g));
        for (const Graph& g : enumerate_connected(6, 5))
            if (has_k1t_minor(g, t).kind == MinorCertificate::Kind::absent)
                uncapped.insert(canonical_form(g));
        CHECK(capped == uncapped);
    }
}

TEST_CASE("audit suite for t = 3 holds across all feasible orders") {
    AuditSuiteReport suite = audit_suite(3, 4, 9);
    CHECK(suite.pass);
    for (const AuditSuiteEntry& e : suite.entries) CHECK(e.q_star == Approx(4.0).margin(1e-8));
}

TEST_CASE("audit suite over a range of orders") {
    AuditSuiteReport suite = audit_suite(4, 5, 7);
    CHECK(suite.pass);
    REQUIRE(suite.entries.size() == 3);
    CHECK(suite.entries[0].q_star == Approx(5.7784571183).margin(1e-8));
    CHECK(suite.entries[1].q_star == Approx(5.7092753594).margin(1e-8));
    CHECK(suite.entries[2].q_star == Approx(5.6878263618).margin(1e-8));
    for (const Check& c : suite.checks) {
        INFO(c.name << " expected " << c.expected << " observed " << c.observed);
        CHECK(c.pass);
    }
    CHECK_THROWS_AS(audit_suite(8, 9, 9), domain_error);
    CHECK_THROWS_AS(audit_suite(4, 4, 5), domain_error);
}

TEST_CASE("reports are byte-identical across worker counts") {
    SearchReport one = extremal_search(SearchConfig{6, 4, kDefaultEigTol, 1e-6, 1});
    SearchReport four = extremal_search(SearchConfig{6, 4, kDefaultEigTol, 1e-6, 4});
    CHECK(to_json(one).dump(2) == to_json(four).dump(2));
}

TEST_CASE("verify checks carry the failing assertion by name") {
    Graph literal = complete(5).without_edge(0, 1).without_edge(2, 3);
    VerifyResult vr = verify_theorem(SearchConfig{5, 4}, nullptr, literal);
    bool found = false;
    for (const Check& c : vr.checks)
        if (c.name == "matches_prediction" && !c.pass) found = true;
    CHECK(found);
}
