#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "farey/sweeps.hpp"

using namespace farey;

TEST_CASE("window vertex and edge collection") {
    auto verts = vertices_in_window(Modulus(3), Rational(0), Rational(1), 9);
    // dens 3, 6, 9 in [0, 1]: 1/3 2/3, 1/6 5/6, and the six ninths
    CHECK(verts.size() == 10);
    auto edges = edges_in_window(Modulus(3), Rational(0), Rational(1), 9);
    CHECK(!edges.empty());
    for (const Edge& e : edges) {
        if (!e.hi.is_infinity())
            CHECK(adjacent(e.lo, e.hi, Modulus(3)));
    }
    // deterministic order
    auto again = edges_in_window(Modulus(3), Rational(0), Rational(1), 9);
    CHECK(std::equal(edges.begin(), edges.end(), again.begin(), again.end()));
}

TEST_CASE("serial and parallel kernels produce identical reports") {
    {
        CrossingReport s = no_crossing_scan_serial(Modulus(3), Rational(-1), Rational(2), 45);
        CrossingReport p = no_crossing_scan(Modulus(3), Rational(-1), Rational(2), 45);
        CHECK(s.edges == p.edges);
        CHECK(s.pairs == p.pairs);
        CHECK(s.violations.size() == p.violations.size());
        CHECK(s.violations.empty());
    }
    {
        TreeReport s = tree_uniqueness_scan_serial(1, 96);
        TreeReport p = tree_uniqueness_scan(1, 96);
        CHECK(s.vertices == p.vertices);
        CHECK(s.failures == p.failures);
        CHECK(s.failures.empty());
    }
    {
        OracleReport s = oracle_scan_serial(5, 1, 80);
        OracleReport p = oracle_scan(5, 1, 80);
        CHECK(s.vertices == p.vertices);
        CHECK(s.paths == p.paths);
        CHECK(s.mismatches == p.mismatches);
        CHECK(s.mismatches.empty());
    }
    {
        ConnectivityReport s = connectivity_scan_serial(800);
        ConnectivityReport p = connectivity_scan(800);
        CHECK(s.checked == p.checked);
        CHECK(s.disagreements == p.disagreements);
        CHECK(s.disagreements.empty());
    }
    {
        SoundnessReport s = soundness_scan_serial(3, 1, 60, 32, 99);
        SoundnessReport p = soundness_scan(3, 1, 60, 32, 99);
        CHECK(s.tested == p.tested);
        CHECK(s.failures == p.failures);
        CHECK(s.failures.empty());
    }
    {
        ExhaustiveReport s = exhaustive_soundness_scan_serial(200);
        ExhaustiveReport p = exhaustive_soundness_scan(200);
        CHECK(s.tested == p.tested);
        CHECK(s.failures == p.failures);
        CHECK(s.failures.empty());
    }
}

TEST_CASE("every vertex with den <= 2000 expands and re-evaluates exactly") {
    ExhaustiveReport r = exhaustive_soundness_scan(2000);
    CHECK(r.failures.empty());
    CHECK(r.tested > 1400000);
}

TEST_CASE("witness gap is unreachable from infinity") {
    for (long n : {6L, 10L, 12L, 15L}) {
        ReachReport r = bfs_witness_check(Modulus(n), 40 * n);
        CHECK(r.visited > 0);
        CHECK_FALSE(r.reached_gap);
        CHECK(r.witness_b == r.witness_a + 1);
    }
}

TEST_CASE("no crossings across several levels") {
    for (long n : {1L, 5L}) {
        CrossingReport r = no_crossing_scan(Modulus(n), Rational(0), Rational(1), 20 * n);
        CHECK(r.violations.empty());
        CHECK(r.pairs > 0);
    }
}
