#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "farey/enumerate.hpp"
#include "farey/graph.hpp"
#include "farey/modulus.hpp"
#include "farey/rational.hpp"

namespace farey {

// Bulk property sweeps over graph windows and vertex families.  Each kernel
// has a serial reference implementation and an OpenMP-parallel one computing
// the same report; the parallel form is the default entry point and the
// serial form stays available for equivalence tests and benchmarks.

// All vertices of F_N in [lo, hi] with den <= qmax.
std::vector<Rational> vertices_in_window(const Modulus& n, const Rational& lo,
                                         const Rational& hi, long qmax);

// All edges with both endpoints among those vertices (infinity included).
std::vector<Edge> edges_in_window(const Modulus& n, const Rational& lo,
                                  const Rational& hi, long qmax);

struct CrossingReport {
    std::uint64_t edges = 0;
    std::uint64_t pairs = 0;
    std::vector<std::pair<Edge, Edge>> violations;
};

CrossingReport no_crossing_scan(const Modulus& n, const Rational& lo, const Rational& hi,
                                long qmax);
CrossingReport no_crossing_scan_serial(const Modulus& n, const Rational& lo,
                                       const Rational& hi, long qmax);

// Vertices of F_{2^l} in [0, 1) with den <= den_max: each must have exactly
// one expansion, whose gate obeys the closed form 2 floor(2^{l-1} x) + 1.
struct TreeReport {
    std::uint64_t vertices = 0;
    std::vector<std::string> failures;
};

TreeReport tree_uniqueness_scan(int l, long den_max);
TreeReport tree_uniqueness_scan_serial(int l, long den_max);

// Enumeration vs forward search over all vertices in [0, 1) with den <= den_max.
struct OracleReport {
    std::uint64_t vertices = 0;
    std::uint64_t paths = 0;
    std::vector<std::string> mismatches;
};

OracleReport oracle_scan(long p, int l, long den_max);
OracleReport oracle_scan_serial(long p, int l, long den_max);

// is_connected against an independent prime-power test for every N <= n_max.
struct ConnectivityReport {
    std::uint64_t checked = 0;
    std::vector<long> disagreements;
};

ConnectivityReport connectivity_scan(long n_max);
ConnectivityReport connectivity_scan_serial(long n_max);

// Breadth-first search from infinity over a window around the witness gap
// (A/N, B/N); for composite N with two prime divisors no reached vertex may
// fall strictly inside the gap.
struct ReachReport {
    long witness_a = 0;
    long witness_b = 0;
    std::uint64_t visited = 0;
    bool reached_gap = false;
};

ReachReport bfs_witness_check(const Modulus& n, long qmax);

// evaluate(expand(x)) == x and membership of the deterministic expansion in
// the full enumeration, for pseudo-random vertices.
struct SoundnessReport {
    std::uint64_t tested = 0;
    std::vector<std::string> failures;
};

SoundnessReport soundness_scan(long p, int l, int count, long max_multiple,
                               std::uint64_t seed);
SoundnessReport soundness_scan_serial(long p, int l, int count, long max_multiple,
                                      std::uint64_t seed);

// expand-and-reevaluate every vertex of [0, 1) with den <= den_max across
// the levels 2, 3, 4, 5, 8, 9, 25, 27, 125.
struct ExhaustiveReport {
    std::uint64_t tested = 0;
    std::vector<std::string> failures;
};

ExhaustiveReport exhaustive_soundness_scan(long den_max);
ExhaustiveReport exhaustive_soundness_scan_serial(long den_max);

} // namespace farey
