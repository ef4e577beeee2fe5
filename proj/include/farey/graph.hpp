#pragma once

#include <utility>
#include <vector>

#include "farey/modulus.hpp"
#include "farey/rational.hpp"

namespace farey {

// Membership in the vertex set X_N: infinity, or a reduced p/q with N | q.
bool in_xn(const Rational& x, const Modulus& n);

// Adjacency |rq - sp| = N.  Infinity = 1/0 takes part through the same
// formula, so it is adjacent to p/q exactly when q = N.
bool adjacent(const Rational& p, const Rational& q, const Modulus& n);

// The (at most two) vertices adjacent to finite x with smaller denominator,
// found by the extended Euclidean algorithm and filtered by membership.
// Requires den(x) > N; sorted by value.
std::vector<Rational> neighbors_below(const Rational& x, const Modulus& n);

// All vertices adjacent to finite x with denominator <= qmax, sorted by
// value; infinity is appended last when den(x) = N.  Rejects qmax < N.
std::vector<Rational> neighbors_bounded(const Rational& x, const Modulus& n, long qmax);

// Neighbors of infinity with value in [lo, hi]: the gates b/N, gcd(b, N) = 1.
std::vector<Rational> gates_in_window(const Modulus& n, const Rational& lo, const Rational& hi);

// An edge with canonical endpoint order: finite endpoints sorted by value,
// infinity stored as hi.
struct Edge {
    Rational lo, hi;

    static Edge make(const Rational& a, const Rational& b);
    bool operator==(const Edge& o) const { return lo == o.lo && hi == o.hi; }
    bool operator<(const Edge& o) const;
};

// Whether the hyperbolic geodesics of two edges cross: finite edges cross
// when their endpoints strictly interleave, a vertical edge at v crosses
// (c, d) when c < v < d.  Shared endpoints never cross.
bool edges_cross(const Edge& e1, const Edge& e2);

// F_N is connected exactly for N = 1 and prime powers; decided by the
// classification, not by search.
bool is_connected(const Modulus& n);

// For N with two distinct prime divisors: consecutive integers 0 < A < B < N
// both sharing a factor with N, built from m*p - n*q = 1 over the two
// smallest prime divisors.  No vertex of X_N lies in (A/N, B/N).
std::pair<long, long> disconnection_witness(const Modulus& n);

// One step of the connectivity induction: an adjacent vertex with strictly
// smaller denominator.  Solve r*y - s*x = 1 with 0 < s < y for x = num/(N*y);
// take r/(N*s) when it is a vertex, else (x-r)/(N*(y-s)).  Requires a prime
// power modulus and den(x) > N.
Rational ancestor_step(const Rational& x, const Modulus& n);

// Element of PSL(2, Z) acting on vertices by (a*num + b*den)/(c*num + d*den).
struct Mobius {
    mpz_class a, b, c, d;
};

Rational apply_mobius(const Mobius& g, const Rational& v);

// gamma sending the finite vertex p to infinity and its neighbor q to a gate
// m/N; gamma preserves X_N and adjacency, so it transports paths.
Mobius normalize_edge(const Rational& p, const Rational& q, const Modulus& n);

} // namespace farey
