#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "farey/cf.hpp"
#include "farey/graph.hpp"
#include "farey/modulus.hpp"
#include "farey/rational.hpp"

namespace farey {

// A path from infinity with strictly increasing denominators:
// vertices[0] = inf, then the gate b/N, then denominators N < q_1 < ...
struct PathTheta {
    Modulus modulus;
    std::vector<Rational> vertices;

    const Rational& last() const { return vertices.back(); }
    // number of edges minus one; the single-vertex path {inf} has n = -1
    long n() const { return static_cast<long>(vertices.size()) - 2; }

    bool operator==(const PathTheta& o) const {
        return modulus.value() == o.modulus.value() && vertices == o.vertices;
    }
};

bool validate_path(const PathTheta& path);

enum class EdgeClass { Changing, Retaining };

// Classification of the candidate edge last(path) -> q relative to the path:
// Changing when q lies strictly between the previous vertex and the end,
// Retaining otherwise.  The head at infinity acts as +inf, which makes the
// first step consistent with eps_1 = -1 iff value < gate.
EdgeClass classify_extension(const PathTheta& path, const Rational& q);

// Rank of the candidate edge within its class, 1-based, ordered by
// decreasing radius (equivalently increasing denominator).  Candidates are
// all vertices adjacent to the path end that are not already on the path;
// the equal- or smaller-denominator mediant-difference candidate counts too.
std::pair<EdgeClass, long> semicircle_rank(const PathTheta& path, const Rational& q);

// Partial quotient of the k-th semicircle on the given side: the k-th value
// in 1, 2, 3, ... skipping the residue class a = -eps p_{i-2} p_{i-1}^{-1}
// (mod p) and skipping candidates already on the path.  Prime power moduli.
mpz_class coeff_of_rank(const PathTheta& path, EdgeClass side, long k);

// A path is well directed when, whenever P_{i-1} ~ P_{i+1} closes a
// triangle, the following edge P_{i+1} -> P_{i+2} changes direction.
bool is_well_directed(const PathTheta& path);

// Repairs a path into a well directed one with the same endpoints by
// repeatedly deleting the vertex before the first violation.
PathTheta make_well_directed(PathTheta path);

// The correspondence between well directed paths and continued fractions:
// terms solve p_i = a_i p_{i-1} + eps_i p_{i-2} (same for q).
CFExpansion path_to_cf(const PathTheta& path);
PathTheta cf_to_path(const CFExpansion& cf);

// Increasing-denominator path from infinity built by iterated ancestor
// steps; prime power moduli.
PathTheta path_from_infinity(const Rational& x, const Modulus& n);

// Text form "inf -> 1/3 -> 2/9 -> 5/21".
std::string path_str(const PathTheta& path);
PathTheta parse_path(std::string_view text, const Modulus& n);

} // namespace farey
