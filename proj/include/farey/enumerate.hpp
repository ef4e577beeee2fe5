#pragma once

#include <vector>

#include "farey/cf.hpp"
#include "farey/path.hpp"
#include "farey/rational.hpp"

namespace farey {

// Every finite expansion of a vertex, in canonical (b, terms) order.
struct ExpansionSet {
    Rational target;
    Modulus modulus;
    std::vector<CFExpansion> expansions;
};

// Sorts by gate numerator, then term list; keeps golden comparisons stable.
bool cf_less(const CFExpansion& a, const CFExpansion& b);

// Complete set of finite expansions of x over F_{p^l}: every well directed
// path from infinity to x ends in one of the at most two smaller-denominator
// neighbors, so the sets recurse backwards; results are memoized per vertex.
ExpansionSet enumerate_expansions(const Rational& x, long p, int l);

// Independent oracle: forward depth-first search over bounded neighbor scans
// for all well directed paths from infinity to x.  Any increasing path into
// x stays within 1/q of x at denominator q, which prunes the search.
// Rejects den(x) above the cost guard.
std::vector<PathTheta> brute_force_paths(const Rational& x, long p, int l,
                                         long den_guard = 100000);

// Per-vertex agreement between the recursive enumeration and the forward
// search, with the path sets matched elementwise through the continued
// fraction correspondence.
struct CrossCheckEntry {
    Rational x;
    size_t enumerated;
    size_t brute;
    bool match;
};
struct CrossCheckReport {
    std::vector<CrossCheckEntry> entries;
    bool all_match;
};

CrossCheckReport count_cross_check(const std::vector<Rational>& sample, long p, int l);

} // namespace farey
