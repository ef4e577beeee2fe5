#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "farey/modulus.hpp"
#include "farey/rational.hpp"
#include "farey/real_input.hpp"

namespace farey {

struct CFTerm {
    int eps;        // +1 or -1
    mpz_class a;    // >= 1

    bool operator==(const CFTerm& o) const { return eps == o.eps && a == o.a; }
};

// A continued fraction 1/(0+ N/(b+ e1/(a1+ e2/(a2+ ...)))) with gcd(b, N) = 1.
// Validity means: a_i + e_{i+1} >= 1, a_i + e_i >= 1, and every convergent
// numerator stays coprime to N.
struct CFExpansion {
    Modulus modulus;
    mpz_class b;
    std::vector<CFTerm> terms;

    bool operator==(const CFExpansion& o) const {
        return modulus.value() == o.modulus.value() && b == o.b && terms == o.terms;
    }
};

struct CFViolation {
    int index;          // term index i >= 0 (0 = the gate b)
    int condition;      // 1: a_i + e_{i+1} >= 1, 2: a_i + e_i >= 1, 3: gcd(p_i, N) = 1
    std::string message;
};

// First violated condition, or nullopt when the expansion is valid.
std::optional<CFViolation> validate_cf(const CFExpansion& cf);

// Convergent table (p_i, q_i) for i = -1..n starting from the sentinel (1, 0)
// and (b, N); consecutive entries satisfy |p_{i+1} q_i - q_{i+1} p_i| = N and
// the q_i increase strictly.
struct ConvergentSeq {
    std::vector<std::pair<mpz_class, mpz_class>> pq;

    // index -1 addresses the sentinel
    const std::pair<mpz_class, mpz_class>& at(long i) const { return pq.at(i + 1); }
    long last_index() const { return static_cast<long>(pq.size()) - 2; }
    Rational value(long i) const { return Rational(at(i).first, at(i).second); }
};

ConvergentSeq convergents(const CFExpansion& cf);

// Value of a finite expansion: the last convergent, cross-checked against
// bottom-up evaluation of the nested fraction.
Rational evaluate(const CFExpansion& cf);

// Fins y_1..y_{n+1} of a finite expansion (y_{n+1} = 0), from the recurrence
// y_i = e_i/(a_i + y_{i+1}).  sign(y_i) = e_i and |y_i| <= 1 throughout.
std::vector<RealInput> fins(const CFExpansion& cf);

// Fins of a prefix of a (possibly infinite) expansion of the exact value x:
// y_1 = N*x - b, then y_{i+1} = 1/|y_i| - a_i.  Checks sign(y_i) = e_i.
std::vector<RealInput> fins_prefix(const CFExpansion& cf, const RealInput& x);

// Value of any expansion whose convergents agree with seq up to index i and
// whose next fin is y: (p_i + y p_{i-1}) / (q_i + y q_{i-1}).
RealInput tail_reconstruct(const ConvergentSeq& seq, long i, const RealInput& y);

// Exact |x - p_n/q_n| for x = tail_reconstruct(seq, n, y_next), computed both
// directly and as N |y| / (q_n (q_n + y q_{n-1})); the two must agree.
RealInput error_term(const ConvergentSeq& seq, long n, const RealInput& y_next);

// Canonical text form "1/0+ 5/1+ 1/2+ -1/3" (head, N/b, then eps_i/a_i).
std::string cf_text(const CFExpansion& cf);
CFExpansion parse_cf(std::string_view text);

} // namespace farey
