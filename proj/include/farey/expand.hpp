#pragma once

#include <vector>

#include "farey/cf.hpp"
#include "farey/modulus.hpp"
#include "farey/rational.hpp"
#include "farey/real_input.hpp"

namespace farey {

// Gate vertex numerator b for expanding x over F_{p^l}: floor(p^l x) or its
// successor, picked by coprimality with p, and by comparison with the
// mediant of the two gate candidates when both are coprime.  For p = 2 this
// always equals 2*floor(2^{l-1} x) + 1.
mpz_class choose_gate(const RealInput& x, long p, int l);

// Running state of one expansion: the convergent table built so far and the
// current fin y_i.  Numerators stay coprime to p throughout.
struct ExpanderState {
    Modulus modulus;
    long p;
    int l;
    std::vector<CFTerm> terms;
    std::vector<std::pair<mpz_class, mpz_class>> pq;   // (1,0), (b,N), ...
    RealInput y;
};

ExpanderState make_expander(const RealInput& x, long p, int l);

enum class StepKind { Emitted, Terminated, BacktrackNeeded };

// One algorithm step: eps = sign(y); a is the first of the candidates
// ceil(1/|y| - 1), 1/|y| (when integral), floor(1/|y| + 1) that is >= 1,
// avoids the residue class -eps p_{i-2} p_{i-1}^{-1} mod p, and keeps
// a + eps >= 1; then y <- 1/|y| - a.  When no candidate survives the caller
// must backtrack (the only such configuration forces a = 1, eps = -1).
StepKind next_term(ExpanderState& st);

// Replaces the previous partial quotient c by c - 1 (the proof's alternative
// choice), which flips the stuck step to eps = +1.  A state where c - 1 is
// itself invalid cannot be reached and raises a hard error.
void backtrack_fix(ExpanderState& st);

struct RealExpansion {
    CFExpansion cf;
    RealInput residual_fin;    // y_{n+1}; zero iff exact
    bool exact;
};

// Finite expansion of a vertex of F_{p^l}; deterministic, and its value
// re-evaluates to x.
CFExpansion expand_rational(const Rational& x, long p, int l);

// First max_terms terms of the expansion of any exact real, plus the exact
// residual fin; stops early when the expansion terminates.
RealExpansion expand_real(const RealInput& x, long p, int l, int max_terms);

// p = 2 closed form: b = 2 floor(2^{l-1} x) + 1 and a_i = 2 floor((1 + 1/|y_i|)/2);
// every partial quotient comes out even.
RealExpansion expand_dyadic(const RealInput& x, int l, int max_terms);

long prime_power_value(long p, int l);   // p^l with overflow check

} // namespace farey
