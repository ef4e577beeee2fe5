#include "farey/expand.hpp"

#include <stdexcept>

#include "farey/graph.hpp"

namespace farey {

long prime_power_value(long p, int l) {
    if (p < 2 || l < 1)
        throw std::domain_error("modulus must be p^l with p prime, l >= 1");
    long n = 1;
    for (int i = 0; i < l; ++i) {
        if (n > (1L << 58) / p)
            throw std::domain_error("p^l too large");
        n *= p;
    }
    return n;
}

mpz_class choose_gate(const RealInput& x, long p, int l) {
    long n = prime_power_value(p, l);
    mpz_class f = mul(x, RealInput(mpq_class(n))).floor();
    mpz_class g1 = f, g2 = f + 1;
    auto coprime = [&](const mpz_class& g) { return gcd(g, mpz_class(p)) == 1; };
    if (!coprime(g2))
        return g1;
    if (!coprime(g1))
        return g2;
    // both gates admissible: compare with their mediant (g1+g2)/(2N); the
    // boundary case x == mediant keeps the lower gate
    mpq_class mediant(g1 + g2, 2 * mpz_class(n));
    mediant.canonicalize();
    return sub(x, RealInput(mediant)).sign() > 0 ? g2 : g1;
}

ExpanderState make_expander(const RealInput& x, long p, int l) {
    long n = prime_power_value(p, l);
    mpz_class b = choose_gate(x, p, l);
    ExpanderState st{Modulus(n), p, l, {}, {}, RealInput()};
    st.pq.emplace_back(1, 0);
    st.pq.emplace_back(b, n);
    st.y = sub(mul(x, RealInput(mpq_class(n))), RealInput(mpq_class(b)));
    return st;
}

namespace {

long excluded_residue(const ExpanderState& st, int eps) {
    const mpz_class& p_prev = st.pq[st.pq.size() - 2].first;
    const mpz_class& p_cur = st.pq.back().first;
    mpz_class t = (-eps * p_prev * mod_inverse(p_cur, mpz_class(st.p))) % st.p;
    mpz_class r = (t + st.p) % st.p;
    return r.get_si();
}

bool is_integer(const RealInput& v) {
    return v.is_rational() && v.as_rational().get_den() == 1;
}

} // namespace

StepKind next_term(ExpanderState& st) {
    if (st.y.is_zero())
        return StepKind::Terminated;
    int eps = st.y.sign();
    RealInput inv = st.y.recip_minus(0);    // 1/|y|
    mpz_class m = inv.floor();
    std::vector<mpz_class> candidates;
    if (is_integer(inv))
        candidates = {m - 1, m, m + 1};
    else
        candidates = {m, m + 1};
    long excluded = excluded_residue(st, eps);
    const mpz_class& q1 = st.pq[st.pq.size() - 1].second;
    const mpz_class& q0 = st.pq[st.pq.size() - 2].second;
    for (const mpz_class& a : candidates) {
        if (a < 1 || a + eps < 1)
            continue;
        if (a * q1 + eps * q0 <= q1)
            continue;   // only bites at the first term, where q_0 = 0
        if ((a % st.p + st.p) % st.p == excluded)
            continue;
        st.y = st.y.recip_minus(a);
        st.terms.push_back(CFTerm{eps, a});
        const mpz_class& p1 = st.pq[st.pq.size() - 1].first;
        const mpz_class& p0 = st.pq[st.pq.size() - 2].first;
        st.pq.emplace_back(a * p1 + eps * p0, a * q1 + eps * q0);
        return StepKind::Emitted;
    }
    return StepKind::BacktrackNeeded;
}

void backtrack_fix(ExpanderState& st) {
    if (st.terms.empty())
        throw std::logic_error("backtrack with no previous term");
    CFTerm& prev = st.terms.back();
    mpz_class c = prev.a;
    if (c - 1 < 1 || c - 1 + prev.eps < 1)
        throw std::logic_error("previous term has no alternative; contradicts the algorithm");
    st.pq.pop_back();
    long ex = excluded_residue(st, prev.eps);
    if (((c - 1) % st.p + st.p) % st.p == ex)
        throw std::logic_error("alternative partial quotient hits the excluded residue");
    prev.a = c - 1;
    const auto& [p1, q1] = st.pq[st.pq.size() - 1];
    const auto& [p0, q0] = st.pq[st.pq.size() - 2];
    if (prev.a * q1 + prev.eps * q0 <= q1)
        throw std::logic_error("alternative partial quotient stalls the denominators");
    st.pq.emplace_back(prev.a * p1 + prev.eps * p0, prev.a * q1 + prev.eps * q0);
    // y_i = 1/|y_{i-1}| - c, so the alternative shifts it up by one and the
    // stuck step reruns with eps = +1
    st.y = add(st.y, RealInput(mpq_class(1)));
}

namespace {

RealExpansion run(ExpanderState st, long max_terms) {
    bool backtracked_last = false;
    while (static_cast<long>(st.terms.size()) < max_terms) {
        switch (next_term(st)) {
        case StepKind::Terminated:
            return {CFExpansion{st.modulus, st.pq[1].first, std::move(st.terms)}, st.y, true};
        case StepKind::Emitted:
            backtracked_last = false;
            break;
        case StepKind::BacktrackNeeded:
            if (backtracked_last)
                throw std::logic_error("two consecutive backtracks; contradicts the algorithm");
            backtrack_fix(st);
            backtracked_last = true;
            break;
        }
    }
    bool exact = st.y.is_zero();
    return {CFExpansion{st.modulus, st.pq[1].first, std::move(st.terms)}, st.y, exact};
}

} // namespace

CFExpansion expand_rational(const Rational& x, long p, int l) {
    long n = prime_power_value(p, l);
    Modulus mod(n);
    if (x.is_infinity() || !in_xn(x, mod))
        throw std::domain_error(x.str() + " is not a finite vertex of F_" + std::to_string(n));
    RealExpansion out = run(make_expander(RealInput(x), p, l), 1000000);
    if (!out.exact)
        throw std::logic_error("expansion of a vertex did not terminate");
    if (evaluate(out.cf) != x)
        throw std::logic_error("expansion of " + x.str() + " evaluates elsewhere");
    return out.cf;
}

RealExpansion expand_real(const RealInput& x, long p, int l, int max_terms) {
    if (max_terms < 0)
        throw std::domain_error("max_terms must be >= 0");
    return run(make_expander(x, p, l), max_terms);
}

RealExpansion expand_dyadic(const RealInput& x, int l, int max_terms) {
    if (max_terms < 0)
        throw std::domain_error("max_terms must be >= 0");
    long n = prime_power_value(2, l);
    mpz_class b = 2 * mul(x, RealInput(mpq_class(n / 2))).floor() + 1;
    ExpanderState st{Modulus(n), 2, l, {}, {}, RealInput()};
    st.pq.emplace_back(1, 0);
    st.pq.emplace_back(b, n);
    st.y = sub(mul(x, RealInput(mpq_class(n))), RealInput(mpq_class(b)));
    while (static_cast<long>(st.terms.size()) < max_terms && !st.y.is_zero()) {
        int eps = st.y.sign();
        RealInput inv = st.y.recip_minus(0);
        mpz_class a = 2 * div(add(inv, RealInput(mpq_class(1))), RealInput(mpq_class(2))).floor();
        st.y = st.y.recip_minus(a);
        st.terms.push_back(CFTerm{eps, a});
        const auto& [p1, q1] = st.pq[st.pq.size() - 1];
        const auto& [p0, q0] = st.pq[st.pq.size() - 2];
        st.pq.emplace_back(a * p1 + eps * p0, a * q1 + eps * q0);
    }
    bool exact = st.y.is_zero();
    return {CFExpansion{st.modulus, b, std::move(st.terms)}, st.y, exact};
}

} // namespace farey
