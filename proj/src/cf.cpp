#include "farey/cf.hpp"

#include <sstream>
#include <stdexcept>

namespace farey {

std::optional<CFViolation> validate_cf(const CFExpansion& cf) {
    mpz_class n(cf.modulus.value());
    if (gcd(cf.b, n) != 1)
        return CFViolation{0, 3, "gcd(b, N) != 1 for b = " + cf.b.get_str()};
    mpz_class p_prev = 1, p_cur = cf.b;
    mpz_class q_prev = 0, q_cur = n;
    for (size_t i = 0; i < cf.terms.size(); ++i) {
        const CFTerm& t = cf.terms[i];
        int idx = static_cast<int>(i) + 1;
        if (t.eps != 1 && t.eps != -1)
            return CFViolation{idx, 2, "eps must be +-1"};
        if (t.a < 1)
            return CFViolation{idx, 2, "partial quotient below 1"};
        if (t.a + t.eps < 1)
            return CFViolation{idx, 2, "a_i + eps_i < 1 at i = " + std::to_string(idx)};
        if (i + 1 < cf.terms.size() && t.a + cf.terms[i + 1].eps < 1)
            return CFViolation{idx, 1, "a_i + eps_{i+1} < 1 at i = " + std::to_string(idx)};
        mpz_class p_next = t.a * p_cur + t.eps * p_prev;
        mpz_class q_next = t.a * q_cur + t.eps * q_prev;
        if (gcd(p_next, n) != 1)
            return CFViolation{idx, 3,
                               "convergent numerator " + p_next.get_str() + " shares a factor with N"};
        // the first-term edge case a_1 = 1, eps_1 = +1 passes the sign
        // conditions yet keeps q_1 = N; convergents must descend the graph
        if (q_next <= q_cur)
            return CFViolation{idx, 2, "denominators stall at i = " + std::to_string(idx)};
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
    }
    return std::nullopt;
}

ConvergentSeq convergents(const CFExpansion& cf) {
    if (auto v = validate_cf(cf))
        throw std::domain_error("invalid continued fraction: " + v->message);
    ConvergentSeq seq;
    seq.pq.reserve(cf.terms.size() + 2);
    seq.pq.emplace_back(1, 0);
    seq.pq.emplace_back(cf.b, cf.modulus.value());
    for (const CFTerm& t : cf.terms) {
        const auto& [p1, q1] = seq.pq[seq.pq.size() - 1];
        const auto& [p0, q0] = seq.pq[seq.pq.size() - 2];
        seq.pq.emplace_back(t.a * p1 + t.eps * p0, t.a * q1 + t.eps * q0);
    }
    return seq;
}

Rational evaluate(const CFExpansion& cf) {
    ConvergentSeq seq = convergents(cf);
    Rational from_table = seq.value(seq.last_index());
    // bottom-up value of the nested fraction, for the exact cross-check
    mpq_class tail(0);
    for (auto it = cf.terms.rbegin(); it != cf.terms.rend(); ++it) {
        mpq_class den = mpq_class(it->a) + tail;
        if (den == 0)
            throw std::logic_error("zero denominator in a valid expansion");
        tail = mpq_class(it->eps) / den;
    }
    mpq_class direct = (mpq_class(cf.b) + tail) / mpq_class(cf.modulus.value());
    if (Rational::from_mpq(direct) != from_table)
        throw std::logic_error("convergent table and nested evaluation disagree");
    return from_table;
}

std::vector<RealInput> fins(const CFExpansion& cf) {
    if (auto v = validate_cf(cf))
        throw std::domain_error("invalid continued fraction: " + v->message);
    size_t n = cf.terms.size();
    std::vector<RealInput> ys(n + 1);
    ys[n] = RealInput(mpq_class(0));
    for (size_t i = n; i-- > 0;) {
        const CFTerm& t = cf.terms[i];
        RealInput den = add(RealInput(mpq_class(t.a)), ys[i + 1]);
        ys[i] = div(RealInput(mpq_class(t.eps)), den);
    }
    return ys;
}

std::vector<RealInput> fins_prefix(const CFExpansion& cf, const RealInput& x) {
    std::vector<RealInput> ys;
    ys.reserve(cf.terms.size() + 1);
    RealInput y = sub(mul(x, RealInput(mpq_class(cf.modulus.value()))),
                      RealInput(mpq_class(cf.b)));
    ys.push_back(y);
    for (size_t i = 0; i < cf.terms.size(); ++i) {
        if (y.sign() != cf.terms[i].eps)
            throw std::domain_error("fin sign differs from eps at term " + std::to_string(i + 1));
        y = y.recip_minus(cf.terms[i].a);
        ys.push_back(y);
    }
    return ys;
}

RealInput tail_reconstruct(const ConvergentSeq& seq, long i, const RealInput& y) {
    const auto& [pi, qi] = seq.at(i);
    const auto& [pm, qm] = seq.at(i - 1);
    RealInput num = add(RealInput(mpq_class(pi)), mul(y, RealInput(mpq_class(pm))));
    RealInput den = add(RealInput(mpq_class(qi)), mul(y, RealInput(mpq_class(qm))));
    if (den.sign() == 0)
        throw std::domain_error("tail reconstruction hit a zero denominator");
    return div(num, den);
}

RealInput error_term(const ConvergentSeq& seq, long n, const RealInput& y_next) {
    const auto& [pn, qn] = seq.at(n);
    const auto& [pm, qm] = seq.at(n - 1);
    RealInput x = tail_reconstruct(seq, n, y_next);
    RealInput direct = sub(x, RealInput(mpq_class(pn) / mpq_class(qn))).abs();
    // N |y| / (q_n (q_n + y q_{n-1}))
    mpz_class big_n = seq.at(0).second;
    RealInput denom = mul(RealInput(mpq_class(qn)),
                          add(RealInput(mpq_class(qn)), mul(y_next, RealInput(mpq_class(qm)))));
    RealInput closed = div(mul(RealInput(mpq_class(big_n)), y_next.abs()), denom);
    if (!(direct == closed))
        throw std::logic_error("error identity failed: " + direct.str() + " vs " + closed.str());
    return closed;
}

std::string cf_text(const CFExpansion& cf) {
    std::ostringstream out;
    out << "1/0+ " << cf.modulus.value() << "/" << cf.b.get_str();
    for (const CFTerm& t : cf.terms)
        out << "+ " << (t.eps < 0 ? "-1" : "1") << "/" << t.a.get_str();
    return out.str();
}

CFExpansion parse_cf(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    if (tokens.size() < 2 || tokens.front() != "1/0+")
        throw std::invalid_argument("continued fraction must start with \"1/0+\"");
    for (size_t i = 1; i + 1 < tokens.size(); ++i) {
        if (tokens[i].empty() || tokens[i].back() != '+')
            throw std::invalid_argument("missing '+' in continued fraction term");
        tokens[i].pop_back();
    }
    auto split = [](const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            throw std::invalid_argument("malformed term \"" + s + "\"");
        return std::pair<mpz_class, mpz_class>(mpz_class(s.substr(0, slash), 10),
                                               mpz_class(s.substr(slash + 1), 10));
    };
    auto [nval, bval] = split(tokens[1]);
    if (!nval.fits_slong_p())
        throw std::invalid_argument("modulus too large");
    CFExpansion cf{Modulus(nval.get_si()), bval, {}};
    for (size_t i = 2; i < tokens.size(); ++i) {
        auto [eps, a] = split(tokens[i]);
        if (eps != 1 && eps != -1)
            throw std::invalid_argument("eps must be +-1 in \"" + tokens[i] + "\"");
        cf.terms.push_back(CFTerm{static_cast<int>(eps.get_si()), a});
    }
    return cf;
}

} // namespace farey
