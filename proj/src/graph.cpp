#include "farey/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace farey {

bool in_xn(const Rational& x, const Modulus& n) {
    if (x.is_infinity())
        return true;
    return x.den() % n.value() == 0;
}

bool adjacent(const Rational& p, const Rational& q, const Modulus& n) {
    return abs(cross(p, q)) == n.value();
}

namespace {

void require_member(const Rational& x, const Modulus& n, const char* what) {
    if (!in_xn(x, n))
        throw std::domain_error(std::string(what) + ": " + x.str() + " is not a vertex of F_" +
                                std::to_string(n.value()));
}

// r*y - s*x = 1 normalized to 0 < s < y (y >= 2, gcd(x, y) = 1).
void euclid_pair(const mpz_class& x, const mpz_class& y, mpz_class& r, mpz_class& s) {
    // s = -x^{-1} mod y, shifted into (0, y); then r = (1 + s*x)/y
    mpz_class xinv = mod_inverse(((x % y) + y) % y, y);
    s = (y - xinv) % y;
    if (s == 0)
        s = y;          // cannot happen for y >= 2 since gcd(x, y) = 1 makes xinv != 0
    r = (1 + s * x) / y;
}

} // namespace

std::vector<Rational> neighbors_below(const Rational& x, const Modulus& n) {
    require_member(x, n, "neighbors_below");
    if (x.is_infinity() || x.den() <= n.value())
        throw std::domain_error("neighbors_below needs den(x) > N");
    mpz_class y = x.den() / n.value();
    mpz_class r, s;
    euclid_pair(x.num(), y, r, s);
    std::vector<Rational> out;
    Rational first(r, n.value() * s);
    Rational second(x.num() - r, n.value() * (y - s));
    if (in_xn(first, n))
        out.push_back(first);
    if (in_xn(second, n))
        out.push_back(second);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> neighbors_bounded(const Rational& x, const Modulus& n, long qmax) {
    require_member(x, n, "neighbors_bounded");
    if (qmax < n.value())
        throw std::domain_error("qmax below the modulus");
    if (x.is_infinity())
        throw std::domain_error("neighbors of infinity need a value window; use gates_in_window");
    std::vector<Rational> out;
    const mpz_class& p = x.num();
    const mpz_class& q = x.den();
    for (mpz_class s = n.value(); s <= qmax; s += n.value()) {
        // r*q - s*p = +-N with r integral
        for (int side : {+1, -1}) {
            mpz_class t = s * p + side * n.value();
            if (t % q != 0)
                continue;
            mpz_class r = t / q;
            if (gcd(r, s) == 1)
                out.emplace_back(r, s);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (q == n.value())
        out.push_back(Rational::infinity());
    return out;
}

std::vector<Rational> gates_in_window(const Modulus& n, const Rational& lo, const Rational& hi) {
    // b/N in [lo, hi] <=> N*lo <= b <= N*hi
    mpz_class bmin, bmax;
    mpz_class t = lo.num() * n.value();
    mpz_cdiv_q(bmin.get_mpz_t(), t.get_mpz_t(), lo.den().get_mpz_t());
    t = hi.num() * n.value();
    mpz_fdiv_q(bmax.get_mpz_t(), t.get_mpz_t(), hi.den().get_mpz_t());
    std::vector<Rational> out;
    for (mpz_class b = bmin; b <= bmax; ++b) {
        if (gcd(b, mpz_class(n.value())) == 1)
            out.emplace_back(b, n.value());
    }
    return out;
}

Edge Edge::make(const Rational& a, const Rational& b) {
    if (a.is_infinity() && b.is_infinity())
        throw std::domain_error("both edge endpoints at infinity");
    if (a.is_infinity())
        return {b, a};
    if (b.is_infinity())
        return {a, b};
    return a < b ? Edge{a, b} : Edge{b, a};
}

bool Edge::operator<(const Edge& o) const {
    auto key = [](const Rational& v, const Rational& w) {
        // value order with infinity greatest
        if (v == w)
            return false;
        if (v.is_infinity())
            return false;
        if (w.is_infinity())
            return true;
        return v < w;
    };
    if (key(lo, o.lo))
        return true;
    if (key(o.lo, lo))
        return false;
    return key(hi, o.hi);
}

bool edges_cross(const Edge& e1, const Edge& e2) {
    if (e1.lo == e2.lo || e1.lo == e2.hi || e1.hi == e2.lo || e1.hi == e2.hi)
        return false;
    bool inf1 = e1.hi.is_infinity();
    bool inf2 = e2.hi.is_infinity();
    if (inf1 && inf2)
        return false;   // two vertical lines
    if (inf1)
        return e2.lo < e1.lo && e1.lo < e2.hi;
    if (inf2)
        return e1.lo < e2.lo && e2.lo < e1.hi;
    // strict interleaving of (a, b) and (c, d)
    return (e1.lo < e2.lo && e2.lo < e1.hi && e1.hi < e2.hi) ||
           (e2.lo < e1.lo && e1.lo < e2.hi && e2.hi < e1.hi);
}

bool is_connected(const Modulus& n) {
    return n.connected();
}

std::pair<long, long> disconnection_witness(const Modulus& n) {
    const auto& factors = n.factorization();
    if (factors.size() < 2)
        throw std::domain_error("F_" + std::to_string(n.value()) +
                                " is connected; no disconnection witness");
    long p = factors[0].first;
    long q = factors[1].first;
    // m*p - n*q = 1 with 0 < s < p; then (m*p, s*q) are consecutive and both
    // share a factor with N
    long s = (p - mod_inverse(q % p, p)) % p;
    long a = 1 + s * q;     // = m*p
    long b = s * q;
    return {std::min(a, b), std::max(a, b)};
}

Rational ancestor_step(const Rational& x, const Modulus& n) {
    auto pl = n.prime_power();
    if (!pl)
        throw std::domain_error("ancestor_step needs a prime power modulus");
    require_member(x, n, "ancestor_step");
    if (x.is_infinity() || x.den() <= n.value())
        throw std::domain_error("ancestor_step needs den(x) > N");
    mpz_class y = x.den() / n.value();
    mpz_class r, s;
    euclid_pair(x.num(), y, r, s);
    Rational first(r, n.value() * s);
    if (in_xn(first, n))
        return first;
    return Rational(x.num() - r, n.value() * (y - s));
}

Rational apply_mobius(const Mobius& g, const Rational& v) {
    return Rational(g.a * v.num() + g.b * v.den(), g.c * v.num() + g.d * v.den());
}

Mobius normalize_edge(const Rational& p, const Rational& q, const Modulus& n) {
    if (p.is_infinity())
        throw std::domain_error("normalize_edge needs a finite first vertex");
    if (!adjacent(p, q, n))
        throw std::domain_error("normalize_edge needs adjacent vertices");
    // A*num + B*den = 1 with A the least positive inverse of num mod den
    mpz_class a = mod_inverse(((p.num() % p.den()) + p.den()) % p.den(), p.den());
    mpz_class b = (1 - a * p.num()) / p.den();
    return Mobius{a, b, -p.den(), p.num()};
}

} // namespace farey
