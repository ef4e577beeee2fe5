#include "farey/real_input.hpp"

#include <stdexcept>
#include <utility>

namespace farey {

namespace {

// Strips the largest square divisor of d into root, leaving d squarefree.
void extract_square_part(mpz_class& d, mpz_class& root) {
    root = 1;
    mpz_class p = 2;
    while (p * p <= d) {
        mpz_class pp = p * p;
        while (d % pp == 0) {
            d /= pp;
            root *= p;
        }
        ++p;
    }
}

mpq_class parse_mpq(const std::string& s) {
    if (s.empty())
        return mpq_class(0);
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: \"" + s + "\"");
    q.canonicalize();
    return q;
}

std::string mpq_str(const mpq_class& q) {
    return q.get_str();
}

} // namespace

RealInput::RealInput(const Rational& value) : b_(0), d_(0) {
    a_ = value.to_mpq();
}

RealInput RealInput::surd(mpq_class a, mpq_class b, mpz_class d) {
    if (d < 0)
        throw std::domain_error("sqrt of a negative integer is not real");
    mpz_class root;
    extract_square_part(d, root);
    b *= root;
    if (d <= 1)
        return RealInput(a + b * mpq_class(d));   // sqrt(0) and sqrt(1) fold away
    if (b == 0)
        return RealInput(a);
    return RealInput(std::move(a), std::move(b), std::move(d));
}

mpq_class RealInput::as_rational() const {
    if (!is_rational())
        throw std::domain_error("surd is irrational");
    return a_;
}

Rational RealInput::as_extended_rational() const {
    return Rational::from_mpq(as_rational());
}

int RealInput::sign() const {
    if (is_rational())
        return sgn(a_);
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    // opposite signs: compare a^2 against b^2 d; equality would make sqrt(d)
    // rational, impossible for squarefree d >= 2
    mpq_class lhs = a_ * a_;
    mpq_class rhs = b_ * b_ * mpq_class(d_);
    int c = cmp(lhs, rhs);
    if (c == 0)
        throw std::logic_error("degenerate surd: a^2 == b^2 d");
    return c > 0 ? sa : sb;
}

mpz_class RealInput::floor() const {
    if (is_rational()) {
        mpz_class q, n = a_.get_num(), d = a_.get_den();
        mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        return q;
    }
    // write x = (A + B*sqrt(d))/C with integer A, B and C > 0
    mpz_class ad = a_.get_den(), bd = b_.get_den();
    mpz_class c = ad * bd;
    mpz_class big_a = a_.get_num() * bd;
    mpz_class big_b = b_.get_num() * ad;
    // floor(B*sqrt(d)) by integer square root of B^2 d
    mpz_class s = sqrt(big_b * big_b * d_);
    mpz_class fb = big_b >= 0 ? s : mpz_class(-s - 1);
    mpz_class k;
    mpz_class num = big_a + fb;
    mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), c.get_mpz_t());
    // correct the estimate with exact sign tests
    while (sub(*this, RealInput(mpq_class(k + 1))).sign() >= 0)
        ++k;
    while (sub(*this, RealInput(mpq_class(k))).sign() < 0)
        --k;
    return k;
}

RealInput RealInput::recip_minus(const mpz_class& a) const {
    RealInput y = abs();
    if (y.is_zero())
        throw std::domain_error("reciprocal of zero");
    if (y.is_rational()) {
        mpq_class r = mpq_class(1) / y.a_ - mpq_class(a);
        return RealInput(r);
    }
    mpq_class norm = y.a_ * y.a_ - y.b_ * y.b_ * mpq_class(y.d_);
    mpq_class na = y.a_ / norm - mpq_class(a);
    mpq_class nb = -y.b_ / norm;
    return RealInput(std::move(na), std::move(nb), y.d_);
}

RealInput RealInput::neg() const {
    if (is_rational())
        return RealInput(mpq_class(-a_));
    return RealInput(-a_, -b_, d_);
}

RealInput RealInput::abs() const {
    return sign() < 0 ? neg() : *this;
}

bool RealInput::operator<(const RealInput& o) const {
    return sub(*this, o).sign() < 0;
}

std::string RealInput::str() const {
    if (is_rational())
        return mpq_str(a_);
    std::string out = mpq_str(a_);
    out += sgn(b_) < 0 ? "-" : "+";
    mpq_class babs = ::abs(b_);
    out += mpq_str(babs);
    out += "*sqrt(" + d_.get_str() + ")";
    return out;
}

RealInput RealInput::parse(std::string_view text) {
    std::string s(text);
    auto pos = s.find("sqrt(");
    if (pos == std::string::npos)
        return RealInput(parse_mpq(s));
    if (s.back() != ')')
        throw std::invalid_argument("malformed surd: \"" + s + "\"");
    mpz_class d(s.substr(pos + 5, s.size() - pos - 6), 10);
    std::string prefix = s.substr(0, pos);
    mpq_class a(0), b(1);
    if (!prefix.empty() && prefix.back() == '*') {
        prefix.pop_back();
        auto split = prefix.find_last_of("+-");
        if (split == std::string::npos || split == 0) {
            b = parse_mpq(prefix);
        } else {
            a = parse_mpq(prefix.substr(0, split));
            b = parse_mpq(prefix.substr(split + 1));
            if (prefix[split] == '-')
                b = -b;
        }
    } else if (!prefix.empty()) {
        char op = prefix.back();
        if (op != '+' && op != '-')
            throw std::invalid_argument("malformed surd: \"" + s + "\"");
        b = op == '-' ? -1 : 1;
        a = parse_mpq(prefix.substr(0, prefix.size() - 1));
    }
    return surd(a, b, d);
}

namespace {

const mpz_class& common_field(const RealInput& x, const RealInput& y) {
    if (x.is_rational())
        return y.root_arg();
    if (y.is_rational() || x.root_arg() == y.root_arg())
        return x.root_arg();
    throw std::domain_error("mixed quadratic fields");
}

RealInput make(mpq_class a, mpq_class b, const mpz_class& d) {
    if (b == 0 || d == 0)
        return RealInput(a);
    return RealInput::surd(std::move(a), std::move(b), d);
}

} // namespace

RealInput add(const RealInput& x, const RealInput& y) {
    const mpz_class& d = common_field(x, y);
    return make(x.a_ + y.a_, x.b_ + y.b_, d);
}

RealInput sub(const RealInput& x, const RealInput& y) {
    const mpz_class& d = common_field(x, y);
    return make(x.a_ - y.a_, x.b_ - y.b_, d);
}

RealInput mul(const RealInput& x, const RealInput& y) {
    const mpz_class& d = common_field(x, y);
    mpq_class a = x.a_ * y.a_ + x.b_ * y.b_ * mpq_class(d);
    mpq_class b = x.a_ * y.b_ + x.b_ * y.a_;
    return make(std::move(a), std::move(b), d);
}

RealInput div(const RealInput& x, const RealInput& y) {
    if (y.sign() == 0)
        throw std::domain_error("division by zero");
    const mpz_class& d = common_field(x, y);
    if (y.is_rational())
        return make(x.a_ / y.a_, x.b_ / y.a_, d);
    mpq_class norm = y.a_ * y.a_ - y.b_ * y.b_ * mpq_class(d);
    RealInput conj = make(y.a_ / norm, -y.b_ / norm, d);
    return mul(x, conj);
}

} // namespace farey
