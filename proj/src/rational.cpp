#include "farey/rational.hpp"

#include <stdexcept>

namespace farey {

Rational::Rational(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_ == 0 && den_ == 0)
        throw std::domain_error("0/0 is not a rational value");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_ == 0) {
        num_ = 1;   // any n/0 with n != 0 is the same point at infinity
        return;
    }
    mpz_class g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0)
        den_ = 1;
}

const Rational& Rational::infinity() {
    static const Rational inf(1, 0);
    return inf;
}

Rational Rational::from_mpq(const mpq_class& q) {
    return Rational(q.get_num(), q.get_den());
}

mpq_class Rational::to_mpq() const {
    if (is_infinity())
        throw std::domain_error("infinity has no rational value");
    mpq_class q(num_, den_);
    q.canonicalize();
    return q;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    if (is_infinity() || o.is_infinity())
        throw std::domain_error("order comparison with infinity");
    int c = mpq_cmp(to_mpq().get_mpq_t(), o.to_mpq().get_mpq_t());
    return c <=> 0;
}

std::string Rational::str() const {
    if (is_infinity())
        return "inf";
    if (den_ == 1)
        return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::parse(std::string_view text) {
    if (text == "inf" || text == "Inf" || text == "INF")
        return infinity();
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(mpz_class(s, 10), 1);
        return Rational(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed fraction: \"" + s + "\"");
    }
}

mpz_class cross(const Rational& p, const Rational& q) {
    return q.num() * p.den() - q.den() * p.num();
}

std::string FormalFraction::str() const {
    return num.get_str() + "/" + den.get_str();
}

FormalFraction farey_sum(const Rational& r1, const Rational& r2) {
    return {r1.num() + r2.num(), r1.den() + r2.den()};
}

FormalFraction farey_diff(const Rational& r2, const Rational& r1) {
    return {r2.num() - r1.num(), r2.den() - r1.den()};
}

} // namespace farey
