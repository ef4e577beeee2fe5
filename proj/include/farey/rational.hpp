#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace farey {

// Reduced fraction num/den with den >= 0.  den == 0 encodes the single point
// at infinity, canonicalized to (1, 0).  Finite values keep den > 0 and carry
// the sign on the numerator; zero is (0, 1).
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(mpz_class num, mpz_class den);

    static const Rational& infinity();
    static Rational from_mpq(const mpq_class& q);

    bool is_infinity() const { return den_ == 0; }
    bool is_zero() const { return num_ == 0 && den_ != 0; }
    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    mpq_class to_mpq() const;   // finite values only

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    // Order comparisons are defined for finite values only; code that works
    // with the vertex at infinity treats it positionally, never by magnitude.
    std::strong_ordering operator<=>(const Rational& o) const;

    std::string str() const;
    static Rational parse(std::string_view text);

private:
    mpz_class num_, den_;
};

// num(Q)*den(P) - den(Q)*num(P): the cross product rq - sp for P = p/q, Q = r/s.
mpz_class cross(const Rational& p, const Rational& q);

// Mediant-style sum or difference taken componentwise on (num, den); kept
// unreduced on purpose, the components need not be coprime.
struct FormalFraction {
    mpz_class num, den;

    Rational reduce() const { return Rational(num, den); }
    std::string str() const;
};

FormalFraction farey_sum(const Rational& r1, const Rational& r2);
// r2 (-) r1, componentwise.  The denominator may come out non-positive;
// callers interpret (the useful case has den(r2) > den(r1)).
FormalFraction farey_diff(const Rational& r2, const Rational& r1);

} // namespace farey
