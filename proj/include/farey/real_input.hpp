#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "farey/rational.hpp"

namespace farey {

// An exact real number: either a rational or a quadratic surd a + b*sqrt(d)
// with rational a, b (b != 0) and squarefree d >= 2.  The representation is
// canonical (square factors of d are folded into b), so equality is a
// componentwise check and sign/floor/reciprocal are computed exactly with
// integer arithmetic only.
class RealInput {
public:
    RealInput() : a_(0), b_(0), d_(0) {}
    RealInput(const mpq_class& value) : a_(value), b_(0), d_(0) {}
    RealInput(const Rational& value);
    RealInput(long value) : a_(value), b_(0), d_(0) {}

    static RealInput surd(mpq_class a, mpq_class b, mpz_class d);

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return d_ == 0 && a_ == 0; }
    const mpq_class& rational_part() const { return a_; }
    const mpq_class& root_coeff() const { return b_; }
    const mpz_class& root_arg() const { return d_; }
    mpq_class as_rational() const;      // throws on surds
    Rational as_extended_rational() const;

    int sign() const;
    mpz_class floor() const;

    // 1/|x| - a, exactly; the surd case goes through the conjugate.
    RealInput recip_minus(const mpz_class& a) const;

    RealInput neg() const;
    RealInput abs() const;

    bool operator==(const RealInput& o) const {
        return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
    }
    bool operator<(const RealInput& o) const;   // same field (or rational) only

    std::string str() const;
    // Accepts "p/q", "a+b*sqrt(d)", "a-b*sqrt(d)", "sqrt(d)", "b*sqrt(d)".
    static RealInput parse(std::string_view text);

    friend RealInput add(const RealInput& x, const RealInput& y);
    friend RealInput sub(const RealInput& x, const RealInput& y);
    friend RealInput mul(const RealInput& x, const RealInput& y);
    friend RealInput div(const RealInput& x, const RealInput& y);

private:
    RealInput(mpq_class a, mpq_class b, mpz_class d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    mpq_class a_, b_;
    mpz_class d_;   // 0 for rationals
};

RealInput add(const RealInput& x, const RealInput& y);
RealInput sub(const RealInput& x, const RealInput& y);
RealInput mul(const RealInput& x, const RealInput& y);
RealInput div(const RealInput& x, const RealInput& y);

} // namespace farey
