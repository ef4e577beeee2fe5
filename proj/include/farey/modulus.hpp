#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace farey {

// A graph level N >= 1 together with its factorization.  prime_power() is
// engaged exactly when N = p^l with l >= 1; N = 1 is the plain Farey graph
// and is reported as connected without a prime-power pair.
class Modulus {
public:
    explicit Modulus(long n);

    long value() const { return n_; }
    const std::vector<std::pair<long, int>>& factorization() const { return factors_; }
    std::optional<std::pair<long, int>> prime_power() const;
    bool connected() const { return n_ == 1 || prime_power().has_value(); }

private:
    long n_;
    std::vector<std::pair<long, int>> factors_;
};

// Inverse of a modulo m in [1, m-1]; rejects gcd(a, m) != 1.
long mod_inverse(long a, long m);
mpz_class mod_inverse(const mpz_class& a, const mpz_class& m);

} // namespace farey
