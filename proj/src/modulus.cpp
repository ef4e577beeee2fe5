#include "farey/modulus.hpp"

#include <stdexcept>

namespace farey {

Modulus::Modulus(long n) : n_(n) {
    if (n < 1)
        throw std::domain_error("modulus must be >= 1");
    long rest = n;
    for (long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        factors_.emplace_back(p, e);
    }
    if (rest > 1)
        factors_.emplace_back(rest, 1);
}

std::optional<std::pair<long, int>> Modulus::prime_power() const {
    if (factors_.size() != 1)
        return std::nullopt;
    return factors_.front();
}

mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("no inverse: " + a.get_str() + " mod " + m.get_str());
    return inv;
}

long mod_inverse(long a, long m) {
    return mod_inverse(mpz_class(a), mpz_class(m)).get_si();
}

} // namespace farey
