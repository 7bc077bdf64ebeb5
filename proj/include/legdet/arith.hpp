#pragma once

// Primality, prime enumeration and the Legendre symbol.

#include <compare>
#include <cstdint>
#include <vector>

namespace legdet {

/// Deterministic Miller-Rabin, exact for every n < 2^32.
bool is_prime(std::uint64_t n);

/// An odd prime p < 2^32 together with n = (p - 1) / 2.
class OddPrime {
public:
    /// Throws std::invalid_argument unless p is an odd prime below 2^32.
    explicit OddPrime(std::uint64_t p);

    std::uint64_t value() const { return p_; }
    /// n = (p - 1) / 2, the half-order used to size E_p and M_p.
    std::uint64_t half() const { return (p_ - 1) / 2; }
    std::uint64_t mod4() const { return p_ % 4; }
    std::uint64_t mod8() const { return p_ % 8; }

    friend auto operator<=>(const OddPrime&, const OddPrime&) = default;

private:
    std::uint64_t p_;
};

/// Legendre symbol (a/p) in {-1, 0, 1}. `a` is reduced mod p first, then the
/// binary Jacobi algorithm (quadratic reciprocity) is applied.
int legendre(std::int64_t a, const OddPrime& p);

/// (a/p) via Euler's criterion a^((p-1)/2) mod p. Slower; an independent
/// route for cross-checking legendre().
int euler_criterion(std::int64_t a, const OddPrime& p);

/// Ascending odd primes in [lo, hi]. Requires 3 <= lo <= hi < 2^32, otherwise
/// throws std::out_of_range.
std::vector<OddPrime> primes_in_range(std::uint64_t lo, std::uint64_t hi);

} // namespace legdet
