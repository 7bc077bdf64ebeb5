#include "legdet/arith.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace legdet {

namespace {

constexpr std::uint64_t kPrimeLimit = std::uint64_t{1} << 32;

// Operands stay below 2^32 so the product fits in 64 bits.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return (a * b) % m; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t reduce(std::int64_t a, std::uint64_t p) {
    const auto sp = static_cast<std::int64_t>(p);
    std::int64_t r = a % sp;
    if (r < 0) r += sp;
    return static_cast<std::uint64_t>(r);
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    if (n >= kPrimeLimit) throw std::out_of_range("is_prime: argument must be below 2^32");

    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // {2, 7, 61} is a deterministic witness set below 4,759,123,141.
    for (std::uint64_t a : std::array<std::uint64_t, 3>{2, 7, 61}) {
        if (a % n == 0) continue;
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

OddPrime::OddPrime(std::uint64_t p) : p_(p) {
    if (p < 3 || p >= kPrimeLimit || !is_prime(p))
        throw std::invalid_argument("not an odd prime below 2^32: " + std::to_string(p));
}

int legendre(std::int64_t a, const OddPrime& p) {
    std::uint64_t x = reduce(a, p.value());
    std::uint64_t y = p.value();
    int sign = 1;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            const std::uint64_t r = y % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(x, y);
        if (x % 4 == 3 && y % 4 == 3) sign = -sign;
        x %= y;
    }
    return y == 1 ? sign : 0;
}

int euler_criterion(std::int64_t a, const OddPrime& p) {
    const std::uint64_t x = reduce(a, p.value());
    if (x == 0) return 0;
    const std::uint64_t r = pow_mod(x, p.half(), p.value());
    return r == 1 ? 1 : -1;
}

std::vector<OddPrime> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    if (lo < 3 || lo > hi || hi >= kPrimeLimit)
        throw std::out_of_range("primes_in_range: need 3 <= lo <= hi < 2^32");
    std::vector<OddPrime> out;
    for (std::uint64_t n = lo | 1; n <= hi; n += 2) {
        if (is_prime(n)) out.emplace_back(n);
        if (n >= hi - 1) break;  // guard n += 2 overflow near the top of the range
    }
    return out;
}

} // namespace legdet
