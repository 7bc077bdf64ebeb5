#include "legdet/arith.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using legdet::OddPrime;
using legdet::legendre;

TEST_CASE("legendre: examples") {
    CHECK(legendre(0, OddPrime(5)) == 0);
    for (std::uint64_t p : {3u, 5u, 7u, 101u, 65521u}) CHECK(legendre(1, OddPrime(p)) == 1);
    CHECK(legendre(3, OddPrime(7)) == -1);
    CHECK(legendre(2, OddPrime(7)) == 1);
}

TEST_CASE("legendre: agrees with Euler's criterion and the explicit square set") {
    for (const auto& p : legdet::primes_in_range(3, 400)) {
        const auto q = static_cast<std::int64_t>(p.value());
        for (std::int64_t a = -q - 3; a <= 2 * q; ++a) {
            const int expected = oracle::legendre_by_squares(a, p.value());
            REQUIRE(legendre(a, p) == expected);
            REQUIRE(legdet::euler_criterion(a, p) == expected);
        }
    }
}

TEST_CASE("legendre: multiplicative on random inputs") {
    std::mt19937_64 rng(7);
    const auto primes = legdet::primes_in_range(3, 100000);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    std::uniform_int_distribution<std::int64_t> value(-1000000, 1000000);
    for (int trial = 0; trial < 5000; ++trial) {
        const OddPrime& p = primes[pick(rng)];
        const std::int64_t a = value(rng);
        const std::int64_t b = value(rng);
        REQUIRE(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
    }
}

TEST_CASE("legendre: supplementary laws and zero character sum for p <= 1000") {
    for (const auto& p : legdet::primes_in_range(3, 1000)) {
        CHECK(legendre(-1, p) == (p.half() % 2 == 0 ? 1 : -1));
        CHECK((legendre(2, p) == 1) == (p.mod8() == 1 || p.mod8() == 7));
        int sum = 0;
        for (std::int64_t k = 1; k < static_cast<std::int64_t>(p.value()); ++k) sum += legendre(k, p);
        CHECK(sum == 0);
    }
}

TEST_CASE("legendre: large prime near 2^32") {
    const OddPrime p(4294967291u);  // largest prime below 2^32
    CHECK(legendre(-1, p) == legdet::euler_criterion(-1, p));
    CHECK(legendre(123456789, p) == legdet::euler_criterion(123456789, p));
}

TEST_CASE("OddPrime validation") {
    CHECK(OddPrime(7).half() == 3);
    CHECK_THROWS_AS(OddPrime(2), std::invalid_argument);
    CHECK_THROWS_AS(OddPrime(1), std::invalid_argument);
    CHECK_THROWS_AS(OddPrime(9), std::invalid_argument);
    CHECK_THROWS_AS(OddPrime(4294967311u), std::invalid_argument);  // prime, but above 2^32
}

TEST_CASE("is_prime matches trial division") {
    for (std::uint64_t n = 0; n < 20000; ++n) {
        bool trial = n >= 2;
        for (std::uint64_t d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
        REQUIRE(legdet::is_prime(n) == trial);
    }
    CHECK_FALSE(legdet::is_prime(3215031751u));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(legdet::is_prime(4294967291u));
}

TEST_CASE("primes_in_range") {
    auto values = [](const std::vector<OddPrime>& ps) {
        std::vector<std::uint64_t> out;
        for (const auto& p : ps) out.push_back(p.value());
        return out;
    };
    CHECK(values(legdet::primes_in_range(3, 12)) == std::vector<std::uint64_t>{3, 5, 7, 11});
    CHECK(legdet::primes_in_range(14, 16).empty());
    CHECK(values(legdet::primes_in_range(23, 23)) == std::vector<std::uint64_t>{23});
    CHECK(legdet::primes_in_range(3, 1000).size() == 167);
    CHECK_THROWS_AS(legdet::primes_in_range(10, 5), std::out_of_range);
    CHECK_THROWS_AS(legdet::primes_in_range(2, 5), std::out_of_range);
    CHECK_THROWS_AS(legdet::primes_in_range(3, std::uint64_t{1} << 32), std::out_of_range);
}
