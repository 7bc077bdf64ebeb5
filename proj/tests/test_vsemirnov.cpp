#include "legdet/vsemirnov.hpp"

#include "legdet/types.hpp"

#include <doctest.h>

#include <numbers>

using legdet::DiagonalReading;
using legdet::OddPrime;

namespace {

std::complex<double> zeta(std::uint64_t p, std::int64_t e) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(p));
}

} // namespace

TEST_CASE("build_uvd: u_00 vanishes") {
    for (const auto& p : legdet::primes_in_range(3, 61)) CHECK(std::abs(legdet::build_uvd(p).u(0, 0)) == 0.0);
}

TEST_CASE("build_uvd: p = 3") {
    const auto f = legdet::build_uvd(OddPrime(3));
    const auto z2 = zeta(3, 2);
    CHECK(std::abs(f.u(0, 1) + z2) < 1e-12);
    CHECK(std::abs(f.u(1, 0) - z2) < 1e-12);
    CHECK(std::abs(f.u(1, 1)) < 1e-12);
    CHECK(std::abs(f.v(1, 1) - z2) < 1e-12);
}

TEST_CASE("decomposition_residual: examples") {
    CHECK(legdet::decomposition_residual(OddPrime(3)) < 1e-10);
    CHECK(legdet::decomposition_residual(OddPrime(5)) < 1e-8);
    CHECK(legdet::decomposition_residual(OddPrime(7)) < 1e-8);
    CHECK_THROWS_AS(legdet::decomposition_residual(OddPrime(67)), std::domain_error);
}

TEST_CASE("decomposition_residual: both diagonal readings up to the cap") {
    // The reversed reading scales D by (-1)^n and D enters twice.
    for (const auto& p : legdet::primes_in_range(3, 61)) {
        CAPTURE(p.value());
        CHECK(legdet::decomposition_residual(p, DiagonalReading::Forward) < 1e-6);
        CHECK(legdet::decomposition_residual(p, DiagonalReading::Reversed) < 1e-6);
    }
}

TEST_CASE("det V equals the Vandermonde product") {
    for (const auto& p : legdet::primes_in_range(3, 31)) {
        const auto f = legdet::build_uvd(p);
        const auto n = static_cast<std::int64_t>(p.half());
        std::complex<double> product = 1.0;
        for (std::int64_t i = 0; i <= n; ++i)
            for (std::int64_t j = i + 1; j <= n; ++j) product *= zeta(p.value(), 2 * j) - zeta(p.value(), 2 * i);
        const std::complex<double> det = f.v.determinant();
        CAPTURE(p.value());
        CHECK(std::abs(det - product) <= 1e-6 * std::abs(product));
    }
}

TEST_CASE("d_kk times the difference product is one") {
    for (const auto& p : legdet::primes_in_range(3, 31)) {
        const auto f = legdet::build_uvd(p);
        const auto n = static_cast<std::int64_t>(p.half());
        for (std::int64_t k = 0; k <= n; ++k) {
            std::complex<double> product = f.d(k, k);
            for (std::int64_t j = 0; j <= n; ++j)
                if (j != k) product *= zeta(p.value(), 2 * k) - zeta(p.value(), 2 * j);
            CHECK(std::abs(product - 1.0) < 1e-6);
        }
        CHECK(f.d.isDiagonal());
    }
}

TEST_CASE("tau_p(2) = (2/p) tau") {
    for (const auto& p : legdet::primes_in_range(3, 61)) {
        const auto f = legdet::build_uvd(p);
        std::complex<double> tau = 0.0;
        for (std::int64_t k = 1; k < static_cast<std::int64_t>(p.value()); ++k)
            tau += static_cast<double>(legdet::legendre(k, p)) * zeta(p.value(), k);
        CHECK(std::abs(f.tau2 - static_cast<double>(legdet::legendre(2, p)) * tau) < 1e-9);
    }
}
