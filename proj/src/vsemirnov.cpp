#include "legdet/vsemirnov.hpp"

#include "legdet/cyclotomic.hpp"
#include "legdet/matrices.hpp"
#include "legdet/types.hpp"

namespace legdet {

namespace {

constexpr double kVanishing = 1e-12;

std::complex<double> zeta(const OddPrime& p, std::int64_t e) { return zeta_numeric(p.value(), e).value; }

} // namespace

VsemirnovFactors build_uvd(const OddPrime& p, DiagonalReading reading) {
    const auto n = static_cast<std::int64_t>(p.half());
    const Eigen::Index dim = n + 1;
    VsemirnovFactors f;
    f.u.resize(dim, dim);
    f.v.resize(dim, dim);
    f.d = Eigen::MatrixXcd::Zero(dim, dim);

    for (std::int64_t i = 0; i <= n; ++i) {
        const int li = legendre(i, p);
        for (std::int64_t j = 0; j <= n; ++j) {
            const int lmj = legendre(-j, p);
            const std::complex<double> num = double(li) * zeta(p, -j - 2 * i) + double(lmj) * zeta(p, -2 * j - i);
            const std::complex<double> den = zeta(p, -i - j) + double(li * lmj);
            if (std::abs(den) < kVanishing) throw VerificationError("u_ij denominator vanishes");
            f.u(i, j) = num / den;
            f.v(i, j) = zeta(p, 2 * i * j);
        }
        std::complex<double> diag = 1.0;
        for (std::int64_t k = 0; k <= n; ++k) {
            if (k == i) continue;
            const std::complex<double> diff = reading == DiagonalReading::Forward ? zeta(p, 2 * i) - zeta(p, 2 * k)
                                                                                   : zeta(p, 2 * k) - zeta(p, 2 * i);
            if (std::abs(diff) < kVanishing) throw VerificationError("d_ii denominator vanishes");
            diag /= diff;
        }
        f.d(i, i) = diag;
    }

    f.tau2 = 0.0;
    for (std::int64_t k = 1; k < static_cast<std::int64_t>(p.value()); ++k) f.tau2 += double(legendre(k, p)) * zeta(p, 2 * k);
    const std::uint64_t q = p.value();
    // (p^2 - 1)/4 reduced mod p without overflow.
    const std::int64_t exponent = static_cast<std::int64_t>(((q - 1) / 2 % q) * ((q + 1) / 2 % q) % q);
    f.lambda = double(legendre(-1, p)) * f.tau2 * zeta(p, exponent);
    return f;
}

double decomposition_residual(const OddPrime& p, DiagonalReading reading) {
    if (p.value() > kDecompositionCap) throw std::domain_error("decomposition_residual: p > 61");
    const VsemirnovFactors f = build_uvd(p, reading);
    const Eigen::MatrixXcd product = f.lambda * (f.v * f.d * f.u * f.d * f.v);
    const Eigen::MatrixXcd ep = build_ep(p).unaryExpr([](const BigInt& x) { return std::complex<double>(x.convert_to<double>(), 0.0); });
    return (product - ep).cwiseAbs().maxCoeff();
}

} // namespace legdet
