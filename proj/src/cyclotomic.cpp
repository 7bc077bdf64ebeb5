#include "legdet/cyclotomic.hpp"

#include "legdet/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace legdet {

namespace {

using RationalPoly = std::vector<BigRational>;

void trim(RationalPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

RationalPoly multiply(const RationalPoly& a, const RationalPoly& b) {
    if (a.empty() || b.empty()) return {};
    RationalPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

RationalPoly subtract(RationalPoly a, const RationalPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Long division; divisor must be non-zero.
std::pair<RationalPoly, RationalPoly> divide(RationalPoly num, const RationalPoly& den) {
    trim(num);
    if (num.size() < den.size()) return {{}, std::move(num)};
    RationalPoly quotient(num.size() - den.size() + 1);
    const BigRational lead = den.back();
    while (!num.empty() && num.size() >= den.size()) {
        const std::size_t shift = num.size() - den.size();
        const BigRational factor = num.back() / lead;
        quotient[shift] = factor;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
        num.pop_back();  // leading term cancels exactly
        trim(num);
    }
    trim(quotient);
    return {std::move(quotient), std::move(num)};
}

// a * b mod p for a, b < p < 2^32.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a % p) * (b % p) % p; }

std::uint64_t square_mod(std::uint64_t k, std::uint64_t p) { return mul_mod(k, k, p); }

std::uint64_t reduce(std::int64_t e, std::uint64_t p) { return CycInt::reduce_exponent(e, p); }

} // namespace

CycRational reciprocal(const CycRational& x) {
    if (!x.bound() || x.is_zero()) throw std::domain_error("reciprocal of zero in Q(zeta)");
    const std::uint64_t p = x.prime();

    RationalPoly r0(p, BigRational(1));  // Phi_p
    RationalPoly r1(x.coeffs().begin(), x.coeffs().end());
    trim(r1);
    RationalPoly t0;
    RationalPoly t1{BigRational(1)};
    while (!r1.empty()) {
        auto [q, r] = divide(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RationalPoly next = subtract(t0, multiply(q, t1));
        t0 = std::move(t1);
        t1 = std::move(next);
    }
    // Phi_p is irreducible, so the gcd is a non-zero constant.
    if (r0.size() != 1) throw VerificationError("reciprocal: non-constant gcd with Phi_p");
    const BigRational scale = BigRational(1) / r0[0];
    RationalPoly coeffs(p - 1);
    if (t0.size() > coeffs.size()) throw VerificationError("reciprocal: Bezout coefficient too long");
    for (std::size_t i = 0; i < t0.size(); ++i) coeffs[i] = t0[i] * scale;
    return CycRational::from_power_basis(p, std::move(coeffs));
}

// ---------------------------------------------------------------------------

ComplexApprox zeta_numeric(std::uint64_t p, std::int64_t exponent) {
    const std::uint64_t r = reduce(exponent, p);
    if (r == 0) return {std::complex<double>(1.0, 0.0), 0.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(p);
    return {std::polar(1.0, angle), 24.0 * ComplexApprox::kUnitRoundoff};
}

bool within_tolerance(const ComplexApprox& computed, std::complex<double> expected, double rel_tol,
                      double abs_floor) {
    const double tol = std::max(rel_tol * std::abs(expected), abs_floor);
    return std::abs(computed.value - expected) <= tol && computed.err <= tol;
}

// ---------------------------------------------------------------------------

CycInt gauss_sum(const OddPrime& p) { return gauss_sum_scaled(p, 1); }

CycInt gauss_sum_scaled(const OddPrime& p, std::int64_t a) {
    const std::uint64_t q = p.value();
    const std::uint64_t scale = reduce(a, q);
    std::vector<BigInt> cyclic(q);
    for (std::uint64_t k = 1; k < q; ++k)
        cyclic[mul_mod(scale, k, q)] += legendre(static_cast<std::int64_t>(k), p);
    return CycInt::from_cyclic(q, std::move(cyclic));
}

CycInt quadratic_sum(const OddPrime& p, std::int64_t a) {
    const std::uint64_t q = p.value();
    const std::uint64_t scale = reduce(a, q);
    std::vector<BigInt> cyclic(q);
    cyclic[0] = 1;
    for (std::uint64_t k = 1; k <= p.half(); ++k) cyclic[mul_mod(scale, square_mod(k, q), q)] += 2;
    return CycInt::from_cyclic(q, std::move(cyclic));
}

void check_quadratic_gauss_identity(const OddPrime& p, std::int64_t a) {
    const CycInt lhs = quadratic_sum(p, a);
    const auto q = static_cast<std::int64_t>(p.value());
    if (a % q == 0) {
        if (lhs != CycInt::constant(p.value(), BigInt(q)) || frakp_residue(lhs) != 0)
            throw VerificationError("quadratic Gauss identity failed at a = 0 mod p");
        return;
    }
    const CycInt rhs = gauss_sum(p) * BigInt(legendre(a, p));
    if (lhs != rhs) {
        std::ostringstream msg;
        msg << "quadratic Gauss identity failed for p = " << p.value() << ", a = " << a;
        throw VerificationError(msg.str());
    }
}

std::uint64_t frakp_residue(const CycInt& x) {
    if (!x.bound()) return 0;
    BigInt sum = 0;
    for (const auto& c : x.coeffs()) sum += c;
    const BigInt p(x.prime());
    BigInt r = sum % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint64_t>();
}

// ---------------------------------------------------------------------------

ComplexApprox sun_product_one(const OddPrime& p) {
    const std::uint64_t q = p.value();
    ComplexApprox acc(1.0);
    for (std::uint64_t k = 1; k <= p.half(); ++k)
        acc = acc * (ComplexApprox(1.0) - zeta_numeric(q, static_cast<std::int64_t>(square_mod(k, q))));
    return acc;
}

CycInt sun_product_one_exact(const OddPrime& p) {
    const std::uint64_t q = p.value();
    CycInt acc = CycInt::constant(q, 1);
    const CycInt one = CycInt::constant(q, 1);
    for (std::uint64_t k = 1; k <= p.half(); ++k)
        acc = acc * (one - CycInt::zeta_power(q, static_cast<std::int64_t>(square_mod(k, q))));
    return acc;
}

namespace {

// prod_{1<=j<k<=n} (zeta^{k^2} - zeta^{j^2})
ComplexApprox square_vandermonde_numeric(const OddPrime& p) {
    const std::uint64_t q = p.value();
    ComplexApprox acc(1.0);
    for (std::uint64_t k = 2; k <= p.half(); ++k) {
        const ComplexApprox zk = zeta_numeric(q, static_cast<std::int64_t>(square_mod(k, q)));
        for (std::uint64_t j = 1; j < k; ++j)
            acc = acc * (zk - zeta_numeric(q, static_cast<std::int64_t>(square_mod(j, q))));
    }
    return acc;
}

} // namespace

ComplexApprox sun_product_two(const OddPrime& p) {
    const ComplexApprox v = square_vandermonde_numeric(p);
    return v * v;
}

ComplexApprox sun_product_two_modulus_sq(const OddPrime& p) {
    const ComplexApprox v = square_vandermonde_numeric(p);
    return v * v.conj();
}

CycInt square_vandermonde_exact(const OddPrime& p) {
    const std::uint64_t q = p.value();
    CycInt acc = CycInt::constant(q, 1);
    for (std::uint64_t k = 2; k <= p.half(); ++k) {
        const CycInt zk = CycInt::zeta_power(q, static_cast<std::int64_t>(square_mod(k, q)));
        for (std::uint64_t j = 1; j < k; ++j)
            acc = acc * (zk - CycInt::zeta_power(q, static_cast<std::int64_t>(square_mod(j, q))));
    }
    return acc;
}

// ---------------------------------------------------------------------------

BigRational cauchy_det(const std::vector<BigRational>& u, const std::vector<BigRational>& v) {
    if (u.size() != v.size() || u.empty()) throw std::invalid_argument("cauchy_det: need equal non-zero lengths");
    const auto m = static_cast<Eigen::Index>(u.size());

    RationalMatrix entries(m, m);
    BigRational denominator = 1;
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            const BigRational s = 1 + u[i] * v[j];
            if (s == 0) throw std::invalid_argument("cauchy_det: 1 + u_i v_j vanishes");
            entries(i, j) = 1 / s;
            denominator *= s;
        }
    }
    const BigRational direct = field_determinant(entries);

    BigRational numerator = 1;
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = i + 1; j < m; ++j) numerator *= (u[i] - u[j]) * (v[j] - v[i]);
    const BigRational closed = numerator / denominator;

    if (direct != closed) {
        std::ostringstream msg;
        msg << "Cauchy determinant mismatch: elimination " << direct << " vs closed form " << closed;
        throw VerificationError(msg.str());
    }
    return direct;
}

// ---------------------------------------------------------------------------

MTilde build_mtilde(const OddPrime& p) {
    const std::uint64_t q = p.value();
    const auto dim = static_cast<Eigen::Index>(p.half() + 1);
    MTilde out;
    out.matrix.resize(dim, dim);
    out.nu.resize(dim);
    out.a.resize(dim, dim);
    out.b.resize(dim, dim);

    for (Eigen::Index i = 0; i < dim; ++i) {
        out.nu(i) = CycInt::constant(q, 1);
        for (Eigen::Index j = 0; j < dim; ++j) {
            const std::uint64_t jsq = square_mod(static_cast<std::uint64_t>(j), q);
            const std::uint64_t ij2 = mul_mod(static_cast<std::uint64_t>(i), jsq, q);
            out.a(i, j) = i == 0 ? CycInt(q) : CycInt::zeta_power(q, static_cast<std::int64_t>(ij2));
            out.b(i, j) = CycInt::zeta_power(q, -static_cast<std::int64_t>(ij2));

            if (i == 0) {
                out.matrix(i, j) = CycInt::constant(q, -1);
                continue;
            }
            const std::uint64_t diff = reduce(i - j, q);
            std::vector<BigInt> cyclic(q);
            cyclic[0] = -1;
            for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(dim); ++k) cyclic[mul_mod(diff, square_mod(k, q), q)] += 2;
            out.matrix(i, j) = CycInt::from_cyclic(q, std::move(cyclic));
        }
    }
    return out;
}

bool mtilde_structure_holds(const MTilde& m) {
    const Eigen::Index dim = m.matrix.rows();
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            CycInt ab;
            for (Eigen::Index k = 0; k < dim; ++k) ab += m.a(i, k) * m.b(j, k);
            const CycInt expected = -(m.nu(i) * m.nu(j)) + ab * BigInt(2);
            if (expected != m.matrix(i, j)) return false;
        }
    }
    return true;
}

CycInt mtilde_closed_form(const OddPrime& p) {
    if (p.value() == 3) throw std::domain_error("M~_p closed form requires p > 3");
    const auto n = static_cast<unsigned>(p.half());
    const BigInt factor = -mp::pow(BigInt(-2), n);
    const CycInt first = sun_product_one_exact(p);
    const CycInt vandermonde = square_vandermonde_exact(p);
    return first.conj() * (vandermonde * vandermonde.conj()) * factor;
}

MTildeDetCheck mtilde_det_check(const OddPrime& p, double rel_tol) {
    if (p.value() == 3 || p.value() > kMTildeNumericCap)
        throw std::domain_error("mtilde_det_check: need 5 <= p <= 31");
    const MTilde m = build_mtilde(p);
    const Eigen::Index dim = m.matrix.rows();

    MTildeDetCheck out;
    out.closed_form = mtilde_closed_form(p);

    if (p.value() <= kMTildeExactCap) {
        Matrix<CycRational> rational(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = 0; j < dim; ++j) rational(i, j) = m.matrix(i, j).cast<BigRational>();
        out.exact_det = field_determinant(std::move(rational));
        out.exact_match = *out.exact_det == out.closed_form.cast<BigRational>();
    }

    Eigen::MatrixXcd numeric(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) numeric(i, j) = embed(m.matrix(i, j)).value;
    out.numeric_det = numeric.partialPivLu().determinant();

    const double sign_power = -std::pow(-2.0, static_cast<double>(p.half()));
    out.numeric_closed_form =
        sign_power * (sun_product_one(p).conj() * sun_product_two_modulus_sq(p)).value;
    out.relative_error = std::abs(out.numeric_det - out.numeric_closed_form) / std::abs(out.numeric_closed_form);
    out.numeric_match = out.relative_error < rel_tol;
    return out;
}

} // namespace legdet
