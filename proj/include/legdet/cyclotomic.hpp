#pragma once

// Exact arithmetic in Z[zeta_p] and Q(zeta_p), its complex embedding, Gauss
// sums, the prime ideal (1 - zeta), the two square-index products, the
// Cauchy determinant and the M~_p matrix.

#include "legdet/arith.hpp"
#include "legdet/types.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace legdet {

/// Element of Q(zeta_p) (or Z[zeta_p] when Scalar is an integer type), stored
/// as sum_{i=0}^{p-2} c_i zeta^i, i.e. in the power basis modulo
/// Phi_p(x) = 1 + x + ... + x^{p-1}. The representation is canonical, so
/// equality is coefficient equality.
///
/// A default-constructed element is an "unbound" zero that adopts the prime
/// of whatever it is combined with; this lets it live in Eigen containers.
template <typename Scalar>
class Cyclotomic {
public:
    Cyclotomic() = default;
    explicit Cyclotomic(std::uint64_t p) : p_(p), c_(checked_length(p)) {}

    static Cyclotomic constant(std::uint64_t p, const Scalar& value) {
        Cyclotomic x(p);
        x.c_[0] = value;
        return x;
    }

    /// zeta^e; any integer exponent, reduced mod p.
    static Cyclotomic zeta_power(std::uint64_t p, std::int64_t exponent) {
        Cyclotomic x(p);
        const std::uint64_t r = reduce_exponent(exponent, p);
        if (r + 1 < p) {
            x.c_[r] = 1;
        } else {
            for (auto& c : x.c_) c = -1;
        }
        return x;
    }

    /// Builds the element sum_{e=0}^{p-1} cyclic[e] zeta^e (length p vector).
    static Cyclotomic from_cyclic(std::uint64_t p, std::vector<Scalar> cyclic) {
        if (cyclic.size() != p) throw std::invalid_argument("from_cyclic: need p coefficients");
        Cyclotomic x;
        x.p_ = p;
        const Scalar top = cyclic.back();
        cyclic.pop_back();
        if (top != 0)
            for (auto& c : cyclic) c -= top;
        x.c_ = std::move(cyclic);
        return x;
    }

    /// Coefficients in the power basis of degree <= p-2. Zero-length if unbound.
    static Cyclotomic from_power_basis(std::uint64_t p, std::vector<Scalar> coeffs) {
        if (coeffs.size() != checked_length(p)) throw std::invalid_argument("from_power_basis: need p-1 coefficients");
        Cyclotomic x;
        x.p_ = p;
        x.c_ = std::move(coeffs);
        return x;
    }

    std::uint64_t prime() const { return p_; }
    bool bound() const { return p_ != 0; }
    const std::vector<Scalar>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (c != 0) return false;
        return true;
    }

    /// Complex conjugation, zeta^i -> zeta^{-i}.
    Cyclotomic conj() const {
        if (!bound()) return *this;
        std::vector<Scalar> cyclic(p_);
        for (std::uint64_t i = 0; i < c_.size(); ++i) cyclic[(p_ - i) % p_] = c_[i];
        return from_cyclic(p_, std::move(cyclic));
    }

    template <typename To>
    Cyclotomic<To> cast() const {
        if (!bound()) return {};
        std::vector<To> out(c_.begin(), c_.end());
        return Cyclotomic<To>::from_power_basis(p_, std::move(out));
    }

    Cyclotomic& operator+=(const Cyclotomic& other) {
        if (!other.bound()) return *this;
        adopt(other);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
        return *this;
    }

    Cyclotomic& operator-=(const Cyclotomic& other) {
        if (!other.bound()) return *this;
        adopt(other);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
        return *this;
    }

    Cyclotomic& operator*=(const Scalar& s) {
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Scalar& s) { return a *= s; }
    friend Cyclotomic operator*(const Scalar& s, Cyclotomic a) { return a *= s; }

    friend Cyclotomic operator-(Cyclotomic a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (!a.bound() || !b.bound()) return a.bound() ? Cyclotomic(a.p_) : Cyclotomic(b.p_);
        check_same(a, b);
        const std::uint64_t p = a.p_;
        std::vector<Scalar> cyclic(p);
        for (std::uint64_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::uint64_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                const std::uint64_t k = i + j < p ? i + j : i + j - p;
                cyclic[k] += a.c_[i] * b.c_[j];
            }
        }
        return from_cyclic(p, std::move(cyclic));
    }

    Cyclotomic& operator*=(const Cyclotomic& other) { return *this = *this * other; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.bound() && b.bound() && a.p_ != b.p_) return false;
        if (!a.bound() || !b.bound()) return a.is_zero() && b.is_zero();
        return a.c_ == b.c_;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            std::string term = c_[i].str();
            if (!out.empty()) out += (term.front() == '-') ? " - " : " + ";
            else if (term.front() == '-') out += "-";
            if (term.front() == '-') term.erase(0, 1);
            if (i == 0) {
                out += term;
            } else {
                if (term != "1") out += term + "*";
                out += "z";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    static std::uint64_t reduce_exponent(std::int64_t e, std::uint64_t p) {
        const auto sp = static_cast<std::int64_t>(p);
        std::int64_t r = e % sp;
        if (r < 0) r += sp;
        return static_cast<std::uint64_t>(r);
    }

private:
    static std::size_t checked_length(std::uint64_t p) {
        if (p < 3 || !is_prime(p)) throw std::invalid_argument("Cyclotomic: p must be an odd prime");
        return static_cast<std::size_t>(p - 1);
    }

    static void check_same(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.p_ != b.p_) throw std::invalid_argument("Cyclotomic: mismatched primes");
    }

    void adopt(const Cyclotomic& other) {
        if (!bound()) {
            p_ = other.p_;
            c_.assign(other.c_.size(), Scalar(0));
        } else {
            check_same(*this, other);
        }
    }

    std::uint64_t p_ = 0;
    std::vector<Scalar> c_;
};

using CycInt = Cyclotomic<BigInt>;
using CycRational = Cyclotomic<BigRational>;

template <typename Scalar>
bool is_zero(const Cyclotomic<Scalar>& x) {
    return x.is_zero();
}

/// Exact inverse in Q(zeta_p) by the extended Euclidean algorithm against
/// Phi_p. Throws std::domain_error on zero.
CycRational reciprocal(const CycRational& x);

// ---------------------------------------------------------------------------
// Numeric embedding zeta -> exp(2 pi i / p)

/// A double-precision complex value with a coarse, monotonically growing
/// bound on its accumulated rounding error.
struct ComplexApprox {
    static constexpr double kUnitRoundoff = 0x1p-53;

    std::complex<double> value{};
    double err = 0.0;

    ComplexApprox() = default;
    ComplexApprox(std::complex<double> v, double e = 0.0) : value(v), err(e) {}

    double magnitude() const { return std::abs(value); }

    friend ComplexApprox operator+(const ComplexApprox& a, const ComplexApprox& b) {
        const auto v = a.value + b.value;
        return {v, a.err + b.err + 2 * kUnitRoundoff * std::abs(v)};
    }
    friend ComplexApprox operator-(const ComplexApprox& a, const ComplexApprox& b) {
        const auto v = a.value - b.value;
        return {v, a.err + b.err + 2 * kUnitRoundoff * std::abs(v)};
    }
    friend ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b) {
        const auto v = a.value * b.value;
        const double e = a.magnitude() * b.err + b.magnitude() * a.err + a.err * b.err + 4 * kUnitRoundoff * std::abs(v);
        return {v, e};
    }
    ComplexApprox conj() const { return {std::conj(value), err}; }
};

/// Numeric value of zeta^e with its rounding bound.
ComplexApprox zeta_numeric(std::uint64_t p, std::int64_t exponent);

/// |computed - expected| <= max(rel_tol * |expected|, abs_floor), and the
/// tracked error budget is itself below that tolerance.
bool within_tolerance(const ComplexApprox& computed, std::complex<double> expected, double rel_tol,
                      double abs_floor = 1e-9);

template <typename Scalar>
ComplexApprox embed(const Cyclotomic<Scalar>& x) {
    ComplexApprox acc;
    const auto& c = x.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        const double coeff = c[i].template convert_to<double>();
        const ComplexApprox term = ComplexApprox(coeff, ComplexApprox::kUnitRoundoff * std::abs(coeff)) *
                                   zeta_numeric(x.prime(), static_cast<std::int64_t>(i));
        acc = acc + term;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Gauss sums and the prime over p

/// G_p = sum_{k=1}^{p-1} (k/p) zeta^k.
CycInt gauss_sum(const OddPrime& p);

/// sum_{k=1}^{p-1} (k/p) zeta^{a k}.
CycInt gauss_sum_scaled(const OddPrime& p, std::int64_t a);

/// 1 + 2 sum_{k=1}^{n} zeta^{a k^2}.
CycInt quadratic_sum(const OddPrime& p, std::int64_t a);

/// Checks 1 + 2 sum_{k=1}^{n} zeta^{a k^2} == (a/p) G_p exactly when p does not
/// divide a, and that the sum equals p with residue 0 mod (1 - zeta)
/// otherwise. Throws VerificationError on failure.
void check_quadratic_gauss_identity(const OddPrime& p, std::int64_t a);

/// Image of x in Z[zeta]/(1 - zeta) = F_p (zeta -> 1).
std::uint64_t frakp_residue(const CycInt& x);

// ---------------------------------------------------------------------------
// Products over quadratic-residue exponents

/// prod_{k=1}^{n} (1 - zeta^{k^2}).
ComplexApprox sun_product_one(const OddPrime& p);
CycInt sun_product_one_exact(const OddPrime& p);

/// prod_{1<=j<k<=n} (zeta^{j^2} - zeta^{k^2})^2.
ComplexApprox sun_product_two(const OddPrime& p);

/// |prod_{1<=j<k<=n} (zeta^{k^2} - zeta^{j^2})|^2.
ComplexApprox sun_product_two_modulus_sq(const OddPrime& p);

/// prod_{1<=j<k<=n} (zeta^{k^2} - zeta^{j^2}), exact.
CycInt square_vandermonde_exact(const OddPrime& p);

// ---------------------------------------------------------------------------
// Cauchy-type determinant

/// det[1 / (1 + u_i v_j)] computed by exact Gaussian elimination and by the
/// closed form prod_{i<j} (u_i - u_j)(v_j - v_i) / prod_{i,j} (1 + u_i v_j).
/// Throws std::invalid_argument if some 1 + u_i v_j vanishes or lengths
/// differ, VerificationError if the two routes disagree.
BigRational cauchy_det(const std::vector<BigRational>& u, const std::vector<BigRational>& v);

// ---------------------------------------------------------------------------
// M~_p

/// M~_p and the witnesses of its rank-one-update structure
/// M~_p = -nu nu^T + 2 A B^T. Row 0 is the replaced (all -1) row.
struct MTilde {
    Matrix<CycInt> matrix;
    Vector<CycInt> nu;  ///< all ones
    Matrix<CycInt> a;   ///< [zeta^{i j^2}] with row 0 zeroed
    Matrix<CycInt> b;   ///< [zeta^{-i j^2}]
};

MTilde build_mtilde(const OddPrime& p);

/// Exact entrywise check of M~_p = -nu nu^T + 2 A B^T.
bool mtilde_structure_holds(const MTilde& m);

/// -(-2)^n conj(prod (1 - zeta^{k^2})) |prod (zeta^{k^2} - zeta^{j^2})|^2 in Z[zeta].
/// Valid for p > 3.
CycInt mtilde_closed_form(const OddPrime& p);

inline constexpr std::uint64_t kMTildeExactCap = 19;
inline constexpr std::uint64_t kMTildeNumericCap = 31;

struct MTildeDetCheck {
    CycInt closed_form;
    std::optional<CycRational> exact_det;  ///< set when p <= kMTildeExactCap
    std::complex<double> numeric_det;
    std::complex<double> numeric_closed_form;
    double relative_error = 0.0;
    bool exact_match = true;
    bool numeric_match = false;

    bool passed() const { return exact_match && numeric_match; }
};

/// Compares det M~_p against the closed form: exactly over Q(zeta) for
/// p <= 19, numerically (relative error < rel_tol) for p <= 31. Throws
/// std::domain_error for p = 3 or p > 31.
MTildeDetCheck mtilde_det_check(const OddPrime& p, double rel_tol = 1e-6);

} // namespace legdet
