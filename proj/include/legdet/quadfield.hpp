#pragma once

// Real quadratic field arithmetic, fundamental units, class numbers of
// Q(sqrt p) and Q(sqrt -p), and Chapman's coefficients a_p, b_p.

#include "legdet/arith.hpp"
#include "legdet/types.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace legdet {

/// (a + b sqrt d) / 2 in the ring of integers of Q(sqrt d), d > 0 squarefree.
/// For d = 1 mod 4, a = b mod 2; for d = 2, 3 mod 4, a and b are both even.
class QuadElem {
public:
    /// Throws std::invalid_argument if the coordinates are not integral.
    QuadElem(std::uint64_t d, BigInt a, BigInt b);

    static QuadElem one(std::uint64_t d) { return {d, BigInt(2), BigInt(0)}; }

    std::uint64_t d() const { return d_; }
    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }

    /// (a^2 - d b^2) / 4, exact.
    BigInt norm() const;
    double to_double() const;
    std::string to_string() const;

    friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
    friend bool operator==(const QuadElem&, const QuadElem&) = default;

private:
    std::uint64_t d_;
    BigInt a_;
    BigInt b_;
};

/// x^k by repeated squaring; x^0 = 1.
QuadElem quad_pow(QuadElem x, std::uint64_t k);

/// Smallest unit > 1 of the ring of integers of Q(sqrt p), from the periodic
/// continued fraction of (1 + sqrt p)/2 (p = 1 mod 4) or sqrt p (p = 3 mod 4).
QuadElem fundamental_unit(const OddPrime& p);

enum class FieldSign { Real, Imaginary };

struct ClassNumberReport {
    std::uint64_t p = 0;
    FieldSign field_sign = FieldSign::Real;
    long h = 0;
    std::map<std::string, long> method_values;
    /// Unrounded values of the analytic methods (real fields only).
    std::map<std::string, double> raw_values;
};

inline constexpr double kRoundingResidualLimit = 0.3;

/// Number of reduced primitive forms (a, b, c) with b^2 - 4ac = -p.
long count_reduced_forms(const OddPrime& p);

/// (sum_{0<k<p/2} (k/p)) / (2 - (2/p)); valid for p = 3 mod 4, p > 3.
long class_number_character_sum(const OddPrime& p);

/// h(-p) by reduced-form counting and by the character sum, checked to agree.
/// Throws std::domain_error unless p = 3 mod 4 and p > 3.
ClassNumberReport class_number_imag(const OddPrime& p);

/// -(sum_a (a/p) ln sin(pi a / p)) / (2 ln eps_p), unrounded.
double class_number_analytic(const OddPrime& p, const QuadElem& unit);

/// ln(sqrt p / prod_{k=1}^{n} (1 - zeta^{k^2})) / ln eps_p, unrounded.
double class_number_from_product(const OddPrime& p, const QuadElem& unit);

/// h(p) by the analytic class number formula (authoritative) and by inverting
/// the cyclotomic product identity, each rounded with residual < 0.3.
/// Throws std::domain_error unless p = 1 mod 4.
ClassNumberReport class_number_real(const OddPrime& p);

struct ChapmanCoefficients {
    BigRational a;
    BigRational b;
    std::uint64_t exponent = 0;  ///< (2 - (2/p)) h(p)
    QuadElem unit_power;         ///< eps_p^exponent
};

/// eps_p^{(2 - (2/p)) h(p)} = a_p + b_p sqrt p. Requires p = 1 mod 4.
ChapmanCoefficients chapman_ap(const OddPrime& p);

} // namespace legdet
