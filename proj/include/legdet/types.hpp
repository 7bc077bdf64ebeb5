#pragma once

// Scalar and dense container types shared by every module.
//
// Big integers and rationals are GMP-backed Boost.Multiprecision numbers with
// expression templates disabled, so they behave as plain value types inside
// Eigen matrices (boost/multiprecision/eigen.hpp supplies Eigen::NumTraits).

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace legdet {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using BigRational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;
using RationalMatrix = Matrix<BigRational>;

/// Raised when two computations that must agree exactly (or within a stated
/// tolerance) do not. Firing means either an implementation bug or a
/// falsified identity; callers never swallow it silently.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_zero(const BigRational& x) { return x == 0; }

inline BigRational reciprocal(const BigRational& x) {
    if (x == 0) throw std::domain_error("reciprocal of zero");
    return BigRational(1) / x;
}

} // namespace legdet
