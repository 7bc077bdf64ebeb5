#pragma once

// Numeric factors U, V, D and lambda with E_p = lambda * V D U D V.

#include "legdet/arith.hpp"

#include <Eigen/Dense>

#include <complex>

namespace legdet {

/// Which index reading of the diagonal of D to use:
/// Forward:  d_ii = prod_{k != i} 1 / (zeta^{2i} - zeta^{2k})
/// Reversed: d_ii = prod_{k != i} 1 / (zeta^{2k} - zeta^{2i})
enum class DiagonalReading { Forward, Reversed };

struct VsemirnovFactors {
    Eigen::MatrixXcd u;
    Eigen::MatrixXcd v;
    Eigen::MatrixXcd d;
    std::complex<double> lambda;
    /// tau_p(2) = sum_k (k/p) zeta^{2k}, built directly.
    std::complex<double> tau2;
};

/// Throws VerificationError if a denominator of u_ij or d_ii vanishes.
VsemirnovFactors build_uvd(const OddPrime& p, DiagonalReading reading = DiagonalReading::Forward);

inline constexpr std::uint64_t kDecompositionCap = 61;

/// max_ij |lambda (V D U D V)_ij - (E_p)_ij|. Throws std::domain_error for p > 61.
double decomposition_residual(const OddPrime& p, DiagonalReading reading = DiagonalReading::Forward);

} // namespace legdet
