#pragma once

// Exact dense linear algebra over arbitrary-precision integers, plus a plain
// Gaussian-elimination determinant for exact field scalars.

#include "legdet/types.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace legdet {

/// Polynomial with big-integer coefficients, ascending degree.
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) { trim(); }

    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    const BigInt& leading() const { return coeffs.back(); }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

    BigInt evaluate(const BigInt& t) const;
    std::string to_string(const std::string& var = "t") const;

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial pow(IntPolynomial base, unsigned exponent);

namespace detail {

inline void exact_divide_in_place(BigInt& value, const BigInt& divisor, const char* where) {
    BigInt q, r;
    mp::divide_qr(value, divisor, q, r);
    if (r != 0) throw VerificationError(std::string("non-exact division in ") + where);
    value = std::move(q);
}

} // namespace detail

/// Exact determinant by fraction-free (Bareiss) elimination. Every division
/// in the recurrence is checked to be exact.
template <typename Derived>
BigInt determinant(const Eigen::MatrixBase<Derived>& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("determinant: matrix not square");
    IntMatrix m = input.template cast<BigInt>();
    const Eigen::Index dim = m.rows();
    if (dim == 0) return BigInt(1);

    BigInt previous = 1;
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < dim; ++k) {
        if (m(k, k) == 0) {
            Eigen::Index pivot = k + 1;
            while (pivot < dim && m(pivot, k) == 0) ++pivot;
            if (pivot == dim) return BigInt(0);
            m.row(k).swap(m.row(pivot));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < dim; ++i) {
            for (Eigen::Index j = k + 1; j < dim; ++j) {
                BigInt value = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                detail::exact_divide_in_place(value, previous, "Bareiss elimination");
                m(i, j) = std::move(value);
            }
            m(i, k) = 0;
        }
        previous = m(k, k);
    }
    BigInt result = m(dim - 1, dim - 1);
    return negate ? BigInt(-result) : result;
}

/// Determinant over an exact field by ordinary Gaussian elimination.
/// Requires ADL-visible `is_zero(Scalar)` and `reciprocal(Scalar)`.
template <typename Scalar>
Scalar field_determinant(Matrix<Scalar> m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("field_determinant: need a non-empty square matrix");
    const Eigen::Index dim = m.rows();
    bool negate = false;
    Scalar det;
    for (Eigen::Index k = 0; k < dim; ++k) {
        Eigen::Index pivot = k;
        while (pivot < dim && is_zero(m(pivot, k))) ++pivot;
        if (pivot == dim) return m(k, k);  // a zero of the right kind
        if (pivot != k) {
            for (Eigen::Index j = k; j < dim; ++j) std::swap(m(k, j), m(pivot, j));
            negate = !negate;
        }
        det = k == 0 ? m(k, k) : Scalar(det * m(k, k));
        if (k + 1 == dim) break;
        const Scalar inverse = reciprocal(m(k, k));
        for (Eigen::Index i = k + 1; i < dim; ++i) {
            if (is_zero(m(i, k))) continue;
            const Scalar factor = m(i, k) * inverse;
            for (Eigen::Index j = k + 1; j < dim; ++j) m(i, j) = m(i, j) - factor * m(k, j);
        }
    }
    return negate ? Scalar(-det) : det;
}

/// det(tI - m) by Faddeev-LeVerrier. The division by k at step k is exact
/// over the integers and is checked.
template <typename Derived>
IntPolynomial charpoly(const Eigen::MatrixBase<Derived>& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("charpoly: matrix not square");
    const IntMatrix a = input.template cast<BigInt>();
    const Eigen::Index dim = a.rows();

    std::vector<BigInt> c(static_cast<std::size_t>(dim) + 1);
    c[static_cast<std::size_t>(dim)] = 1;
    IntMatrix m = IntMatrix::Zero(dim, dim);
    const IntMatrix identity = IntMatrix::Identity(dim, dim);
    for (Eigen::Index k = 1; k <= dim; ++k) {
        m = a * m + c[static_cast<std::size_t>(dim - k + 1)] * identity;
        const IntMatrix am = a * m;
        BigInt trace = -am.trace();
        detail::exact_divide_in_place(trace, BigInt(k), "Faddeev-LeVerrier");
        c[static_cast<std::size_t>(dim - k)] = std::move(trace);
    }
    return IntPolynomial(std::move(c));
}

/// Adjugate (transposed cofactor matrix); entry (i, j) is cofactor (j, i).
template <typename Derived>
IntMatrix adjugate(const Eigen::MatrixBase<Derived>& input) {
    if (input.rows() != input.cols() || input.rows() < 2)
        throw std::invalid_argument("adjugate: need a square matrix of dimension >= 2");
    const IntMatrix a = input.template cast<BigInt>();
    const Eigen::Index dim = a.rows();
    IntMatrix adj(dim, dim);
    IntMatrix minor(dim - 1, dim - 1);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            for (Eigen::Index i = 0, mi = 0; i < dim; ++i) {
                if (i == r) continue;
                for (Eigen::Index j = 0, mj = 0; j < dim; ++j) {
                    if (j == c) continue;
                    minor(mi, mj++) = a(i, j);
                }
                ++mi;
            }
            BigInt cofactor = determinant(minor);
            adj(c, r) = ((r + c) % 2 == 0) ? cofactor : BigInt(-cofactor);
        }
    }
    return adj;
}

/// det(h + u v^T), computed directly and through det(h) + v^T adj(h) u.
/// Throws VerificationError if the two disagree.
BigInt rank_one_update_det(const IntMatrix& h, const IntVector& u, const IntVector& v);

} // namespace legdet
