#include "legdet/exact_linalg.hpp"

#include <sstream>

namespace legdet {

BigInt IntPolynomial::evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigInt magnitude = negative ? BigInt(-c) : c;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool show_coeff = magnitude != 1 || k == 0;
        if (show_coeff) out << magnitude;
        if (k > 0) {
            if (show_coeff) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    std::vector<BigInt> out(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial pow(IntPolynomial base, unsigned exponent) {
    IntPolynomial result(std::vector<BigInt>{1});
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

BigInt rank_one_update_det(const IntMatrix& h, const IntVector& u, const IntVector& v) {
    if (h.rows() != h.cols() || u.size() != h.rows() || v.size() != h.rows())
        throw std::invalid_argument("rank_one_update_det: dimension mismatch");
    const IntMatrix updated = h + u * v.transpose();
    const BigInt direct = determinant(updated);

    BigInt via_lemma = determinant(h);
    if (h.rows() == 1) {
        via_lemma += v(0) * u(0);  // adj of a 1x1 matrix is [1]
    } else {
        const IntMatrix adj = adjugate(h);
        via_lemma += (v.transpose() * adj * u)(0, 0);
    }
    if (direct != via_lemma) {
        std::ostringstream msg;
        msg << "matrix determinant lemma mismatch: direct " << direct << " vs " << via_lemma;
        throw VerificationError(msg.str());
    }
    return direct;
}

} // namespace legdet
