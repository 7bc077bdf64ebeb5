#include "legdet/quadfield.hpp"

#include "legdet/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace legdet {

namespace {

bool is_odd(const BigInt& x) { return mp::bit_test(mp::abs(x), 0); }

// ln of (a + b sqrt d)/2 without overflowing doubles for large coordinates.
double log_of(const QuadElem& x) {
    const double la = x.a() > 0 ? std::log(x.a().convert_to<double>()) : -INFINITY;
    const double lb = std::log(x.b().convert_to<double>()) + 0.5 * std::log(static_cast<double>(x.d()));
    const double hi = std::max(la, lb);
    return hi + std::log(std::exp(la - hi) + std::exp(lb - hi)) - std::numbers::ln2;
}

long round_checked(double value, const char* method, std::uint64_t p) {
    const double nearest = std::round(value);
    if (!(std::abs(value - nearest) < kRoundingResidualLimit)) {
        std::ostringstream msg;
        msg << method << " for p = " << p << " gave " << value << ", too far from an integer";
        throw VerificationError(msg.str());
    }
    return static_cast<long>(nearest);
}

} // namespace

QuadElem::QuadElem(std::uint64_t d, BigInt a, BigInt b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
    const bool ok = d_ % 4 == 1 ? is_odd(a_) == is_odd(b_) : !is_odd(a_) && !is_odd(b_);
    if (!ok) throw std::invalid_argument("QuadElem: coordinates outside the ring of integers");
}

BigInt QuadElem::norm() const {
    BigInt n = a_ * a_ - BigInt(d_) * b_ * b_;
    return n / 4;
}

double QuadElem::to_double() const {
    return (a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(static_cast<double>(d_))) / 2.0;
}

std::string QuadElem::to_string() const {
    std::ostringstream out;
    out << "(" << a_ << (b_ < 0 ? " - " : " + ") << mp::abs(b_) << "*sqrt(" << d_ << "))/2";
    return out.str();
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    if (x.d_ != y.d_) throw std::invalid_argument("QuadElem: mismatched fields");
    BigInt a = x.a_ * y.a_ + BigInt(x.d_) * x.b_ * y.b_;
    BigInt b = x.a_ * y.b_ + y.a_ * x.b_;
    // Closure of the ring of integers makes both divisions exact.
    return {x.d_, a / 2, b / 2};
}

QuadElem quad_pow(QuadElem x, std::uint64_t k) {
    QuadElem result = QuadElem::one(x.d());
    while (k > 0) {
        if (k & 1) result = result * x;
        x = x * x;
        k >>= 1;
    }
    return result;
}

QuadElem fundamental_unit(const OddPrime& p) {
    // Continued fraction of (P0 + sqrt p) / Q0 via the (P, Q) recurrence.
    // N(h_k - q_k w) = (-1)^{k+1} Q_{k+1} / Q0, so the first return of Q to
    // Q0 yields the unit h_k - q_k w' = ((2 h_k - q_k) + q_k sqrt p) / 2 for
    // w = (1 + sqrt p)/2, or h_k + q_k sqrt p for w = sqrt p.
    const bool half_integral = p.mod4() == 1;
    const std::int64_t d = static_cast<std::int64_t>(p.value());
    const std::int64_t root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(d)));
    std::int64_t floor_sqrt = root;
    while (floor_sqrt * floor_sqrt > d) --floor_sqrt;
    while ((floor_sqrt + 1) * (floor_sqrt + 1) <= d) ++floor_sqrt;

    const std::int64_t q0 = half_integral ? 2 : 1;
    std::int64_t pk = half_integral ? 1 : 0;
    std::int64_t qk = q0;
    BigInt h_prev = 1, h_prev2 = 0;
    BigInt k_prev = 0, k_prev2 = 1;
    while (true) {
        const std::int64_t a = (pk + floor_sqrt) / qk;
        const BigInt h = a * h_prev + h_prev2;
        const BigInt k = a * k_prev + k_prev2;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        pk = a * qk - pk;
        qk = (d - pk * pk) / qk;
        if (qk == q0) {
            if (half_integral) return {p.value(), 2 * h - k, k};
            return {p.value(), 2 * h, 2 * k};
        }
    }
}

long count_reduced_forms(const OddPrime& p) {
    // b^2 - 4ac = -p forces b odd; reduced means |b| <= a <= c, with b >= 0
    // whenever |b| = a or a = c. Then 3a^2 <= p.
    const auto disc = static_cast<std::int64_t>(p.value());
    long count = 0;
    for (std::int64_t a = 1; 3 * a * a <= disc; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b + disc;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && c == a) continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
            ++count;
        }
    }
    return count;
}

long class_number_character_sum(const OddPrime& p) {
    long sum = 0;
    for (std::uint64_t k = 1; 2 * k < p.value(); ++k) sum += legendre(static_cast<std::int64_t>(k), p);
    const long divisor = 2 - legendre(2, p);
    if (sum % divisor != 0) throw VerificationError("character-sum class number is not an integer");
    return sum / divisor;
}

ClassNumberReport class_number_imag(const OddPrime& p) {
    if (p.mod4() != 3 || p.value() == 3) throw std::domain_error("class_number_imag: need p = 3 mod 4, p > 3");
    ClassNumberReport report;
    report.p = p.value();
    report.field_sign = FieldSign::Imaginary;
    report.method_values["reduced_forms"] = count_reduced_forms(p);
    report.method_values["character_sum"] = class_number_character_sum(p);
    if (report.method_values["reduced_forms"] != report.method_values["character_sum"]) {
        std::ostringstream msg;
        msg << "h(-" << p.value() << ") disagreement: forms " << report.method_values["reduced_forms"]
            << " vs character sum " << report.method_values["character_sum"];
        throw VerificationError(msg.str());
    }
    report.h = report.method_values["reduced_forms"];
    return report;
}

double class_number_analytic(const OddPrime& p, const QuadElem& unit) {
    const double q = static_cast<double>(p.value());
    double sum = 0.0;
    for (std::uint64_t a = 1; a < p.value(); ++a)
        sum += legendre(static_cast<std::int64_t>(a), p) * std::log(std::sin(std::numbers::pi * static_cast<double>(a) / q));
    return -sum / (2.0 * log_of(unit));
}

double class_number_from_product(const OddPrime& p, const QuadElem& unit) {
    const ComplexApprox product = sun_product_one(p);
    const double ratio = std::sqrt(static_cast<double>(p.value())) / product.value.real();
    return std::log(ratio) / log_of(unit);
}

ClassNumberReport class_number_real(const OddPrime& p) {
    if (p.mod4() != 1) throw std::domain_error("class_number_real: need p = 1 mod 4");
    const QuadElem unit = fundamental_unit(p);
    ClassNumberReport report;
    report.p = p.value();
    report.field_sign = FieldSign::Real;
    report.raw_values["analytic"] = class_number_analytic(p, unit);
    report.raw_values["cyclotomic_product"] = class_number_from_product(p, unit);
    report.method_values["analytic"] = round_checked(report.raw_values["analytic"], "analytic class number", p.value());
    report.method_values["cyclotomic_product"] =
        round_checked(report.raw_values["cyclotomic_product"], "cyclotomic-product class number", p.value());
    if (report.method_values["analytic"] != report.method_values["cyclotomic_product"]) {
        std::ostringstream msg;
        msg << "h(" << p.value() << ") disagreement: analytic " << report.method_values["analytic"]
            << " vs cyclotomic product " << report.method_values["cyclotomic_product"];
        throw VerificationError(msg.str());
    }
    report.h = report.method_values["analytic"];
    return report;
}

ChapmanCoefficients chapman_ap(const OddPrime& p) {
    if (p.mod4() != 1) throw std::domain_error("chapman_ap: need p = 1 mod 4");
    const ClassNumberReport h = class_number_real(p);
    const std::uint64_t exponent = static_cast<std::uint64_t>(2 - legendre(2, p)) * static_cast<std::uint64_t>(h.h);
    QuadElem power = quad_pow(fundamental_unit(p), exponent);
    return {BigRational(power.a(), BigInt(2)), BigRational(power.b(), BigInt(2)), exponent, std::move(power)};
}

} // namespace legdet
