#pragma once

// Per-prime verification targets, prime sweeps, and report rendering.

#include "legdet/arith.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace legdet {

enum class Target { Sun, Chapman, Carlitz, Unit, Lemma32, Gauss, Cauchy, Decomposition, MTilde };
enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Target target);
std::string_view to_string(Status status);
std::optional<Target> parse_target(std::string_view name);
const std::vector<Target>& all_targets();

struct VerificationRecord {
    std::uint64_t p = 0;
    Target target = Target::Sun;
    Status status = Status::Skipped;
    std::string computed;
    std::string predicted;
    /// Auxiliary values (class numbers, unit coordinates, ...). A skipped
    /// record carries its reason under "reason"; a failure raised by an
    /// internal cross-check carries it under "error".
    std::map<std::string, std::string> aux;

    friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

inline constexpr double kDefaultTolerance = 1e-6;
inline constexpr std::uint64_t kCarlitzCap = 31;
inline constexpr std::uint64_t kGaussSquareCap = 61;
inline constexpr std::uint64_t kGaussIdentityCap = 31;
inline constexpr int kCauchyInstancesPerPrime = 10;

VerificationRecord verify_sun(const OddPrime& p);
VerificationRecord verify_chapman(const OddPrime& p);
VerificationRecord verify_carlitz(const OddPrime& p);
VerificationRecord verify_unit(const OddPrime& p);
VerificationRecord verify_lemma32(const OddPrime& p, double tolerance = kDefaultTolerance);
VerificationRecord verify_gauss(const OddPrime& p);
VerificationRecord verify_cauchy(const OddPrime& p);
VerificationRecord verify_decomposition(const OddPrime& p, double tolerance = kDefaultTolerance);
VerificationRecord verify_mtilde(const OddPrime& p, double tolerance = kDefaultTolerance);

/// Dispatches to the target's verifier. A VerificationError raised inside
/// becomes a FAIL record rather than propagating.
VerificationRecord verify(Target target, const OddPrime& p, double tolerance = kDefaultTolerance);

struct SweepOptions {
    double tolerance = kDefaultTolerance;
    unsigned jobs = 1;
};

struct SweepReport {
    Target target = Target::Sun;
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    std::vector<VerificationRecord> records;  ///< ascending p
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
    double elapsed_s = 0.0;

    /// 0 iff no FAIL record, 1 otherwise.
    int exit_code() const { return fail == 0 ? 0 : 1; }
};

/// One record per odd prime in [from, to], computed on `jobs` worker threads
/// and merged in ascending order. Throws std::invalid_argument unless
/// 3 <= from <= to < 2^32.
SweepReport run_sweep(Target target, std::uint64_t from, std::uint64_t to, const SweepOptions& options = {});

enum class ReportFormat { Text, Json, Csv };

std::string render_report(const SweepReport& report, ReportFormat format);

} // namespace legdet
