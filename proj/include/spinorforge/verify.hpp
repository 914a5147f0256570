#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spinorforge {

struct FailureRecord {
    std::uint64_t sample_index = 0;
    double residual = 0.0;
    std::string inputs_digest; // 16 hex chars, FNV-1a of the sample inputs
};

/// Structured result of one identity sweep. Deterministic given (suite, seed, samples).
struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false; // max_residual < tolerance and no structural violation
    std::vector<FailureRecord> failures;
};

bool known_suite(const std::string& name); // qsl-holst, hodge, torsion, fpk, elko-family, all

std::uint64_t default_samples(const std::string& suite);
double default_tolerance(const std::string& suite);

/// Runs one suite. `samples` and `tol` fall back to the suite defaults.
/// The hodge suite is exhaustive and ignores `samples` beyond reporting.
VerificationReport run_suite(const std::string& suite, std::uint64_t seed,
                             std::optional<std::uint64_t> samples = std::nullopt,
                             std::optional<double> tol = std::nullopt);

/// All suites in fixed order (qsl-holst, hodge, torsion, fpk, elko-family).
std::vector<VerificationReport> run_all_suites(std::uint64_t seed,
                                               std::optional<std::uint64_t> samples = std::nullopt,
                                               std::optional<double> tol = std::nullopt);

} // namespace spinorforge
