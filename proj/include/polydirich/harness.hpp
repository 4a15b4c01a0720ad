#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace polydirich {

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

enum class DivergenceClass { convergent, log_divergent, power_divergent, inconclusive };
std::string to_string(DivergenceClass c);

struct DivergenceVerdict {
    DivergenceClass classification = DivergenceClass::inconclusive;
    double fit_constant = 0.0;  // slope of the winning model
    double fit_residual = 0.0;  // relative rms misfit
    double exponent = 0.0;      // p of the power model, 0 for the log model
};

/// Classifies the growth of partial sums sampled at increasing sizes N.
/// Convergent requires the last increment below cauchy_tol (relative).
/// Otherwise least-squares fits of S against b + c ln N and b + c N^p over a
/// p grid compete by residual; a winning residual above residual_bound is
/// inconclusive. Fewer than 4 samples, or non-increasing N, is a precondition
/// error.
DivergenceVerdict divergence_trend(const std::vector<std::pair<double, double>>& partial_sums,
                                   double residual_bound = 0.05, double cauchy_tol = 1e-3);

struct HarnessConfig {
    long deg = 512;           // degree box for series-level computations
    int max_dyadic_exp = 13;  // trend partial sums sampled at N = 2^8 .. 2^max
    unsigned long seed = 20240817;
    int threads = 0;  // 0 = hardware concurrency
};

struct CheckReport {
    std::string check_id;
    std::map<std::string, double> params;
    Verdict verdict = Verdict::inconclusive;
    std::map<std::string, double> metrics;
    std::map<std::string, double> tolerances;
    std::string note;
    long runtime_ms = 0;
};

struct SuiteReport {
    std::vector<CheckReport> checks;
    int passed = 0;
    int failed = 0;
    int inconclusive = 0;
    long runtime_ms = 0;
};

/// Stable list of available check ids.
std::vector<std::string> check_catalog();

/// Runs one catalog check. Numeric params override per-check defaults
/// (weight components a1,a2,b1,b2 and similar); unknown check_id throws.
/// Checks are deterministic given (params, config.seed).
CheckReport run_check(const std::string& check_id, const HarnessConfig& config,
                      const std::map<std::string, double>& params = {});

/// Runs the whole catalog, checks distributed over a worker pool.
SuiteReport full_suite(const HarnessConfig& config);

/// JSON serialization; timestamps are opt-in so identical runs can be
/// compared byte for byte.
std::string to_json(const CheckReport& report);
std::string to_json(const SuiteReport& report, bool with_timestamp);

}  // namespace polydirich
