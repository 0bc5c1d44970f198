#pragma once

#include "tma/estimators.hpp"
#include "tma/kinematics.hpp"
#include "tma/sensing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tma {

/// Per-time errors of one estimate against truth. x/y errors are signed;
/// the rest are non-negative.
struct ErrorSample {
    double t = 0.0;
    double position_error = 0.0;  // ||p_hat - p_true||, m
    double range_error = 0.0;     // | ||p_hat - p_obs|| - ||p_true - p_obs|| |, m
    double x_error = 0.0;         // signed, m
    double y_error = 0.0;         // signed, m
    double velocity_error = 0.0;  // ||v_hat - v_true||, m/s
};

using ErrorSeries = std::vector<ErrorSample>;

/// Score an estimate against the ground-truth track. `observer_track`
/// must align with `truth` sample-for-sample (same times).
/// Throws ShapeError on time misalignment.
ErrorSeries score_run(const TrajectoryEstimate& estimate, const TruthTrack& truth,
                      const std::vector<WorldPoint>& observer_track);

/// Streaming + order statistics of one error field at one time.
struct FieldStats {
    double mean = 0.0;
    double rmse = 0.0;
    double median = 0.0;
    double p5 = 0.0;
    double p95 = 0.0;
};

struct MonteCarloReport {
    std::string method_label;
    std::string scenario_label;
    std::string initial_range_class;
    int n_runs = 0;         // requested; successes + failure_count
    int failure_count = 0;  // runs rejected (unobservable/degenerate/insufficient)
    bool degenerate = false;  // more than 50% of runs failed
    std::uint64_t master_seed = 0;
    std::vector<double> times;
    // Indexed [time]; aggregated over successful runs only.
    std::vector<FieldStats> position_error;
    std::vector<FieldStats> range_error;
    std::vector<FieldStats> x_error;
    std::vector<FieldStats> y_error;
    std::vector<FieldStats> velocity_error;
};

/// An estimator entry in a comparison: the baseline or a configured
/// N-Polynomials run.
struct MethodSpec {
    std::string label;
    bool nbearings = false;  // baseline fit; config ignored except labels
    EstimatorConfig config;
};

struct MonteCarloOptions {
    int n_runs = 1000;
    int threads = 1;
    // Retain per-run error series (spot-check mode, intended for small
    // n_runs) so aggregates can be recomputed independently.
    bool keep_raw = false;
};

/// Raw per-run results for spot checks: raw[method][run] is the error
/// series of that run, or empty when the method failed on the run.
using RawErrorStore = std::vector<std::vector<ErrorSeries>>;

/// Paired Monte Carlo comparison. Run j uses sub-seed
/// derive_stream_seed(scenario.seed, j); every method consumes the same
/// observation series of that run. Deterministic for any thread count:
/// results are aggregated in ascending run order after the parallel phase.
std::vector<MonteCarloReport> run_monte_carlo(const Scenario& scenario,
                                              const std::vector<MethodSpec>& methods,
                                              const MonteCarloOptions& options,
                                              RawErrorStore* raw_out = nullptr);

/// Linear-interpolation percentile (same convention as numpy default).
/// `sorted_values` must be non-empty and ascending. p in [0, 100].
double percentile(const std::vector<double>& sorted_values, double p);

/// Aligned multi-method comparison with RMSE ratio columns against the
/// baseline report (the one labeled "nbearings", else the first).
struct ComparisonTable {
    static constexpr int kMetricCount = 5;
    static const char* metric_name(int metric);  // pos, range, x, y, vel

    std::vector<double> times;
    std::vector<std::string> methods;
    size_t baseline = 0;
    // rmse[metric][method][time]
    std::vector<std::vector<std::vector<double>>> rmse;
    // ratio[metric][method][time] = baseline/method; empty optional where
    // the denominator magnitude is < 1e-12 or for the baseline itself.
    std::vector<std::vector<std::vector<std::optional<double>>>> ratio;
};

/// Throws ShapeError when the reports' time grids differ.
ComparisonTable compare_table(const std::vector<MonteCarloReport>& reports);

}  // namespace tma
