#include "tma/evaluation.hpp"

#include "tma/errors.hpp"
#include "tma/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace tma {

ErrorSeries score_run(const TrajectoryEstimate& estimate, const TruthTrack& truth,
                      const std::vector<WorldPoint>& observer_track) {
    if (truth.size() != observer_track.size()) {
        std::ostringstream os;
        os << "truth track (" << truth.size() << ") and observer track ("
           << observer_track.size() << ") lengths differ";
        throw ShapeError(os.str());
    }
    ErrorSeries errors;
    errors.reserve(truth.size());
    for (size_t i = 0; i < truth.size(); ++i) {
        const TruthSample& ts = truth[i];
        PredictedState st = predict(estimate, ts.t);
        ErrorSample e;
        e.t = ts.t;
        e.x_error = st.position.x - ts.position.x;
        e.y_error = st.position.y - ts.position.y;
        e.position_error = std::hypot(e.x_error, e.y_error);
        e.range_error = std::abs(distance(st.position, observer_track[i]) -
                                 distance(ts.position, observer_track[i]));
        e.velocity_error = std::hypot(st.velocity.vx - ts.velocity.vx,
                                      st.velocity.vy - ts.velocity.vy);
        errors.push_back(e);
    }
    return errors;
}

double percentile(const std::vector<double>& sorted_values, double p) {
    const size_t n = sorted_values.size();
    if (n == 1) return sorted_values[0];
    double h = (static_cast<double>(n) - 1.0) * p / 100.0;
    auto lo = static_cast<size_t>(std::floor(h));
    if (lo + 1 >= n) return sorted_values[n - 1];
    double frac = h - static_cast<double>(lo);
    return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo]);
}

namespace {

constexpr int kFieldCount = 5;

double field_value(const ErrorSample& e, int field) {
    switch (field) {
        case 0: return e.position_error;
        case 1: return e.range_error;
        case 2: return e.x_error;
        case 3: return e.y_error;
        default: return e.velocity_error;
    }
}

std::vector<FieldStats>& report_field(MonteCarloReport& r, int field) {
    switch (field) {
        case 0: return r.position_error;
        case 1: return r.range_error;
        case 2: return r.x_error;
        case 3: return r.y_error;
        default: return r.velocity_error;
    }
}

struct RunResult {
    // per method: error series, or empty on failure
    std::vector<ErrorSeries> per_method;
    std::vector<bool> failed;
};

}  // namespace

std::vector<MonteCarloReport> run_monte_carlo(const Scenario& scenario,
                                              const std::vector<MethodSpec>& methods,
                                              const MonteCarloOptions& options,
                                              RawErrorStore* raw_out) {
    if (options.n_runs < 1) throw ConfigError("runs: must be >= 1");
    if (methods.empty()) throw ConfigError("methods: at least one required");

    const auto n_runs = static_cast<size_t>(options.n_runs);
    const size_t n_methods = methods.size();
    std::vector<double> times = sample_times(scenario);
    const size_t n_times = times.size();

    std::vector<RunResult> results(n_runs);

    auto execute_run = [&](size_t j) {
        std::uint64_t sub_seed = derive_stream_seed(scenario.seed, j);
        SimulatedRun run = observe(scenario, sub_seed);
        std::vector<WorldPoint> observer_track;
        observer_track.reserve(run.truth.size());
        for (const auto& obs : run.observations) observer_track.push_back(obs.observer);

        RunResult& rr = results[j];
        rr.per_method.resize(n_methods);
        rr.failed.assign(n_methods, false);
        for (size_t mi = 0; mi < n_methods; ++mi) {
            try {
                TrajectoryEstimate est =
                    methods[mi].nbearings
                        ? estimate_n_bearings(run.observations)
                        : estimate_n_polynomials(run.observations, methods[mi].config);
                rr.per_method[mi] = score_run(est, run.truth, observer_track);
            } catch (const Error&) {
                rr.failed[mi] = true;
            }
        }
    };

    int threads = std::max(1, options.threads);
    if (threads == 1 || n_runs == 1) {
        for (size_t j = 0; j < n_runs; ++j) execute_run(j);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t j = next.fetch_add(1);
                if (j >= n_runs) return;
                execute_run(j);
            }
        };
        std::vector<std::thread> pool;
        for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Aggregate in ascending run order: deterministic for any thread count.
    std::vector<MonteCarloReport> reports(n_methods);
    if (raw_out) raw_out->assign(n_methods, {});
    for (size_t mi = 0; mi < n_methods; ++mi) {
        MonteCarloReport& rep = reports[mi];
        rep.method_label = methods[mi].label;
        rep.scenario_label = scenario.label;
        rep.initial_range_class = scenario.initial_range_class;
        rep.n_runs = options.n_runs;
        rep.master_seed = scenario.seed;
        rep.times = times;

        // Streaming sums for mean/RMSE plus stored values for percentiles.
        std::vector<std::vector<double>> sum(kFieldCount, std::vector<double>(n_times, 0.0));
        std::vector<std::vector<double>> sumsq(kFieldCount, std::vector<double>(n_times, 0.0));
        std::vector<std::vector<std::vector<double>>> stored(
            kFieldCount, std::vector<std::vector<double>>(n_times));

        int successes = 0;
        for (size_t j = 0; j < n_runs; ++j) {
            if (results[j].failed[mi]) {
                ++rep.failure_count;
                if (raw_out) (*raw_out)[mi].emplace_back();
                continue;
            }
            const ErrorSeries& es = results[j].per_method[mi];
            ++successes;
            for (size_t ti = 0; ti < n_times; ++ti) {
                for (int f = 0; f < kFieldCount; ++f) {
                    double v = field_value(es[ti], f);
                    sum[static_cast<size_t>(f)][ti] += v;
                    sumsq[static_cast<size_t>(f)][ti] += v * v;
                    stored[static_cast<size_t>(f)][ti].push_back(v);
                }
            }
            if (raw_out && options.keep_raw) (*raw_out)[mi].push_back(es);
            else if (raw_out) (*raw_out)[mi].emplace_back();
        }

        rep.degenerate = rep.failure_count * 2 > rep.n_runs;
        for (int f = 0; f < kFieldCount; ++f) {
            auto& dest = report_field(rep, f);
            dest.resize(n_times);
            for (size_t ti = 0; ti < n_times; ++ti) {
                if (successes == 0) continue;
                FieldStats& fs = dest[ti];
                double cnt = successes;
                fs.mean = sum[static_cast<size_t>(f)][ti] / cnt;
                fs.rmse = std::sqrt(sumsq[static_cast<size_t>(f)][ti] / cnt);
                auto& vals = stored[static_cast<size_t>(f)][ti];
                std::sort(vals.begin(), vals.end());
                fs.p5 = percentile(vals, 5.0);
                fs.median = percentile(vals, 50.0);
                fs.p95 = percentile(vals, 95.0);
            }
        }
    }
    return reports;
}

constexpr int ComparisonTable::kMetricCount;

const char* ComparisonTable::metric_name(int metric) {
    switch (metric) {
        case 0: return "pos";
        case 1: return "range";
        case 2: return "x";
        case 3: return "y";
        default: return "vel";
    }
}

ComparisonTable compare_table(const std::vector<MonteCarloReport>& reports) {
    if (reports.empty()) throw ShapeError("compare_table: no reports");
    const auto& t0 = reports.front().times;
    for (const auto& r : reports) {
        if (r.times.size() != t0.size() ||
            !std::equal(r.times.begin(), r.times.end(), t0.begin()))
            throw ShapeError("compare_table: reports have mismatched time grids");
    }

    ComparisonTable table;
    table.times = t0;
    for (const auto& r : reports) table.methods.push_back(r.method_label);
    table.baseline = 0;
    for (size_t i = 0; i < reports.size(); ++i) {
        if (reports[i].method_label == "nbearings") {
            table.baseline = i;
            break;
        }
    }

    const size_t n_methods = reports.size();
    const size_t n_times = t0.size();
    table.rmse.assign(ComparisonTable::kMetricCount,
                      std::vector<std::vector<double>>(n_methods, std::vector<double>(n_times)));
    table.ratio.assign(ComparisonTable::kMetricCount,
                       std::vector<std::vector<std::optional<double>>>(
                           n_methods, std::vector<std::optional<double>>(n_times)));

    auto metric_stats = [](const MonteCarloReport& r, int metric) -> const std::vector<FieldStats>& {
        switch (metric) {
            case 0: return r.position_error;
            case 1: return r.range_error;
            case 2: return r.x_error;
            case 3: return r.y_error;
            default: return r.velocity_error;
        }
    };

    for (int metric = 0; metric < ComparisonTable::kMetricCount; ++metric) {
        for (size_t mi = 0; mi < n_methods; ++mi) {
            const auto& stats = metric_stats(reports[mi], metric);
            for (size_t ti = 0; ti < n_times; ++ti)
                table.rmse[static_cast<size_t>(metric)][mi][ti] = stats[ti].rmse;
        }
        if (n_methods == 1) continue;  // degenerate input: absolute columns only
        for (size_t mi = 0; mi < n_methods; ++mi) {
            if (mi == table.baseline) continue;
            for (size_t ti = 0; ti < n_times; ++ti) {
                double denom = table.rmse[static_cast<size_t>(metric)][mi][ti];
                double numer = table.rmse[static_cast<size_t>(metric)][table.baseline][ti];
                if (std::abs(denom) >= 1e-12)
                    table.ratio[static_cast<size_t>(metric)][mi][ti] = numer / denom;
            }
        }
    }
    return table;
}

}  // namespace tma
