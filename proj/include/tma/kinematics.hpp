#pragma once

#include "tma/geometry.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace tma {

/// Constant-velocity motion: p(t) = p0 + v t.
struct UniformLinear {
    WorldPoint p0;
    WorldVector v;
};

/// Constant-acceleration motion: p(t) = p0 + v0 t + a t^2 / 2.
struct UniformlyAccelerated {
    WorldPoint p0;
    WorldVector v0;
    double ax = 0.0;
    double ay = 0.0;
};

/// Parabolic path traversed at constant along-axis rate.
/// In the frame whose first axis is `along` (unit vector), the path is
/// (s, curvature * s^2) with s = speed_along * t.
struct Parabola {
    WorldPoint p0;
    WorldVector along;   // |along| = 1 within 1e-9
    double speed_along = 0.0;  // m/s
    double curvature = 0.0;    // 1/m
};

/// Constant-rate circular motion (marine "circulation"):
/// p(t) = center + radius * (sin(phase0 + w t), cos(phase0 + w t)).
struct Circulation {
    WorldPoint center;
    double radius = 0.0;        // > 0
    double angular_rate = 0.0;  // rad/s
    double phase0 = 0.0;        // rad
};

using TrajectoryModel = std::variant<UniformLinear, UniformlyAccelerated, Parabola, Circulation>;

/// Throws ConfigError on invariant violations (non-unit `along`,
/// non-positive radius, non-finite fields).
void validate_model(const TrajectoryModel& model);

WorldPoint position(const TrajectoryModel& model, double t);

/// Analytic time derivative of position.
WorldVector velocity(const TrajectoryModel& model, double t);

/// One constant-velocity leg of a piecewise-linear observer path.
struct MotionLeg {
    double t_start = 0.0;  // absolute time the leg begins
    WorldPoint p0;         // position at t_start
    WorldVector v;
};

/// Piecewise UniformLinear path, position-continuous at leg joins.
struct LegSequence {
    std::vector<MotionLeg> legs;  // ascending t_start
    double t_end = 0.0;           // end of the last leg

    /// Throws ConfigError when legs are unordered, the span is empty, or a
    /// join is discontinuous by more than 1e-9 m.
    void validate() const;

    double t_begin() const { return legs.empty() ? 0.0 : legs.front().t_start; }
};

/// Convenience builder: continuous legs from a start point and a list of
/// (duration, velocity) segments.
LegSequence make_leg_sequence(WorldPoint start, double t_start,
                              const std::vector<std::pair<double, WorldVector>>& segments);

using ObserverPath = std::variant<TrajectoryModel, LegSequence>;

/// Throws TimeDomainError when t is outside a leg sequence's span.
WorldPoint position(const ObserverPath& path, double t);
WorldVector velocity(const ObserverPath& path, double t);

bool is_single_uniform_leg(const ObserverPath& path);

/// Complete simulation setup: who moves how, when bearings are taken,
/// and how noisy they are.
struct Scenario {
    std::string label;
    std::string initial_range_class;  // "small" | "average" | "big"
    TrajectoryModel target;
    ObserverPath observer;
    double t_start = 0.0;
    double t_end = 0.0;
    double dt = 0.0;
    double bearing_sigma = 0.0;  // radians
    std::uint64_t seed = 0;

    /// Validates time window, dt, sigma, model invariants, observer span
    /// coverage, and that the grid yields at least 2*(max_fit_degree + 1)
    /// observations. Throws ConfigError; messages name the field.
    void validate(int max_fit_degree) const;

    /// True when the observer cannot provide a maneuver (single uniform
    /// leg): bearings-only fits of moving targets will be unobservable.
    bool observer_is_unmaneuvering() const { return is_single_uniform_leg(observer); }
};

/// t_i = t_start + i dt for i = 0..N-1 with t_{N-1} <= t_end.
std::vector<double> sample_times(const Scenario& scenario);

}  // namespace tma
