#pragma once

#include "tma/geometry.hpp"
#include "tma/kinematics.hpp"

#include <cstdint>
#include <vector>

namespace tma {

/// One bearing measurement: when, from where, what angle, how noisy.
/// Carries no target truth by construction; estimators see only this.
struct BearingObservation {
    double t = 0.0;
    WorldPoint observer;
    double beta = 0.0;   // radians in (-pi, pi], clockwise from North
    double sigma = 0.0;  // radians, >= 0
};

/// Validated, time-ordered series of bearing observations.
class ObservationSeries {
public:
    /// Throws ShapeError when empty, times not strictly increasing, or
    /// sigmas differ within the series (the noise is white and identically
    /// distributed).
    static ObservationSeries from_observations(std::vector<BearingObservation> obs);

    const std::vector<BearingObservation>& observations() const { return obs_; }
    size_t size() const { return obs_.size(); }
    const BearingObservation& operator[](size_t i) const { return obs_[i]; }
    double t_first() const { return obs_.front().t; }
    double t_last() const { return obs_.back().t; }
    double sigma() const { return obs_.front().sigma; }

    auto begin() const { return obs_.begin(); }
    auto end() const { return obs_.end(); }

private:
    explicit ObservationSeries(std::vector<BearingObservation> obs) : obs_(std::move(obs)) {}
    std::vector<BearingObservation> obs_;
};

/// Reduce an angle to (-pi, pi] modulo 2 pi.
double wrap_angle(double a);

/// Bearing from observer to target, clockwise from North:
/// beta = atan2(dx, dy), so (sin beta, cos beta) points at the target.
/// Throws DegenerateGeometryError when the points are closer than 1e-9 m.
double true_bearing(WorldPoint observer, WorldPoint target);

/// Ground-truth target state at one sample time. Evaluation-only; never
/// visible to estimators.
struct TruthSample {
    double t = 0.0;
    WorldPoint position;
    WorldVector velocity;
};

using TruthTrack = std::vector<TruthSample>;

struct SimulatedRun {
    ObservationSeries observations;
    TruthTrack truth;
};

/// Generate the observation series for a scenario: exact observer
/// positions, bearings corrupted by i.i.d. zero-mean Gaussian noise of
/// std scenario.bearing_sigma, re-wrapped into (-pi, pi].
///
/// Deterministic given (scenario, stream_seed). Throws
/// DegenerateGeometryError naming t_i when observer and target coincide.
SimulatedRun observe(const Scenario& scenario, std::uint64_t stream_seed);

/// observe() with the scenario's own seed.
SimulatedRun observe(const Scenario& scenario);

}  // namespace tma
