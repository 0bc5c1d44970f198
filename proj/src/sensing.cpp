#include "tma/sensing.hpp"

#include "tma/errors.hpp"
#include "tma/rng.hpp"

#include <cmath>
#include <sstream>

namespace tma {

ObservationSeries ObservationSeries::from_observations(std::vector<BearingObservation> obs) {
    if (obs.empty()) throw ShapeError("observation series: must contain at least one observation");
    for (size_t i = 0; i < obs.size(); ++i) {
        if (!std::isfinite(obs[i].t) || !finite(obs[i].observer) || !std::isfinite(obs[i].beta))
            throw ShapeError("observation series: non-finite field");
        if (obs[i].sigma < 0.0) throw ShapeError("observation series: sigma must be >= 0");
        if (obs[i].beta <= -kPi || obs[i].beta > kPi)
            throw ShapeError("observation series: bearing outside (-pi, pi]");
    }
    for (size_t i = 1; i < obs.size(); ++i) {
        if (!(obs[i].t > obs[i - 1].t))
            throw ShapeError("observation series: times must be strictly increasing");
        if (obs[i].sigma != obs[0].sigma)
            throw ShapeError("observation series: all sigmas must be equal (white noise)");
    }
    return ObservationSeries(std::move(obs));
}

double wrap_angle(double a) {
    double r = std::remainder(a, kTwoPi);
    // remainder lands in [-pi, pi]; fold the closed -pi endpoint.
    return r <= -kPi ? r + kTwoPi : r;
}

double true_bearing(WorldPoint observer, WorldPoint target) {
    WorldVector d = target - observer;
    if (norm(d) <= 1e-9) {
        std::ostringstream os;
        os << "bearing undefined: observer (" << observer.x << ", " << observer.y
           << ") coincides with target";
        throw DegenerateGeometryError(os.str());
    }
    return std::atan2(d.vx, d.vy);
}

SimulatedRun observe(const Scenario& scenario, std::uint64_t stream_seed) {
    GaussianStream noise(stream_seed);
    std::vector<BearingObservation> obs;
    TruthTrack truth;
    for (double t : sample_times(scenario)) {
        WorldPoint obs_pos = position(scenario.observer, t);
        WorldPoint tgt_pos = position(scenario.target, t);
        double beta;
        try {
            beta = true_bearing(obs_pos, tgt_pos);
        } catch (const DegenerateGeometryError&) {
            std::ostringstream os;
            os << "observer and target coincide at t=" << t;
            throw DegenerateGeometryError(os.str());
        }
        if (scenario.bearing_sigma > 0.0) {
            beta = wrap_angle(beta + scenario.bearing_sigma * noise.next_gaussian());
        }
        obs.push_back({t, obs_pos, beta, scenario.bearing_sigma});
        truth.push_back({t, tgt_pos, velocity(scenario.target, t)});
    }
    return {ObservationSeries::from_observations(std::move(obs)), std::move(truth)};
}

SimulatedRun observe(const Scenario& scenario) { return observe(scenario, scenario.seed); }

}  // namespace tma
