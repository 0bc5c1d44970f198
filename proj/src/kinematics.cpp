#include "tma/kinematics.hpp"

#include "tma/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tma {

namespace {

WorldVector perpendicular(WorldVector v) { return {-v.vy, v.vx}; }

struct PositionVisitor {
    double t;

    WorldPoint operator()(const UniformLinear& m) const {
        return m.p0 + t * m.v;
    }
    WorldPoint operator()(const UniformlyAccelerated& m) const {
        return {m.p0.x + m.v0.vx * t + 0.5 * m.ax * t * t,
                m.p0.y + m.v0.vy * t + 0.5 * m.ay * t * t};
    }
    WorldPoint operator()(const Parabola& m) const {
        double s = m.speed_along * t;
        WorldVector perp = perpendicular(m.along);
        return m.p0 + s * m.along + (m.curvature * s * s) * perp;
    }
    WorldPoint operator()(const Circulation& m) const {
        double phase = m.phase0 + m.angular_rate * t;
        return {m.center.x + m.radius * std::sin(phase),
                m.center.y + m.radius * std::cos(phase)};
    }
};

struct VelocityVisitor {
    double t;

    WorldVector operator()(const UniformLinear& m) const { return m.v; }
    WorldVector operator()(const UniformlyAccelerated& m) const {
        return {m.v0.vx + m.ax * t, m.v0.vy + m.ay * t};
    }
    WorldVector operator()(const Parabola& m) const {
        double s = m.speed_along * t;
        WorldVector perp = perpendicular(m.along);
        return m.speed_along * m.along + (2.0 * m.curvature * s * m.speed_along) * perp;
    }
    WorldVector operator()(const Circulation& m) const {
        double phase = m.phase0 + m.angular_rate * t;
        return {m.radius * m.angular_rate * std::cos(phase),
                -m.radius * m.angular_rate * std::sin(phase)};
    }
};

struct ValidateVisitor {
    void operator()(const UniformLinear& m) const {
        if (!finite(m.p0) || !finite(m.v)) throw ConfigError("uniform model: non-finite field");
    }
    void operator()(const UniformlyAccelerated& m) const {
        if (!finite(m.p0) || !finite(m.v0) || !std::isfinite(m.ax) || !std::isfinite(m.ay))
            throw ConfigError("accelerated model: non-finite field");
    }
    void operator()(const Parabola& m) const {
        if (!finite(m.p0) || !finite(m.along) || !std::isfinite(m.speed_along) ||
            !std::isfinite(m.curvature))
            throw ConfigError("parabola model: non-finite field");
        if (std::abs(norm(m.along) - 1.0) > 1e-9)
            throw ConfigError("parabola along: must be a unit vector within 1e-9");
    }
    void operator()(const Circulation& m) const {
        if (!finite(m.center) || !std::isfinite(m.radius) || !std::isfinite(m.angular_rate) ||
            !std::isfinite(m.phase0))
            throw ConfigError("circulation model: non-finite field");
        if (!(m.radius > 0.0)) throw ConfigError("circulation radius: must be > 0");
    }
};

const MotionLeg& leg_at(const LegSequence& seq, double t) {
    if (seq.legs.empty()) throw ConfigError("observer legs: empty sequence");
    if (t < seq.legs.front().t_start || t > seq.t_end) {
        std::ostringstream os;
        os << "time " << t << " outside observer leg span [" << seq.legs.front().t_start
           << ", " << seq.t_end << "]";
        throw TimeDomainError(os.str());
    }
    auto it = std::upper_bound(seq.legs.begin(), seq.legs.end(), t,
                               [](double v, const MotionLeg& l) { return v < l.t_start; });
    return *(it - 1);
}

}  // namespace

void validate_model(const TrajectoryModel& model) { std::visit(ValidateVisitor{}, model); }

WorldPoint position(const TrajectoryModel& model, double t) {
    return std::visit(PositionVisitor{t}, model);
}

WorldVector velocity(const TrajectoryModel& model, double t) {
    return std::visit(VelocityVisitor{t}, model);
}

void LegSequence::validate() const {
    if (legs.empty()) throw ConfigError("observer legs: at least one leg required");
    for (size_t i = 0; i < legs.size(); ++i) {
        if (!finite(legs[i].p0) || !finite(legs[i].v) || !std::isfinite(legs[i].t_start))
            throw ConfigError("observer legs: non-finite field");
    }
    for (size_t i = 1; i < legs.size(); ++i) {
        if (!(legs[i].t_start > legs[i - 1].t_start))
            throw ConfigError("observer legs: t_start must be strictly increasing");
        double span = legs[i].t_start - legs[i - 1].t_start;
        WorldPoint end = legs[i - 1].p0 + span * legs[i - 1].v;
        if (distance(end, legs[i].p0) > 1e-9) {
            std::ostringstream os;
            os << "observer legs: position discontinuity of " << distance(end, legs[i].p0)
               << " m at join t=" << legs[i].t_start;
            throw ConfigError(os.str());
        }
    }
    if (!(t_end > legs.back().t_start))
        throw ConfigError("observer legs: t_end must exceed the last leg start");
}

LegSequence make_leg_sequence(WorldPoint start, double t_start,
                              const std::vector<std::pair<double, WorldVector>>& segments) {
    if (segments.empty()) throw ConfigError("observer legs: at least one segment required");
    LegSequence seq;
    WorldPoint p = start;
    double t = t_start;
    for (const auto& [duration, v] : segments) {
        if (!(duration > 0.0)) throw ConfigError("observer leg duration: must be > 0");
        seq.legs.push_back({t, p, v});
        p = p + duration * v;
        t += duration;
    }
    seq.t_end = t;
    seq.validate();
    return seq;
}

WorldPoint position(const ObserverPath& path, double t) {
    if (const auto* model = std::get_if<TrajectoryModel>(&path)) return position(*model, t);
    const auto& seq = std::get<LegSequence>(path);
    const MotionLeg& leg = leg_at(seq, t);
    return leg.p0 + (t - leg.t_start) * leg.v;
}

WorldVector velocity(const ObserverPath& path, double t) {
    if (const auto* model = std::get_if<TrajectoryModel>(&path)) return velocity(*model, t);
    return leg_at(std::get<LegSequence>(path), t).v;
}

bool is_single_uniform_leg(const ObserverPath& path) {
    if (const auto* model = std::get_if<TrajectoryModel>(&path))
        return std::holds_alternative<UniformLinear>(*model);
    return std::get<LegSequence>(path).legs.size() == 1;
}

void Scenario::validate(int max_fit_degree) const {
    if (!(t_end > t_start)) throw ConfigError("t_end_s: must be > t_start_s");
    if (!(dt > 0.0)) throw ConfigError("dt_s: must be > 0");
    if (bearing_sigma < 0.0) throw ConfigError("sigma_deg: must be >= 0");
    validate_model(target);
    if (const auto* model = std::get_if<TrajectoryModel>(&observer)) {
        validate_model(*model);
    } else {
        const auto& seq = std::get<LegSequence>(observer);
        seq.validate();
        if (seq.t_begin() > t_start || seq.t_end < t_end)
            throw ConfigError("observer legs: must cover [t_start_s, t_end_s]");
    }
    auto n_obs = static_cast<long>(std::floor((t_end - t_start) / dt)) + 1;
    long needed = 2L * (max_fit_degree + 1);
    if (n_obs < needed) {
        std::ostringstream os;
        os << "dt_s: grid yields " << n_obs << " observations, need at least " << needed
           << " for degree " << max_fit_degree;
        throw ConfigError(os.str());
    }
}

std::vector<double> sample_times(const Scenario& scenario) {
    // count = floor(span/dt) + 1; the grid formula t0 + i*dt can overshoot
    // t_end by an ulp at the final point, which still is the intended sample.
    auto count = static_cast<long>(std::floor((scenario.t_end - scenario.t_start) / scenario.dt)) + 1;
    std::vector<double> times;
    times.reserve(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) {
        times.push_back(scenario.t_start + static_cast<double>(i) * scenario.dt);
    }
    return times;
}

}  // namespace tma
