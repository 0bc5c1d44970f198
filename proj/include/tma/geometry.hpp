#pragma once

#include <cmath>

namespace tma {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// 2-D Cartesian position, meters. x is East, y is North.
struct WorldPoint {
    double x = 0.0;
    double y = 0.0;
};

/// 2-D velocity, m/s.
struct WorldVector {
    double vx = 0.0;
    double vy = 0.0;
};

inline WorldPoint operator+(WorldPoint p, WorldVector v) { return {p.x + v.vx, p.y + v.vy}; }
inline WorldVector operator+(WorldVector a, WorldVector b) { return {a.vx + b.vx, a.vy + b.vy}; }
inline WorldVector operator-(WorldPoint a, WorldPoint b) { return {a.x - b.x, a.y - b.y}; }
inline WorldVector operator*(double s, WorldVector v) { return {s * v.vx, s * v.vy}; }

inline double norm(WorldVector v) { return std::hypot(v.vx, v.vy); }
inline double distance(WorldPoint a, WorldPoint b) { return norm(a - b); }

inline bool finite(WorldPoint p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline bool finite(WorldVector v) { return std::isfinite(v.vx) && std::isfinite(v.vy); }

}  // namespace tma
