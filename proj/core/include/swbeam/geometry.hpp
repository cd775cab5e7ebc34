#pragma once

#include <cmath>
#include <numbers>

namespace swbeam {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double squared_distance(Point a, Point b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  return dx * dx + dy * dy;
}

inline double distance(Point a, Point b) {
  return std::sqrt(squared_distance(a, b));
}

// Closed-ball range predicate. All range checks in the library go through
// this so boundary behaviour is identical everywhere (squared comparison,
// no sqrt rounding).
inline bool within_range(Point a, Point b, double range) {
  return squared_distance(a, b) <= range * range;
}

// Bearing of `to` as seen from `from`, in (-pi, pi].
inline double bearing(Point from, Point to) {
  return std::atan2(to.y - from.y, to.x - from.x);
}

// Normalize an angle to [0, 2pi).
inline double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  return r;
}

// Signed angular difference a - b folded to [-pi, pi].
inline double angle_difference(double a, double b) {
  double d = std::fmod(a - b, kTwoPi);
  if (d > kPi) {
    d -= kTwoPi;
  } else if (d < -kPi) {
    d += kTwoPi;
  }
  return d;
}

}  // namespace swbeam
