#ifndef UAVVLC_GEOMETRY_HPP
#define UAVVLC_GEOMETRY_HPP

#include <cmath>
#include <numbers>

namespace uavvlc {

/// Horizontal position on the ground plane, in meters.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point2, Point2) = default;

  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double squared_norm(Point2 p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

/// An angle stored in degrees so that configuration files round-trip exactly.
class Angle {
 public:
  constexpr Angle() = default;

  static constexpr Angle degrees(double deg) { return Angle(deg); }
  static constexpr Angle radians(double rad) { return Angle(rad * 180.0 / std::numbers::pi); }

  constexpr double deg() const { return deg_; }
  constexpr double rad() const { return deg_ * std::numbers::pi / 180.0; }

  friend constexpr bool operator==(Angle, Angle) = default;

 private:
  explicit constexpr Angle(double deg) : deg_(deg) {}
  double deg_ = 0.0;
};

}  // namespace uavvlc

#endif  // UAVVLC_GEOMETRY_HPP
