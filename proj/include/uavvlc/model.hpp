#ifndef UAVVLC_MODEL_HPP
#define UAVVLC_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "uavvlc/geometry.hpp"

namespace uavvlc {

/// Physical and model constants of the two-UAV VLC network.
///
/// Defaults are the reference deployment: a 200 m x 200 m area, UAVs at
/// 100 m carrying 200 kW nominal LED power, 60 degree LED half-power and
/// receiver FoV semi-angles, 10 m D2D range and K = 8 centroids per UAV.
struct NetworkParams {
  double area_width = 200.0;       // m
  double area_height = 200.0;      // m
  double uav_height = 100.0;       // m, common altitude of both UAVs
  double led_power = 2.0e5;        // W
  double dimming = 1.0;            // (0, 1]
  double noise_sigma = 0.1;        // noise standard deviation; sqrt of 0.01 W
  double detector_area = 10.0;     // m^2
  double refractive_index = 1.5;
  Angle half_power_angle = Angle::degrees(60.0);
  Angle fov_half_angle = Angle::degrees(60.0);
  double illum_threshold = 0.4;    // lux
  double d2d_range = 10.0;         // m
  int capacity = 8;                // centroids per UAV
  double weight_rate = 2.0 / 3.0;
  double weight_d2d = 1.0 / 3.0;

  /// Throws std::invalid_argument naming the first offending field.
  void validate() const;

  friend bool operator==(const NetworkParams&, const NetworkParams&) = default;
};

/// Horizontal UAV positions; both fly at NetworkParams::uav_height.
struct Placement {
  Point2 uav1;
  Point2 uav2;

  const Point2& operator[](int uav) const { return uav == 1 ? uav1 : uav2; }
  Point2& operator[](int uav) { return uav == 1 ? uav1 : uav2; }

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct Scenario {
  std::vector<Point2> users;
  NetworkParams params;
  Placement initial_placement;  // both UAVs at the area corner by default
  std::uint64_t seed = 0;

  std::size_t size() const { return users.size(); }
  void validate() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

enum class ServeKind : std::uint8_t { unserved, uav1, uav2, d2d };

/// How one user is served. `via` is the centroid index for D2D service.
struct ServeTag {
  ServeKind kind = ServeKind::unserved;
  std::size_t via = 0;

  static constexpr ServeTag unserved() { return {}; }
  static constexpr ServeTag uav(int which) {
    return {which == 1 ? ServeKind::uav1 : ServeKind::uav2, 0};
  }
  static constexpr ServeTag d2d(std::size_t centroid) { return {ServeKind::d2d, centroid}; }

  bool is_uav() const { return kind == ServeKind::uav1 || kind == ServeKind::uav2; }
  int uav_index() const { return kind == ServeKind::uav1 ? 1 : kind == ServeKind::uav2 ? 2 : 0; }

  friend constexpr bool operator==(ServeTag a, ServeTag b) {
    return a.kind == b.kind && (a.kind != ServeKind::d2d || a.via == b.via);
  }
};

/// Per-user serving decision. One tag per user, so every user has at most
/// one transmitter by construction.
struct Association {
  std::vector<ServeTag> serve;

  Association() = default;
  explicit Association(std::size_t users) : serve(users) {}

  std::size_t size() const { return serve.size(); }
  std::size_t count(ServeKind kind) const;
  std::vector<std::size_t> served_by(int uav) const;

  friend bool operator==(const Association&, const Association&) = default;
};

// Link budget. Angles are in radians.

double lambertian_order(double half_power_angle_rad);
double optical_gain(double incidence_rad, const NetworkParams& params);

/// 3-D distance from a UAV at altitude uav_height to a ground user.
double slant_distance(Point2 uav, Point2 user, const NetworkParams& params);

/// Line-of-sight DC gain with transmitter and receiver facing each other
/// vertically, so radiation and incidence angles coincide. Zero at and beyond
/// the receiver's FoV semi-angle.
double channel_gain(Point2 uav, Point2 user, const NetworkParams& params);

double illuminance(double gain, const NetworkParams& params);

/// Lower-bound achievable rate in bps/Hz for a dimmable VLC link.
double link_rate(double gain, const NetworkParams& params);

/// Largest slant distance at which illuminance still reaches the threshold,
/// ignoring the FoV cutoff.
double illumination_distance_limit(const NetworkParams& params);

/// Slant distance at which the incidence angle reaches the FoV semi-angle.
double fov_distance_limit(const NetworkParams& params);

/// min(illumination limit, FoV limit). A user is covered iff its slant
/// distance is <= the illumination limit and strictly < the FoV limit.
double coverage_distance_limit(const NetworkParams& params);

/// Whether `user` receives at least the illumination threshold from `uav`.
bool is_covered(Point2 uav, Point2 user, const NetworkParams& params);

double link_rate_between(Point2 uav, Point2 user, const NetworkParams& params);

/// Sum of UAV link rates over UAV-served users. Throws std::invalid_argument
/// when the association and scenario sizes differ.
double sum_rate(const Placement& placement, const Association& association,
                const Scenario& scenario);

std::size_t d2d_count(const Association& association);

/// a * sum_rate + b * (number of D2D-served users).
double objective(const Placement& placement, const Association& association,
                 const Scenario& scenario);

/// Illuminance each user receives from its serving UAV; 0 for users not
/// served by a UAV.
std::vector<double> served_illuminance(const Placement& placement,
                                       const Association& association,
                                       const Scenario& scenario);

}  // namespace uavvlc

#endif  // UAVVLC_MODEL_HPP
