#include "uavvlc/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uavvlc {

namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("invalid ") + field + ": " + what);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

bool open_quarter_turn(Angle a) {
  return std::isfinite(a.deg()) && a.deg() > 0.0 && a.deg() < 90.0;
}

}  // namespace

void NetworkParams::validate() const {
  require(positive(area_width), "area_width", "must be > 0");
  require(positive(area_height), "area_height", "must be > 0");
  require(positive(uav_height), "uav_height", "must be > 0");
  require(positive(led_power), "led_power", "must be > 0");
  require(positive(dimming) && dimming <= 1.0, "dimming", "must lie in (0, 1]");
  require(positive(noise_sigma), "noise_sigma", "must be > 0");
  require(positive(detector_area), "detector_area", "must be > 0");
  require(std::isfinite(refractive_index) && refractive_index > 1.0, "refractive_index",
          "must be > 1");
  require(open_quarter_turn(half_power_angle), "half_power_angle", "must lie in (0, 90) deg");
  require(open_quarter_turn(fov_half_angle), "fov_half_angle", "must lie in (0, 90) deg");
  require(positive(illum_threshold), "illum_threshold", "must be > 0");
  require(positive(d2d_range), "d2d_range", "must be > 0");
  require(capacity >= 1, "capacity", "must be >= 1");
  require(std::isfinite(weight_rate) && weight_rate >= 0.0 && weight_rate <= 1.0, "weight_rate",
          "must lie in [0, 1]");
  require(std::isfinite(weight_d2d) && weight_d2d >= 0.0 && weight_d2d <= 1.0, "weight_d2d",
          "must lie in [0, 1]");
  require(std::abs(weight_rate + weight_d2d - 1.0) <= 1e-12, "weight_rate/weight_d2d",
          "weights must sum to 1");
}

void Scenario::validate() const {
  params.validate();
  if (users.empty()) throw std::invalid_argument("invalid users: scenario needs at least one user");
  for (std::size_t n = 0; n < users.size(); ++n) {
    const Point2 w = users[n];
    if (!w.finite() || w.x < 0.0 || w.y < 0.0 || w.x > params.area_width ||
        w.y > params.area_height) {
      throw std::invalid_argument("invalid users: user " + std::to_string(n) +
                                  " lies outside the area");
    }
  }
  if (!initial_placement.uav1.finite() || !initial_placement.uav2.finite()) {
    throw std::invalid_argument("invalid initial_placement: non-finite coordinate");
  }
}

std::size_t Association::count(ServeKind kind) const {
  std::size_t c = 0;
  for (const ServeTag& t : serve) c += t.kind == kind ? 1 : 0;
  return c;
}

std::vector<std::size_t> Association::served_by(int uav) const {
  const ServeKind kind = uav == 1 ? ServeKind::uav1 : ServeKind::uav2;
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < serve.size(); ++n) {
    if (serve[n].kind == kind) out.push_back(n);
  }
  return out;
}

double lambertian_order(double half_power_angle_rad) {
  if (!(half_power_angle_rad > 0.0 && half_power_angle_rad < std::numbers::pi / 2)) {
    throw std::domain_error("lambertian_order: half-power angle must lie in (0, pi/2)");
  }
  return -std::numbers::ln2 / std::log(std::cos(half_power_angle_rad));
}

double optical_gain(double incidence_rad, const NetworkParams& params) {
  if (!(incidence_rad >= 0.0)) {
    throw std::domain_error("optical_gain: incidence angle must be >= 0");
  }
  const double fov = params.fov_half_angle.rad();
  if (incidence_rad >= fov) return 0.0;
  const double s = std::sin(fov);
  return params.refractive_index * params.refractive_index / (s * s);
}

double slant_distance(Point2 uav, Point2 user, const NetworkParams& params) {
  return std::hypot(uav.x - user.x, uav.y - user.y, params.uav_height);
}

double channel_gain(Point2 uav, Point2 user, const NetworkParams& params) {
  const double d = slant_distance(uav, user, params);
  const double cos_incidence = params.uav_height / d;
  const double incidence = std::acos(std::min(1.0, cos_incidence));
  const double g = optical_gain(incidence, params);
  if (g == 0.0) return 0.0;
  const double m = lambertian_order(params.half_power_angle.rad());
  return (m + 1.0) * params.detector_area / (2.0 * std::numbers::pi * d * d) * g *
         std::pow(cos_incidence, m + 1.0);
}

double illuminance(double gain, const NetworkParams& params) {
  return params.dimming * params.led_power * gain;
}

double link_rate(double gain, const NetworkParams& params) {
  if (gain <= 0.0) return 0.0;
  const double amplitude = params.dimming * params.led_power * gain / params.noise_sigma;
  return 0.5 * std::log2(1.0 + std::numbers::e / (2.0 * std::numbers::pi) * amplitude * amplitude);
}

double illumination_distance_limit(const NetworkParams& params) {
  const double m = lambertian_order(params.half_power_angle.rad());
  const double s = std::sin(params.fov_half_angle.rad());
  const double g = params.refractive_index * params.refractive_index / (s * s);
  // illuminance = dimming * power * (m+1) A g z^(m+1) / (2 pi d^(m+3))
  const double v = 2.0 * std::numbers::pi * params.illum_threshold /
                   ((m + 1.0) * params.detector_area * g *
                    std::pow(params.uav_height, m + 1.0) * params.dimming);
  return std::pow(params.led_power / v, 1.0 / (m + 3.0));
}

double fov_distance_limit(const NetworkParams& params) {
  return params.uav_height / std::cos(params.fov_half_angle.rad());
}

double coverage_distance_limit(const NetworkParams& params) {
  return std::min(illumination_distance_limit(params), fov_distance_limit(params));
}

bool is_covered(Point2 uav, Point2 user, const NetworkParams& params) {
  return illuminance(channel_gain(uav, user, params), params) >= params.illum_threshold;
}

double link_rate_between(Point2 uav, Point2 user, const NetworkParams& params) {
  return link_rate(channel_gain(uav, user, params), params);
}

double sum_rate(const Placement& placement, const Association& association,
                const Scenario& scenario) {
  if (association.size() != scenario.size()) {
    throw std::invalid_argument("sum_rate: association covers " +
                                std::to_string(association.size()) + " users, scenario has " +
                                std::to_string(scenario.size()));
  }
  double total = 0.0;
  for (std::size_t n = 0; n < scenario.size(); ++n) {
    const int uav = association.serve[n].uav_index();
    if (uav == 0) continue;
    total += link_rate_between(placement[uav], scenario.users[n], scenario.params);
  }
  return total;
}

std::size_t d2d_count(const Association& association) {
  return association.count(ServeKind::d2d);
}

double objective(const Placement& placement, const Association& association,
                 const Scenario& scenario) {
  const NetworkParams& p = scenario.params;
  return p.weight_rate * sum_rate(placement, association, scenario) +
         p.weight_d2d * static_cast<double>(d2d_count(association));
}

std::vector<double> served_illuminance(const Placement& placement,
                                       const Association& association,
                                       const Scenario& scenario) {
  if (association.size() != scenario.size()) {
    throw std::invalid_argument("served_illuminance: association/scenario size mismatch");
  }
  std::vector<double> lux(scenario.size(), 0.0);
  for (std::size_t n = 0; n < scenario.size(); ++n) {
    const int uav = association.serve[n].uav_index();
    if (uav == 0) continue;
    lux[n] = illuminance(channel_gain(placement[uav], scenario.users[n], scenario.params),
                         scenario.params);
  }
  return lux;
}

}  // namespace uavvlc
