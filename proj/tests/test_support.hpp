#ifndef UAVVLC_TESTS_TEST_SUPPORT_HPP
#define UAVVLC_TESTS_TEST_SUPPORT_HPP

#include <cmath>
#include <random>
#include <vector>

#include "uavvlc/model.hpp"

namespace uavvlc::testing {

// Independent 40-digit evaluations of the link budget for the reference
// parameters (noise sigma 0.1).
inline constexpr double kNadirGain = 9.549296585513720146e-4;
inline constexpr double kOffset100Gain = 2.387324146378430037e-4;
inline constexpr double kNadirLux = 190.9859317102744029;
inline constexpr double kNadirRate = 10.29485056873589300;
inline constexpr double kOffset5Rate = 10.28764609996383725;
inline constexpr double kOffset20Rate = 10.18168358964830458;
inline constexpr double kOffset100Rate = 8.294857425450826416;
inline constexpr double kIlluminationLimit = 467.4501964042969724;

inline Scenario make_scenario(std::vector<Point2> users, NetworkParams params = {}) {
  Scenario s;
  s.users = std::move(users);
  s.params = params;
  return s;
}

inline NetworkParams with_weights(double a, double b, NetworkParams p = {}) {
  p.weight_rate = a;
  p.weight_d2d = b;
  return p;
}

inline std::vector<Point2> random_points(std::mt19937_64& gen, std::size_t n, double lo,
                                         double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<Point2> pts(n);
  for (Point2& p : pts) p = {u(gen), u(gen)};
  return pts;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace uavvlc::testing

#endif  // UAVVLC_TESTS_TEST_SUPPORT_HPP
