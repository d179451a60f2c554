#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "uavvlc/model.hpp"

namespace uavvlc {
namespace {

using namespace uavvlc::testing;

double deg(double d) { return d * std::numbers::pi / 180.0; }

TEST(LambertianOrder, ClosedForms) {
  EXPECT_LE(rel_err(lambertian_order(deg(60)), 1.0), 1e-12);
  EXPECT_LE(rel_err(lambertian_order(deg(45)), 2.0), 1e-12);
  EXPECT_LE(rel_err(lambertian_order(deg(30)), 4.818841679306418009), 1e-12);
}

TEST(LambertianOrder, RejectsOutOfRange) {
  EXPECT_THROW(lambertian_order(0.0), std::domain_error);
  EXPECT_THROW(lambertian_order(-0.1), std::domain_error);
  EXPECT_THROW(lambertian_order(std::numbers::pi / 2), std::domain_error);
  EXPECT_THROW(lambertian_order(NAN), std::domain_error);
}

TEST(LambertianOrder, MatchesExtendedPrecision) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> angle(0.01, std::numbers::pi / 2 - 0.01);
  for (int i = 0; i < 500; ++i) {
    const double phi = angle(gen);
    const long double want = -std::log(2.0L) / std::log(std::cos(static_cast<long double>(phi)));
    EXPECT_LE(rel_err(lambertian_order(phi), static_cast<double>(want)), 1e-12) << phi;
  }
}

TEST(OpticalGain, ConstantInsideFovZeroOutside) {
  const NetworkParams p;
  EXPECT_LE(rel_err(optical_gain(0.0, p), 3.0), 1e-12);
  EXPECT_LE(rel_err(optical_gain(deg(30), p), 3.0), 1e-12);
  EXPECT_EQ(optical_gain(deg(70), p), 0.0);
  EXPECT_EQ(optical_gain(p.fov_half_angle.rad(), p), 0.0);  // boundary counts as outside
  EXPECT_THROW(optical_gain(-1e-3, p), std::domain_error);
}

TEST(OpticalGain, MatchesExtendedPrecision) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> fov(1.0, 89.0);
  std::uniform_real_distribution<double> index(1.01, 3.0);
  for (int i = 0; i < 200; ++i) {
    NetworkParams p;
    p.fov_half_angle = Angle::degrees(fov(gen));
    p.refractive_index = index(gen);
    const long double s = std::sin(static_cast<long double>(p.fov_half_angle.rad()));
    const long double want = static_cast<long double>(p.refractive_index) * p.refractive_index / (s * s);
    EXPECT_LE(rel_err(optical_gain(0.0, p), static_cast<double>(want)), 1e-12);
  }
}

TEST(ChannelGain, ReferenceValues) {
  const NetworkParams p;
  EXPECT_LE(rel_err(channel_gain({50, 50}, {50, 50}, p), kNadirGain), 1e-12);
  EXPECT_LE(rel_err(channel_gain({0, 0}, {100, 0}, p), kOffset100Gain), 1e-12);
  EXPECT_EQ(channel_gain({0, 0}, {200, 0}, p), 0.0);
}

TEST(ChannelGain, FovCutoff) {
  const NetworkParams p;
  const double cutoff = p.uav_height * std::tan(p.fov_half_angle.rad());
  EXPECT_GT(channel_gain({0, 0}, {cutoff * (1 - 1e-9), 0}, p), 0.0);
  EXPECT_EQ(channel_gain({0, 0}, {cutoff * (1 + 1e-9), 0}, p), 0.0);
  EXPECT_EQ(illuminance(channel_gain({0, 0}, {cutoff * (1 + 1e-9), 0}, p), p), 0.0);
  EXPECT_EQ(link_rate(channel_gain({0, 0}, {cutoff * (1 + 1e-9), 0}, p), p), 0.0);
}

TEST(ChannelGain, NonIncreasingInHorizontalDistance) {
  const NetworkParams p;
  double previous = channel_gain({0, 0}, {0, 0}, p);
  for (double r = 0.5; r < 260.0; r += 0.5) {
    const double g = channel_gain({0, 0}, {r * 0.6, r * 0.8}, p);
    EXPECT_LE(g, previous) << r;
    if (previous > 0.0 && g > 0.0) EXPECT_LT(g, previous) << r;
    previous = g;
  }
}

TEST(Illuminance, Linear) {
  NetworkParams p;
  EXPECT_EQ(illuminance(0.0, p), 0.0);
  EXPECT_LE(rel_err(illuminance(kNadirGain, p), kNadirLux), 1e-12);
  p.dimming = 0.5;
  EXPECT_LE(rel_err(illuminance(kNadirGain, p), kNadirLux / 2), 1e-12);
}

TEST(LinkRate, ReferenceValues) {
  NetworkParams p;
  EXPECT_EQ(link_rate(0.0, p), 0.0);
  EXPECT_LE(rel_err(link_rate(kNadirGain, p), kNadirRate), 1e-12);
  EXPECT_LE(rel_err(link_rate(kOffset100Gain, p), kOffset100Rate), 1e-12);
  p.noise_sigma = 0.01;  // noise power read as a standard deviation
  EXPECT_LE(rel_err(link_rate(kNadirGain, p), 13.61677821107777698), 1e-12);
}

TEST(LinkRate, StrictlyIncreasing) {
  const NetworkParams p;
  double previous = 0.0;
  for (double h = 1e-9; h < 1e-2; h *= 1.3) {
    const double r = link_rate(h, p);
    EXPECT_GT(r, previous) << h;
    previous = r;
  }
}

TEST(CoverageDistance, ReferenceValues) {
  NetworkParams p;
  EXPECT_LE(rel_err(illumination_distance_limit(p), kIlluminationLimit), 1e-12);
  EXPECT_LE(rel_err(fov_distance_limit(p), 200.0), 1e-12);
  EXPECT_LE(rel_err(coverage_distance_limit(p), 200.0), 1e-12);

  p.led_power /= 2;
  EXPECT_LE(rel_err(illumination_distance_limit(p), 393.0771944660181276), 1e-12);
  EXPECT_LE(rel_err(coverage_distance_limit(p), 200.0), 1e-12);
}

TEST(CoverageDistance, VanishingThresholdWideFov) {
  NetworkParams p;
  p.illum_threshold = 1e-30;
  p.fov_half_angle = Angle::degrees(89.99);
  EXPECT_GT(illumination_distance_limit(p), 1e8);
  EXPECT_GT(coverage_distance_limit(p), 5e5);
  EXPECT_LE(rel_err(coverage_distance_limit(p), fov_distance_limit(p)), 1e-12);
}

// Covered <=> slant distance <= illumination limit and < FoV limit, probed on
// both sides of whichever bound binds.
TEST(CoverageDistance, MatchesIlluminanceThreshold) {
  for (double power : {2.0e5, 2.0e3, 50.0}) {
    NetworkParams p;
    p.led_power = power;
    const double illum = illumination_distance_limit(p);
    const double fov = fov_distance_limit(p);
    for (double bound : {illum, fov}) {
      if (bound <= p.uav_height) continue;
      for (double rel : {-1e-6, -1e-9, 1e-9, 1e-6}) {
        const double d = bound * (1 + rel);
        if (d <= p.uav_height) continue;
        const double r = std::sqrt(d * d - p.uav_height * p.uav_height);
        const bool expected = d <= illum && d < fov;
        EXPECT_EQ(is_covered({0, 0}, {r, 0}, p), expected)
            << "power " << power << " d " << d << " illum " << illum << " fov " << fov;
      }
    }
  }
}

TEST(SumRate, Examples) {
  const Scenario s = make_scenario({{10, 10}, {150, 150}});
  const Placement at{{10, 10}, {150, 150}};
  Association a(2);
  EXPECT_EQ(sum_rate(at, a, s), 0.0);
  a.serve[0] = ServeTag::uav(1);
  EXPECT_LE(rel_err(sum_rate(at, a, s), kNadirRate), 1e-12);
  a.serve[1] = ServeTag::uav(2);
  EXPECT_LE(rel_err(sum_rate(at, a, s), 2 * kNadirRate), 1e-12);
  a.serve[1] = ServeTag::d2d(0);
  EXPECT_LE(rel_err(sum_rate(at, a, s), kNadirRate), 1e-12);
  EXPECT_THROW(sum_rate(at, Association(3), s), std::invalid_argument);
}

TEST(Objective, WeightedDecomposition) {
  const Scenario s = make_scenario({{10, 10}, {15, 10}});
  const Placement at{{10, 10}, {0, 0}};
  Association a(2);
  EXPECT_EQ(objective(at, a, s), 0.0);
  a.serve[0] = ServeTag::uav(1);
  a.serve[1] = ServeTag::d2d(0);
  EXPECT_NEAR(objective(at, a, s), 7.196567045823928669, 1e-9);
  EXPECT_EQ(d2d_count(a), 1u);

  const Scenario rate_only = make_scenario(s.users, with_weights(1.0, 0.0));
  EXPECT_EQ(objective(at, a, rate_only), sum_rate(at, a, rate_only));
}

TEST(NetworkParams, Validation) {
  EXPECT_NO_THROW(NetworkParams{}.validate());
  NetworkParams p;
  p.weight_rate = 0.5;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.fov_half_angle = Angle::degrees(90);
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.capacity = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.refractive_index = 1.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Scenario, RejectsUsersOutsideArea) {
  EXPECT_NO_THROW(make_scenario({{0, 0}, {200, 200}}).validate());
  EXPECT_THROW(make_scenario({{-1, 0}}).validate(), std::invalid_argument);
  EXPECT_THROW(make_scenario({}).validate(), std::invalid_argument);
}

}  // namespace
}  // namespace uavvlc
