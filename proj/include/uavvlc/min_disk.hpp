#ifndef UAVVLC_MIN_DISK_HPP
#define UAVVLC_MIN_DISK_HPP

#include <span>

#include "uavvlc/geometry.hpp"
#include "uavvlc/rng.hpp"

namespace uavvlc {

/// Absolute containment slack, scaled by (1 + radius).
inline constexpr double kDiskTolerance = 1e-9;

struct Disk {
  Point2 center;
  double radius = 0.0;

  bool contains(Point2 p) const {
    return distance(center, p) <= radius + kDiskTolerance * (1.0 + radius);
  }
};

/// Disk with segment pq as diameter.
Disk disk_from_two(Point2 p, Point2 q);

/// Circumcircle of pqr. Collinear or coincident inputs fall back to the
/// diameter disk of the widest pair.
Disk disk_from_three(Point2 p, Point2 q, Point2 r);

/// Minimum-radius disk containing every point, by randomized incremental
/// construction (expected linear time). The permutation is drawn from
/// `rng`; the result does not depend on it beyond rounding.
/// Throws std::domain_error on empty input.
Disk smallest_enclosing_disk(std::span<const Point2> points, SeededRng& rng);

/// O(n^4) reference: smallest of all pair and triple disks that contain
/// every point. Intended for tests and small inputs.
Disk brute_force_sed(std::span<const Point2> points);

}  // namespace uavvlc

#endif  // UAVVLC_MIN_DISK_HPP
