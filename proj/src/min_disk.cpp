#include "uavvlc/min_disk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace uavvlc {

Disk disk_from_two(Point2 p, Point2 q) {
  return {0.5 * (p + q), 0.5 * distance(p, q)};
}

Disk disk_from_three(Point2 p, Point2 q, Point2 r) {
  const Point2 a = q - p;
  const Point2 b = r - p;
  const double aa = squared_norm(a);
  const double bb = squared_norm(b);
  const double det = 2.0 * cross(a, b);
  const double scale = std::max({aa, bb, squared_norm(r - q)});
  if (std::abs(det) <= 1e-12 * scale) {
    Disk widest = disk_from_two(p, q);
    for (const Disk& d : {disk_from_two(p, r), disk_from_two(q, r)}) {
      if (d.radius > widest.radius) widest = d;
    }
    return widest;
  }
  const Point2 offset{(b.y * aa - a.y * bb) / det, (a.x * bb - b.x * aa) / det};
  const Point2 center = p + offset;
  const double radius = std::max({distance(center, p), distance(center, q), distance(center, r)});
  return {center, radius};
}

Disk smallest_enclosing_disk(std::span<const Point2> points, SeededRng& rng) {
  if (points.empty()) throw std::domain_error("smallest_enclosing_disk: no points");

  std::vector<Point2> pts(points.begin(), points.end());
  rng.shuffle(std::span<Point2>(pts));

  // Move-to-front scheme unrolled into three loops: the inner loops keep one
  // and then two points fixed on the boundary.
  Disk disk{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (disk.contains(pts[i])) continue;
    disk = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (disk.contains(pts[j])) continue;
      disk = disk_from_two(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!disk.contains(pts[k])) disk = disk_from_three(pts[i], pts[j], pts[k]);
      }
    }
  }
  return disk;
}

Disk brute_force_sed(std::span<const Point2> points) {
  if (points.empty()) throw std::domain_error("brute_force_sed: no points");
  if (points.size() == 1) return {points[0], 0.0};

  auto encloses_all = [&](const Disk& d) {
    return std::all_of(points.begin(), points.end(), [&](Point2 p) { return d.contains(p); });
  };

  bool found = false;
  Disk best;
  auto consider = [&](const Disk& d) {
    if ((!found || d.radius < best.radius) && encloses_all(d)) {
      best = d;
      found = true;
    }
  };

  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      consider(disk_from_two(points[i], points[j]));
      for (std::size_t k = j + 1; k < n; ++k) {
        consider(disk_from_three(points[i], points[j], points[k]));
      }
    }
  }
  return best;
}

}  // namespace uavvlc
