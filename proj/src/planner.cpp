#include "uavvlc/planner.hpp"

#include <bit>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "uavvlc/min_disk.hpp"

namespace uavvlc {

void PlannerConfig::validate() const {
  if (max_outer_iters < 1) throw std::invalid_argument("invalid max_outer_iters: must be >= 1");
  if (max_association_rounds < 1) {
    throw std::invalid_argument("invalid max_association_rounds: must be >= 1");
  }
  if (!(objective_tolerance >= 0.0)) {
    throw std::invalid_argument("invalid objective_tolerance: must be >= 0");
  }
}

std::string_view constraint_name(Constraint c) {
  switch (c) {
    case Constraint::single_server: return "single-server";
    case Constraint::uav_capacity: return "uav-capacity";
    case Constraint::d2d_source_served: return "d2d-source-served";
    case Constraint::d2d_range: return "d2d-range";
    case Constraint::illumination: return "illumination";
    case Constraint::structural: return "structural";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << constraint_name(constraint) << ": users [";
  for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
  os << "] measured " << measured << " bound " << bound;
  return os.str();
}

std::size_t ViolationReport::count(Constraint c) const {
  std::size_t k = 0;
  for (const Violation& v : violations) k += v.constraint == c ? 1 : 0;
  return k;
}

ViolationReport check_constraints(const Placement& placement, const Association& association,
                                  const Scenario& scenario) {
  ViolationReport report;
  const auto& params = scenario.params;
  const std::size_t n_users = scenario.size();

  if (association.size() != n_users) {
    report.violations.push_back({Constraint::single_server, {},
                                 static_cast<double>(association.size()),
                                 static_cast<double>(n_users)});
    return report;
  }

  for (int uav : {1, 2}) {
    const std::vector<std::size_t> served = association.served_by(uav);
    if (served.size() > static_cast<std::size_t>(params.capacity)) {
      report.violations.push_back({Constraint::uav_capacity, served,
                                   static_cast<double>(served.size()),
                                   static_cast<double>(params.capacity)});
    }
  }

  for (std::size_t n = 0; n < n_users; ++n) {
    const ServeTag tag = association.serve[n];
    if (tag.is_uav()) {
      const double lux = illuminance(
          channel_gain(placement[tag.uav_index()], scenario.users[n], params), params);
      if (!(lux >= params.illum_threshold)) {
        report.violations.push_back({Constraint::illumination, {n}, lux, params.illum_threshold});
      }
    } else if (tag.kind == ServeKind::d2d) {
      if (tag.via >= n_users || tag.via == n) {
        report.violations.push_back({Constraint::structural, {n}, static_cast<double>(tag.via),
                                     static_cast<double>(n_users)});
        continue;
      }
      if (!association.serve[tag.via].is_uav()) {
        report.violations.push_back({Constraint::d2d_source_served, {n, tag.via}, 0.0, 1.0});
      }
      const double d = distance(scenario.users[n], scenario.users[tag.via]);
      if (!(d < params.d2d_range)) {
        report.violations.push_back({Constraint::d2d_range, {n, tag.via}, d, params.d2d_range});
      }
    }
  }
  return report;
}

PlacementUpdate optimize_placement(const Scenario& scenario, const Association& association,
                                   const Placement& previous, SeededRng& rng) {
  PlacementUpdate out{previous, {true, true}};
  for (int uav : {1, 2}) {
    const std::vector<std::size_t> served = association.served_by(uav);
    if (served.empty()) continue;
    std::vector<Point2> pts;
    pts.reserve(served.size());
    for (std::size_t n : served) pts.push_back(scenario.users[n]);
    const Point2 center = smallest_enclosing_disk(pts, rng).center;
    out.placement[uav] = center;
    for (Point2 p : pts) {
      if (!is_covered(center, p, scenario.params)) {
        out.feasible[uav - 1] = false;
        break;
      }
    }
  }
  return out;
}

PlanResult evaluate_solution(const Scenario& scenario, const Placement& placement,
                             Association association) {
  PlanResult r;
  r.placement = placement;
  r.sum_rate = sum_rate(placement, association, scenario);
  r.d2d_count = d2d_count(association);
  r.objective = scenario.params.weight_rate * r.sum_rate +
                scenario.params.weight_d2d * static_cast<double>(r.d2d_count);
  r.per_user_illuminance = served_illuminance(placement, association, scenario);
  r.feasible = check_constraints(placement, association, scenario).empty();
  r.association = std::move(association);
  return r;
}

namespace {

// Feasible beats infeasible, then higher objective.
bool better(const PlanResult& candidate, const PlanResult& incumbent) {
  if (candidate.feasible != incumbent.feasible) return candidate.feasible;
  return candidate.objective > incumbent.objective;
}

}  // namespace

PlanResult plan(const Scenario& scenario, const PlannerConfig& cfg) {
  scenario.validate();
  cfg.validate();
  SeededRng rng(cfg.seed);

  Placement placement = scenario.initial_placement;
  Association association =
      run_association(scenario, placement, rng, cfg.max_association_rounds);

  PlanResult best = evaluate_solution(scenario, placement, association);
  std::vector<TraceEntry> trace;
  trace.push_back({0, best.objective, best.objective, placement, best.feasible});

  for (int iter = 1; iter <= cfg.max_outer_iters; ++iter) {
    const PlacementUpdate update = optimize_placement(scenario, association, placement, rng);
    PlanResult current = evaluate_solution(scenario, update.placement, association);
    current.feasible = current.feasible && update.feasible[0] && update.feasible[1];

    const bool improved = current.feasible &&
                          (!best.feasible ||
                           current.objective > best.objective + cfg.objective_tolerance);
    const bool was_feasible = current.feasible;
    const double current_objective = current.objective;
    if (better(current, best)) best = std::move(current);
    trace.push_back({iter, current_objective, best.objective, update.placement, was_feasible});

    if (!improved && was_feasible) break;

    // Re-associate at the new placement; the RNG stream continues, so each
    // pass draws fresh initial centers.
    placement = update.placement;
    association = run_association(scenario, placement, rng, cfg.max_association_rounds);
  }

  best.trace = std::move(trace);
  return best;
}

PlanResult baseline_fixed_placement(const Scenario& scenario, const PlannerConfig& cfg) {
  scenario.validate();
  cfg.validate();
  SeededRng rng(cfg.seed);
  const Placement placement = scenario.initial_placement;
  PlanResult r = evaluate_solution(
      scenario, placement, run_association(scenario, placement, rng, cfg.max_association_rounds));
  r.trace.push_back({0, r.objective, r.objective, placement, r.feasible});
  return r;
}

namespace {

struct UavOption {
  bool feasible = false;
  Point2 position;
  double rate = 0.0;
};

UavOption best_position(const Scenario& scenario, const std::vector<Point2>& pts,
                        Point2 initial) {
  UavOption best;
  if (pts.empty()) return {true, initial, 0.0};
  for (Point2 candidate : {brute_force_sed(pts).center, initial}) {
    double rate = 0.0;
    bool ok = true;
    for (Point2 p : pts) {
      if (!is_covered(candidate, p, scenario.params)) {
        ok = false;
        break;
      }
      rate += link_rate_between(candidate, p, scenario.params);
    }
    if (ok && (!best.feasible || rate > best.rate)) best = {true, candidate, rate};
  }
  return best;
}

}  // namespace

PlanResult exhaustive_solve(const Scenario& scenario) {
  scenario.validate();
  const auto& params = scenario.params;
  const std::size_t n_users = scenario.size();
  if (n_users > kExhaustiveMaxUsers || params.capacity > kExhaustiveMaxCapacity) {
    throw std::domain_error("exhaustive_solve: instance too large (N=" + std::to_string(n_users) +
                            ", K=" + std::to_string(params.capacity) + "; limits N<=" +
                            std::to_string(kExhaustiveMaxUsers) +
                            ", K<=" + std::to_string(kExhaustiveMaxCapacity) + ")");
  }

  const std::uint32_t full = (1u << n_users) - 1u;
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t m = 0; m <= full; ++m) {
    if (std::popcount(m) <= params.capacity) subsets.push_back(m);
  }

  auto points_of = [&](std::uint32_t mask) {
    std::vector<Point2> pts;
    for (std::size_t n = 0; n < n_users; ++n) {
      if (mask >> n & 1u) pts.push_back(scenario.users[n]);
    }
    return pts;
  };

  std::vector<UavOption> first(full + 1), second(full + 1);
  for (std::uint32_t m : subsets) {
    const auto pts = points_of(m);
    first[m] = best_position(scenario, pts, scenario.initial_placement.uav1);
    second[m] = best_position(scenario, pts, scenario.initial_placement.uav2);
  }

  // D2D source for every user given a centroid mask: nearest in-range
  // centroid, lowest index on ties.
  auto d2d_assign = [&](std::uint32_t centroids, Association& assoc) {
    std::size_t count = 0;
    for (std::size_t n = 0; n < n_users; ++n) {
      if (centroids >> n & 1u) continue;
      std::optional<std::size_t> via;
      double best_d = 0.0;
      for (std::size_t k = 0; k < n_users; ++k) {
        if (!(centroids >> k & 1u)) continue;
        const double d = distance(scenario.users[n], scenario.users[k]);
        if (d < params.d2d_range && (!via || d < best_d)) {
          via = k;
          best_d = d;
        }
      }
      if (via) {
        assoc.serve[n] = ServeTag::d2d(*via);
        ++count;
      }
    }
    return count;
  };

  std::optional<PlanResult> best;
  double best_value = 0.0;
  for (std::uint32_t m1 : subsets) {
    if (!first[m1].feasible) continue;
    for (std::uint32_t m2 : subsets) {
      if ((m1 & m2) != 0u || !second[m2].feasible) continue;
      Association assoc(n_users);
      for (std::size_t n = 0; n < n_users; ++n) {
        if (m1 >> n & 1u) assoc.serve[n] = ServeTag::uav(1);
        if (m2 >> n & 1u) assoc.serve[n] = ServeTag::uav(2);
      }
      const std::size_t d2d = d2d_assign(m1 | m2, assoc);
      const double value =
          params.weight_rate * (first[m1].rate + second[m2].rate) +
          params.weight_d2d * static_cast<double>(d2d);
      if (best && !(value > best_value)) continue;
      best_value = value;
      best = evaluate_solution(scenario, {first[m1].position, second[m2].position},
                               std::move(assoc));
    }
  }

  PlanResult r = std::move(*best);
  r.trace.push_back({0, r.objective, r.objective, r.placement, r.feasible});
  return r;
}

}  // namespace uavvlc
