#ifndef UAVVLC_PLANNER_HPP
#define UAVVLC_PLANNER_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "uavvlc/association.hpp"
#include "uavvlc/model.hpp"
#include "uavvlc/rng.hpp"

namespace uavvlc {

struct PlannerConfig {
  int max_outer_iters = 20;
  int max_association_rounds = 50;
  double objective_tolerance = 1e-6;
  std::uint64_t seed = 0;

  void validate() const;

  friend bool operator==(const PlannerConfig&, const PlannerConfig&) = default;
};

enum class Constraint {
  single_server,      // one transmitter per user; association covers every user
  uav_capacity,       // at most K UAV-served users per UAV
  d2d_source_served,  // a D2D source must itself be UAV-served
  d2d_range,          // D2D link shorter than the D2D range
  illumination,       // UAV-served users receive at least the threshold
  structural,         // well-formed tags, no self-service
};

std::string_view constraint_name(Constraint c);

struct Violation {
  Constraint constraint;
  std::vector<std::size_t> indices;  // offending users
  double measured = 0.0;
  double bound = 0.0;

  std::string describe() const;
};

struct ViolationReport {
  std::vector<Violation> violations;

  bool empty() const { return violations.empty(); }
  std::size_t count(Constraint c) const;
};

/// Evaluates every constraint and reports all violations, not only the first.
ViolationReport check_constraints(const Placement& placement, const Association& association,
                                  const Scenario& scenario);

struct PlacementUpdate {
  Placement placement;
  std::array<bool, 2> feasible{true, true};  // per UAV: all served users covered
};

/// Moves each UAV above the smallest enclosing disk center of its served
/// users. A UAV without served users keeps its `previous` position.
PlacementUpdate optimize_placement(const Scenario& scenario, const Association& association,
                                   const Placement& previous, SeededRng& rng);

struct TraceEntry {
  int iteration = 0;
  double objective = 0.0;
  double best_objective = 0.0;  // running best over feasible candidates
  Placement placement;
  bool feasible = false;
};

struct PlanResult {
  Placement placement;
  Association association;
  double objective = 0.0;
  double sum_rate = 0.0;
  std::size_t d2d_count = 0;
  std::vector<double> per_user_illuminance;  // from the serving UAV, 0 otherwise
  bool feasible = false;
  std::vector<TraceEntry> trace;

  int iterations() const { return static_cast<int>(trace.size()); }
};

/// Evaluates a (placement, association) pair into a result with an empty trace.
PlanResult evaluate_solution(const Scenario& scenario, const Placement& placement,
                             Association association);

/// Alternates association (at a fixed placement) and smallest-enclosing-disk
/// placement (for a fixed association), starting from the scenario's initial
/// placement. Iteration 0 is the initial-placement association; iteration
/// t >= 1 evaluates the association of iteration t-1 at its disk placement.
/// Stops once a feasible iteration fails to beat the best objective by more
/// than the tolerance, or after max_outer_iters, and returns the best
/// feasible solution (best infeasible one if none was feasible).
PlanResult plan(const Scenario& scenario, const PlannerConfig& cfg);

/// Association at the initial placement only, with the same RNG stream as
/// iteration 0 of `plan`.
PlanResult baseline_fixed_placement(const Scenario& scenario, const PlannerConfig& cfg);

inline constexpr std::size_t kExhaustiveMaxUsers = 10;
inline constexpr int kExhaustiveMaxCapacity = 2;

/// Exact optimum by enumeration of the UAV-served sets. Each UAV is placed at
/// the disk center of its set or at its initial position (whichever covers
/// the set with the higher rate), and every other user within D2D range of a
/// centroid is D2D-served. Throws std::domain_error beyond
/// kExhaustiveMaxUsers users or kExhaustiveMaxCapacity.
PlanResult exhaustive_solve(const Scenario& scenario);

}  // namespace uavvlc

#endif  // UAVVLC_PLANNER_HPP
