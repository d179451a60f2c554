#ifndef UAVVLC_ASSOCIATION_HPP
#define UAVVLC_ASSOCIATION_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "uavvlc/model.hpp"
#include "uavvlc/rng.hpp"

namespace uavvlc {

inline constexpr std::size_t kNoCluster = std::numeric_limits<std::size_t>::max();

enum class ClusterUav : std::uint8_t { unassigned, uav1, uav2 };

/// Cluster bookkeeping of the k-means-style association heuristic. Cluster
/// centers are users; each cluster may be handed to one UAV.
struct ClusterState {
  std::vector<std::size_t> centers;      // user index per cluster
  std::vector<std::size_t> labels;       // cluster per user, kNoCluster before assignment
  std::vector<ClusterUav> uav_of_cluster;

  std::size_t cluster_count() const { return centers.size(); }
  std::vector<std::size_t> members(std::size_t cluster) const;
};

/// Draws 2K distinct users uniformly as initial centers, or every user when
/// there are fewer than 2K. Throws std::domain_error on an empty scenario.
ClusterState init_centers(const Scenario& scenario, SeededRng& rng);

/// Labels every user with its nearest center (lowest cluster index on ties).
/// Center users always label to their own cluster.
ClusterState assign_to_centers(const Scenario& scenario, ClusterState state);

/// Orders clusters by the distance difference |uav1 - c| - |uav2 - c|
/// (ascending, ties by cluster index) and hands the first K whose center is
/// covered by UAV 1 to UAV 1. The leftovers are then scanned from the end
/// closest to UAV 2, and up to K that UAV 2 covers go to UAV 2.
ClusterState assign_clusters_to_uavs(const Scenario& scenario, ClusterState state,
                                     const Placement& placement);

/// Weighted score of `candidate` as the centroid of `members`: a times its
/// link rate from `uav` plus b times the members strictly within D2D range.
double center_score(std::size_t candidate, std::span<const std::size_t> members, Point2 uav,
                    const Scenario& scenario);

struct Reselection {
  ClusterState state;
  Association association;
};

/// Exhaustive centroid choice per UAV-assigned cluster. Only members the
/// cluster's UAV covers are eligible, so the result meets the illumination
/// constraint. Members within D2D range of the new centroid become D2D users,
/// everyone else (and every member of an unassigned cluster) is unserved.
Reselection reselect_centers(const Scenario& scenario, ClusterState state,
                             const Placement& placement);

struct AssociationOutcome {
  Association association;  // best-objective round
  ClusterState state;       // state after the last round
  double objective = 0.0;
  int rounds = 0;
  bool converged = false;   // center set reached a fixed point
};

/// Full clustering loop at a fixed placement. Stops at a fixed point of the
/// center set, on revisiting an earlier center set, or after `max_rounds`,
/// and returns the best-objective round.
AssociationOutcome run_association_detailed(const Scenario& scenario, const Placement& placement,
                                            SeededRng& rng, int max_rounds);

Association run_association(const Scenario& scenario, const Placement& placement, SeededRng& rng,
                            int max_rounds);

}  // namespace uavvlc

#endif  // UAVVLC_ASSOCIATION_HPP
