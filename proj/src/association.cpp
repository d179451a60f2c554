#include "uavvlc/association.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace uavvlc {

std::vector<std::size_t> ClusterState::members(std::size_t cluster) const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < labels.size(); ++n) {
    if (labels[n] == cluster) out.push_back(n);
  }
  return out;
}

ClusterState init_centers(const Scenario& scenario, SeededRng& rng) {
  const std::size_t n = scenario.size();
  if (n == 0) throw std::domain_error("init_centers: scenario has no users");
  const std::size_t wanted = 2 * static_cast<std::size_t>(scenario.params.capacity);

  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});

  ClusterState state;
  if (n <= wanted) {
    state.centers = std::move(all);
  } else {
    state.centers.reserve(wanted);
    std::sample(all.begin(), all.end(), std::back_inserter(state.centers), wanted, rng.engine());
  }
  state.labels.assign(n, kNoCluster);
  state.uav_of_cluster.assign(state.centers.size(), ClusterUav::unassigned);
  return state;
}

ClusterState assign_to_centers(const Scenario& scenario, ClusterState state) {
  const auto& users = scenario.users;
  state.labels.assign(users.size(), kNoCluster);
  for (std::size_t n = 0; n < users.size(); ++n) {
    double best = 0.0;
    for (std::size_t k = 0; k < state.centers.size(); ++k) {
      const double d = distance(users[n], users[state.centers[k]]);
      if (state.labels[n] == kNoCluster || d < best) {
        best = d;
        state.labels[n] = k;
      }
    }
  }
  for (std::size_t k = 0; k < state.centers.size(); ++k) state.labels[state.centers[k]] = k;
  return state;
}

ClusterState assign_clusters_to_uavs(const Scenario& scenario, ClusterState state,
                                     const Placement& placement) {
  const std::size_t clusters = state.centers.size();
  const auto& params = scenario.params;
  const auto capacity = static_cast<std::size_t>(params.capacity);

  std::vector<double> diff(clusters);
  for (std::size_t k = 0; k < clusters; ++k) {
    const Point2 c = scenario.users[state.centers[k]];
    diff[k] = distance(placement.uav1, c) - distance(placement.uav2, c);
  }

  std::vector<std::size_t> order(clusters);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return diff[l] < diff[r]; });

  state.uav_of_cluster.assign(clusters, ClusterUav::unassigned);
  std::size_t first = 0;
  for (std::size_t k : order) {
    if (first == capacity) break;
    if (is_covered(placement.uav1, scenario.users[state.centers[k]], params)) {
      state.uav_of_cluster[k] = ClusterUav::uav1;
      ++first;
    }
  }

  // Leftovers, most favourable to UAV 2 first.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return diff[l] > diff[r]; });
  std::size_t second = 0;
  for (std::size_t k : order) {
    if (second == capacity) break;
    if (state.uav_of_cluster[k] != ClusterUav::unassigned) continue;
    if (is_covered(placement.uav2, scenario.users[state.centers[k]], params)) {
      state.uav_of_cluster[k] = ClusterUav::uav2;
      ++second;
    }
  }
  return state;
}

double center_score(std::size_t candidate, std::span<const std::size_t> members, Point2 uav,
                    const Scenario& scenario) {
  const auto& params = scenario.params;
  const Point2 w = scenario.users[candidate];
  std::size_t reachable = 0;
  for (std::size_t k : members) {
    if (k != candidate && distance(scenario.users[k], w) < params.d2d_range) ++reachable;
  }
  return params.weight_rate * link_rate_between(uav, w, params) +
         params.weight_d2d * static_cast<double>(reachable);
}

Reselection reselect_centers(const Scenario& scenario, ClusterState state,
                             const Placement& placement) {
  const auto& params = scenario.params;
  Association association(scenario.size());

  for (std::size_t k = 0; k < state.centers.size(); ++k) {
    const ClusterUav tag = state.uav_of_cluster[k];
    if (tag == ClusterUav::unassigned) continue;
    const int uav = tag == ClusterUav::uav1 ? 1 : 2;
    const Point2 uav_pos = placement[uav];
    const std::vector<std::size_t> members = state.members(k);

    std::size_t best = kNoCluster;
    double best_score = 0.0;
    for (std::size_t n : members) {
      if (!is_covered(uav_pos, scenario.users[n], params)) continue;
      const double score = center_score(n, members, uav_pos, scenario);
      if (best == kNoCluster || score > best_score) {
        best = n;
        best_score = score;
      }
    }
    if (best == kNoCluster) {
      state.uav_of_cluster[k] = ClusterUav::unassigned;
      continue;
    }

    state.centers[k] = best;
    association.serve[best] = ServeTag::uav(uav);
    for (std::size_t n : members) {
      if (n != best && distance(scenario.users[n], scenario.users[best]) < params.d2d_range) {
        association.serve[n] = ServeTag::d2d(best);
      }
    }
  }
  return {std::move(state), std::move(association)};
}

AssociationOutcome run_association_detailed(const Scenario& scenario, const Placement& placement,
                                            SeededRng& rng, int max_rounds) {
  if (max_rounds < 1) throw std::invalid_argument("run_association: max_rounds must be >= 1");

  AssociationOutcome out;
  ClusterState state = init_centers(scenario, rng);
  std::set<std::vector<std::size_t>> seen{state.centers};
  bool have_best = false;

  for (int round = 1; round <= max_rounds; ++round) {
    state = assign_to_centers(scenario, std::move(state));
    state = assign_clusters_to_uavs(scenario, std::move(state), placement);
    auto [next, association] = reselect_centers(scenario, state, placement);
    out.rounds = round;

    const double value = objective(placement, association, scenario);
    if (!have_best || value > out.objective) {
      out.objective = value;
      out.association = std::move(association);
      have_best = true;
    }

    const bool fixed_point = next.centers == state.centers;
    state = std::move(next);
    if (fixed_point) {
      out.converged = true;
      break;
    }
    if (!seen.insert(state.centers).second) break;
  }
  out.state = std::move(state);
  return out;
}

Association run_association(const Scenario& scenario, const Placement& placement, SeededRng& rng,
                            int max_rounds) {
  return run_association_detailed(scenario, placement, rng, max_rounds).association;
}

}  // namespace uavvlc
