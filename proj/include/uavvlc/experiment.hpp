#ifndef UAVVLC_EXPERIMENT_HPP
#define UAVVLC_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "uavvlc/model.hpp"
#include "uavvlc/planner.hpp"

namespace uavvlc {

/// N users drawn uniformly over the area from `seed`.
Scenario generate_scenario(const NetworkParams& params, std::size_t user_count,
                           std::uint64_t seed, Placement initial = {});

enum class SweepAxis { none, weights, capacity };

struct SweepPoint {
  double weight_rate = 0.0;
  double weight_d2d = 0.0;
  int capacity = 0;
  std::string label;
};

struct ExperimentSpec {
  NetworkParams params;
  std::size_t user_count = 200;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  SweepAxis axis = SweepAxis::none;
  std::vector<std::pair<double, double>> weight_points;  // (a, b)
  std::vector<int> capacity_points;
  PlannerConfig planner;
  Placement initial_placement;
  std::string output_dir = "results";

  /// Throws std::invalid_argument.
  void validate() const;

  /// Expanded sweep; a single point carrying `params` when the axis is none.
  std::vector<SweepPoint> points() const;

  friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

nlohmann::json spec_to_json(const ExperimentSpec& spec);
/// Throws ParseError naming the offending field.
ExperimentSpec spec_from_json(const nlohmann::json& j);

ExperimentSpec load_config(const std::filesystem::path& path);
void save_config(const ExperimentSpec& spec, const std::filesystem::path& path);

struct ResultRecord {
  std::uint64_t seed = 0;
  std::string sweep_point;
  double weight_rate = 0.0;
  double weight_d2d = 0.0;
  int capacity = 0;
  std::string method;  // "plan" or "baseline"
  double objective = 0.0;
  double sum_rate = 0.0;
  std::size_t d2d_count = 0;
  std::size_t served_centroid_count = 0;
  double min_margin = 0.0;   // lux above threshold over UAV-served users
  double mean_margin = 0.0;
  int iterations = 0;
  bool feasible = false;
  double wall_time_ms = 0.0;
  std::string error;  // empty on success
};

/// Margins are computed over UAV-served users only; both are 0 when no user
/// is UAV-served.
ResultRecord make_record(std::uint64_t seed, const SweepPoint& point, std::string method,
                         const Scenario& scenario, const PlanResult& result);

struct SummaryRow {
  std::string sweep_point;
  std::string method;
  std::size_t runs = 0;
  std::size_t failed = 0;
  std::size_t feasible = 0;
  double mean_objective = 0.0;
  double min_objective = 0.0;
  double mean_sum_rate = 0.0;
  double mean_d2d_count = 0.0;
  double mean_margin = 0.0;
  double min_margin = 0.0;
};

struct ExperimentResult {
  std::vector<ResultRecord> records;  // (seed, sweep point, method) order
  std::vector<SummaryRow> summary;
};

std::vector<SummaryRow> summarize(const std::vector<ResultRecord>& records);

/// Runs plan and the fixed-placement baseline for every (seed, sweep point).
/// A failing point is recorded with its error and the sweep continues.
/// `jobs` > 1 evaluates points concurrently; output order is unaffected.
ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned jobs = 1);

/// Writes records.jsonl, results.csv and summary.csv into `dir`.
void save_results(const ExperimentResult& result, const std::filesystem::path& dir);

std::string results_csv(const std::vector<ResultRecord>& records);
std::string summary_csv(const std::vector<SummaryRow>& rows);

}  // namespace uavvlc

#endif  // UAVVLC_EXPERIMENT_HPP
