#ifndef UAVVLC_SERIALIZATION_HPP
#define UAVVLC_SERIALIZATION_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "uavvlc/model.hpp"
#include "uavvlc/planner.hpp"

namespace uavvlc {

inline constexpr std::string_view kScenarioFormat = "uavvlc-scenario/1";
inline constexpr std::string_view kSolutionFormat = "uavvlc-solution/1";
inline constexpr std::string_view kExperimentFormat = "uavvlc-experiment/1";

/// Malformed or invalid configuration/scenario/solution document. The
/// message names the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json params_to_json(const NetworkParams& params);
/// Missing keys keep their defaults; unknown keys and wrong types are errors.
NetworkParams params_from_json(const nlohmann::json& j);

nlohmann::json placement_to_json(const Placement& placement);
Placement placement_from_json(const nlohmann::json& j);

nlohmann::json planner_to_json(const PlannerConfig& cfg);
PlannerConfig planner_from_json(const nlohmann::json& j);

/// "uav1", "uav2", "d2d:<centroid>" or "unserved".
std::string serve_tag_to_string(ServeTag tag);
ServeTag serve_tag_from_string(std::string_view text);

nlohmann::json scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const nlohmann::json& j);

/// A solution embeds its scenario so that it can be re-checked on its own.
struct Solution {
  Scenario scenario;
  Placement placement;
  Association association;
  double objective = 0.0;
  double sum_rate = 0.0;
  std::size_t d2d_count = 0;
  bool feasible = false;
};

Solution make_solution(const Scenario& scenario, const PlanResult& result);
nlohmann::json solution_to_json(const Solution& solution);
Solution solution_from_json(const nlohmann::json& j);

/// Reads a JSON document; throws ParseError on I/O or syntax errors.
nlohmann::json read_json_file(const std::filesystem::path& path);
/// Writes pretty-printed JSON; throws std::runtime_error when unwritable.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace uavvlc

#endif  // UAVVLC_SERIALIZATION_HPP
