#include "uavvlc/serialization.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <type_traits>

namespace uavvlc {

using nlohmann::json;

namespace {

// Pulls typed fields out of a JSON object and rejects keys nobody asked for.
class FieldReader {
 public:
  FieldReader(const json& obj, std::string context) : obj_(obj), context_(std::move(context)) {
    if (!obj_.is_object()) throw ParseError(context_ + ": expected an object");
  }

  template <typename T>
  void optional(const char* key, T& out) {
    known_.insert(key);
    if (!obj_.contains(key)) return;
    out = convert<T>(obj_.at(key), key);
  }

  template <typename T>
  T required(const char* key) {
    known_.insert(key);
    if (!obj_.contains(key)) throw ParseError(field(key) + ": missing");
    return convert<T>(obj_.at(key), key);
  }

  const json& required_node(const char* key) {
    known_.insert(key);
    if (!obj_.contains(key)) throw ParseError(field(key) + ": missing");
    return obj_.at(key);
  }

  bool has(const char* key) const { return obj_.contains(key); }

  void finish() const {
    for (const auto& [key, value] : obj_.items()) {
      if (!known_.contains(key)) throw ParseError(field(key.c_str()) + ": unknown field");
    }
  }

  std::string field(const char* key) const { return context_ + "." + key; }

 private:
  template <typename T>
  T convert(const json& node, const char* key) const {
    if constexpr (std::is_same_v<T, double>) {
      if (!node.is_number()) throw ParseError(field(key) + ": expected a number");
    } else if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
      if (!node.is_number_integer()) throw ParseError(field(key) + ": expected an integer");
      if constexpr (std::is_unsigned_v<T>) {
        if (node.is_number_integer() && !node.is_number_unsigned() && node.get<long long>() < 0) {
          throw ParseError(field(key) + ": expected a non-negative integer");
        }
      }
    } else if constexpr (std::is_same_v<T, bool>) {
      if (!node.is_boolean()) throw ParseError(field(key) + ": expected a boolean");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!node.is_string()) throw ParseError(field(key) + ": expected a string");
    }
    return node.get<T>();
  }

  const json& obj_;
  std::string context_;
  std::set<std::string> known_;
};

json point_to_json(Point2 p) { return json::array({p.x, p.y}); }

Point2 point_from_json(const json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(context + ": expected [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

void check_format(FieldReader& r, std::string_view expected) {
  const auto format = r.required<std::string>("format");
  if (format != expected) {
    throw ParseError(r.field("format") + ": expected \"" + std::string(expected) + "\", got \"" +
                     format + "\"");
  }
}

}  // namespace

json params_to_json(const NetworkParams& p) {
  return json{
      {"area_width_m", p.area_width},
      {"area_height_m", p.area_height},
      {"uav_height_m", p.uav_height},
      {"led_power_w", p.led_power},
      {"dimming", p.dimming},
      {"noise_sigma", p.noise_sigma},
      {"detector_area_m2", p.detector_area},
      {"refractive_index", p.refractive_index},
      {"half_power_angle_deg", p.half_power_angle.deg()},
      {"fov_half_angle_deg", p.fov_half_angle.deg()},
      {"illum_threshold_lux", p.illum_threshold},
      {"d2d_range_m", p.d2d_range},
      {"capacity", p.capacity},
      {"weight_rate", p.weight_rate},
      {"weight_d2d", p.weight_d2d},
  };
}

NetworkParams params_from_json(const json& j) {
  NetworkParams p;
  FieldReader r(j, "params");
  r.optional("area_width_m", p.area_width);
  r.optional("area_height_m", p.area_height);
  r.optional("uav_height_m", p.uav_height);
  r.optional("led_power_w", p.led_power);
  r.optional("dimming", p.dimming);
  r.optional("noise_sigma", p.noise_sigma);
  r.optional("detector_area_m2", p.detector_area);
  r.optional("refractive_index", p.refractive_index);
  double half_power = p.half_power_angle.deg();
  double fov = p.fov_half_angle.deg();
  r.optional("half_power_angle_deg", half_power);
  r.optional("fov_half_angle_deg", fov);
  p.half_power_angle = Angle::degrees(half_power);
  p.fov_half_angle = Angle::degrees(fov);
  r.optional("illum_threshold_lux", p.illum_threshold);
  r.optional("d2d_range_m", p.d2d_range);
  r.optional("capacity", p.capacity);
  r.optional("weight_rate", p.weight_rate);
  r.optional("weight_d2d", p.weight_d2d);
  r.finish();
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("params: ") + e.what());
  }
  return p;
}

json placement_to_json(const Placement& placement) {
  return json{{"uav1", point_to_json(placement.uav1)}, {"uav2", point_to_json(placement.uav2)}};
}

Placement placement_from_json(const json& j) {
  FieldReader r(j, "placement");
  Placement p;
  p.uav1 = point_from_json(r.required_node("uav1"), r.field("uav1"));
  p.uav2 = point_from_json(r.required_node("uav2"), r.field("uav2"));
  r.finish();
  return p;
}

json planner_to_json(const PlannerConfig& cfg) {
  return json{{"max_outer_iters", cfg.max_outer_iters},
              {"max_association_rounds", cfg.max_association_rounds},
              {"objective_tolerance", cfg.objective_tolerance}};
}

PlannerConfig planner_from_json(const json& j) {
  PlannerConfig cfg;
  FieldReader r(j, "planner");
  r.optional("max_outer_iters", cfg.max_outer_iters);
  r.optional("max_association_rounds", cfg.max_association_rounds);
  r.optional("objective_tolerance", cfg.objective_tolerance);
  r.finish();
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("planner: ") + e.what());
  }
  return cfg;
}

std::string serve_tag_to_string(ServeTag tag) {
  switch (tag.kind) {
    case ServeKind::uav1: return "uav1";
    case ServeKind::uav2: return "uav2";
    case ServeKind::d2d: return "d2d:" + std::to_string(tag.via);
    case ServeKind::unserved: break;
  }
  return "unserved";
}

ServeTag serve_tag_from_string(std::string_view text) {
  if (text == "uav1") return ServeTag::uav(1);
  if (text == "uav2") return ServeTag::uav(2);
  if (text == "unserved") return ServeTag::unserved();
  constexpr std::string_view prefix = "d2d:";
  if (text.starts_with(prefix)) {
    const std::string_view digits = text.substr(prefix.size());
    std::size_t via = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), via);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty()) {
      return ServeTag::d2d(via);
    }
  }
  throw ParseError("association: bad serve tag \"" + std::string(text) + "\"");
}

json scenario_to_json(const Scenario& scenario) {
  json users = json::array();
  for (Point2 w : scenario.users) users.push_back(point_to_json(w));
  return json{{"format", kScenarioFormat},
              {"seed", scenario.seed},
              {"params", params_to_json(scenario.params)},
              {"initial_placement", placement_to_json(scenario.initial_placement)},
              {"users", std::move(users)}};
}

Scenario scenario_from_json(const json& j) {
  FieldReader r(j, "scenario");
  check_format(r, kScenarioFormat);
  Scenario s;
  s.seed = r.required<std::uint64_t>("seed");
  s.params = params_from_json(r.required_node("params"));
  if (r.has("initial_placement")) {
    s.initial_placement = placement_from_json(r.required_node("initial_placement"));
  }
  const json& users = r.required_node("users");
  if (!users.is_array()) throw ParseError("scenario.users: expected an array");
  for (std::size_t n = 0; n < users.size(); ++n) {
    s.users.push_back(point_from_json(users[n], "scenario.users[" + std::to_string(n) + "]"));
  }
  r.finish();
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
  return s;
}

Solution make_solution(const Scenario& scenario, const PlanResult& result) {
  return {scenario,         result.placement, result.association, result.objective,
          result.sum_rate, result.d2d_count, result.feasible};
}

json solution_to_json(const Solution& solution) {
  json tags = json::array();
  for (ServeTag t : solution.association.serve) tags.push_back(serve_tag_to_string(t));
  return json{{"format", kSolutionFormat},
              {"scenario", scenario_to_json(solution.scenario)},
              {"placement", placement_to_json(solution.placement)},
              {"association", std::move(tags)},
              {"objective", solution.objective},
              {"sum_rate", solution.sum_rate},
              {"d2d_count", solution.d2d_count},
              {"feasible", solution.feasible}};
}

Solution solution_from_json(const json& j) {
  FieldReader r(j, "solution");
  check_format(r, kSolutionFormat);
  Solution s;
  s.scenario = scenario_from_json(r.required_node("scenario"));
  s.placement = placement_from_json(r.required_node("placement"));
  const json& tags = r.required_node("association");
  if (!tags.is_array()) throw ParseError("solution.association: expected an array");
  for (const json& t : tags) {
    if (!t.is_string()) throw ParseError("solution.association: expected strings");
    s.association.serve.push_back(serve_tag_from_string(t.get<std::string>()));
  }
  s.objective = r.required<double>("objective");
  s.sum_rate = r.required<double>("sum_rate");
  s.d2d_count = r.required<std::size_t>("d2d_count");
  s.feasible = r.required<bool>("feasible");
  r.finish();
  return s;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace uavvlc
