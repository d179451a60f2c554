#include "uavvlc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <thread>

#include <fmt/format.h>

#include "uavvlc/rng.hpp"
#include "uavvlc/serialization.hpp"

namespace uavvlc {

using nlohmann::json;

Scenario generate_scenario(const NetworkParams& params, std::size_t user_count,
                           std::uint64_t seed, Placement initial) {
  if (user_count == 0) throw std::invalid_argument("generate_scenario: user_count must be >= 1");
  SeededRng rng(seed);
  Scenario s;
  s.params = params;
  s.seed = seed;
  s.initial_placement = initial;
  s.users.reserve(user_count);
  for (std::size_t n = 0; n < user_count; ++n) {
    const double x = rng.uniform(0.0, params.area_width);
    const double y = rng.uniform(0.0, params.area_height);
    s.users.push_back({x, y});
  }
  return s;
}

void ExperimentSpec::validate() const {
  params.validate();
  planner.validate();
  if (user_count == 0) throw std::invalid_argument("invalid user_count: must be >= 1");
  if (seeds.empty()) throw std::invalid_argument("invalid seeds: at least one seed required");
  if (axis == SweepAxis::weights) {
    if (weight_points.empty()) throw std::invalid_argument("invalid sweep.points: empty");
    for (auto [a, b] : weight_points) {
      if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0) || std::abs(a + b - 1.0) > 1e-12) {
        throw std::invalid_argument(fmt::format(
            "invalid sweep.points: weights ({}, {}) must lie in [0,1] and sum to 1", a, b));
      }
    }
  }
  if (axis == SweepAxis::capacity) {
    if (capacity_points.empty()) throw std::invalid_argument("invalid sweep.points: empty");
    for (int k : capacity_points) {
      if (k < 1) throw std::invalid_argument("invalid sweep.points: capacity must be >= 1");
    }
  }
}

std::vector<SweepPoint> ExperimentSpec::points() const {
  std::vector<SweepPoint> out;
  switch (axis) {
    case SweepAxis::none:
      out.push_back({params.weight_rate, params.weight_d2d, params.capacity, "base"});
      break;
    case SweepAxis::weights:
      for (auto [a, b] : weight_points) {
        out.push_back({a, b, params.capacity, fmt::format("a={}/b={}", a, b)});
      }
      break;
    case SweepAxis::capacity:
      for (int k : capacity_points) {
        out.push_back({params.weight_rate, params.weight_d2d, k, fmt::format("K={}", k)});
      }
      break;
  }
  return out;
}

namespace {

const char* axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::weights: return "weights";
    case SweepAxis::capacity: return "capacity";
    case SweepAxis::none: break;
  }
  return "none";
}

ParseError field_error(const std::string& field, const std::string& what) {
  return ParseError("experiment." + field + ": " + what);
}

}  // namespace

json spec_to_json(const ExperimentSpec& spec) {
  json sweep{{"axis", axis_name(spec.axis)}};
  if (spec.axis == SweepAxis::weights) {
    json pts = json::array();
    for (auto [a, b] : spec.weight_points) pts.push_back(json::array({a, b}));
    sweep["points"] = std::move(pts);
  } else if (spec.axis == SweepAxis::capacity) {
    sweep["points"] = spec.capacity_points;
  }
  return json{{"format", kExperimentFormat},
              {"params", params_to_json(spec.params)},
              {"user_count", spec.user_count},
              {"seeds", spec.seeds},
              {"sweep", std::move(sweep)},
              {"planner", planner_to_json(spec.planner)},
              {"initial_placement", placement_to_json(spec.initial_placement)},
              {"output_dir", spec.output_dir}};
}

ExperimentSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("experiment: expected an object");
  static const std::vector<std::string> known{"format",  "params",  "user_count",
                                              "seeds",   "sweep",   "planner",
                                              "initial_placement", "output_dir"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw field_error(key, "unknown field");
    }
  }
  if (!j.contains("format") || !j["format"].is_string() ||
      j["format"].get<std::string>() != kExperimentFormat) {
    throw field_error("format", "expected \"" + std::string(kExperimentFormat) + "\"");
  }

  ExperimentSpec spec;
  if (j.contains("params")) spec.params = params_from_json(j["params"]);
  if (j.contains("planner")) spec.planner = planner_from_json(j["planner"]);
  if (j.contains("initial_placement")) {
    spec.initial_placement = placement_from_json(j["initial_placement"]);
  }
  if (j.contains("user_count")) {
    const json& n = j["user_count"];
    if (!n.is_number_unsigned() || n.get<std::size_t>() == 0) {
      throw field_error("user_count", "expected a positive integer");
    }
    spec.user_count = n.get<std::size_t>();
  }
  if (j.contains("seeds")) {
    const json& seeds = j["seeds"];
    if (!seeds.is_array() || seeds.empty()) {
      throw field_error("seeds", "expected a non-empty array");
    }
    spec.seeds.clear();
    for (const json& s : seeds) {
      if (!s.is_number_unsigned()) throw field_error("seeds", "expected non-negative integers");
      spec.seeds.push_back(s.get<std::uint64_t>());
    }
  }
  if (j.contains("output_dir")) {
    if (!j["output_dir"].is_string()) throw field_error("output_dir", "expected a string");
    spec.output_dir = j["output_dir"].get<std::string>();
  }
  if (j.contains("sweep")) {
    const json& sweep = j["sweep"];
    if (!sweep.is_object() || !sweep.contains("axis") || !sweep["axis"].is_string()) {
      throw field_error("sweep.axis", "expected \"none\", \"weights\" or \"capacity\"");
    }
    for (const auto& [key, value] : sweep.items()) {
      if (key != "axis" && key != "points") throw field_error("sweep." + key, "unknown field");
    }
    const std::string axis = sweep["axis"].get<std::string>();
    const json points = sweep.value("points", json::array());
    if (!points.is_array()) throw field_error("sweep.points", "expected an array");
    if (axis == "none") {
      spec.axis = SweepAxis::none;
    } else if (axis == "weights") {
      spec.axis = SweepAxis::weights;
      for (const json& p : points) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
          throw field_error("sweep.points", "expected [a, b] pairs");
        }
        spec.weight_points.emplace_back(p[0].get<double>(), p[1].get<double>());
      }
    } else if (axis == "capacity") {
      spec.axis = SweepAxis::capacity;
      for (const json& p : points) {
        if (!p.is_number_integer()) throw field_error("sweep.points", "expected integers");
        spec.capacity_points.push_back(p.get<int>());
      }
    } else {
      throw field_error("sweep.axis", "unknown axis \"" + axis + "\"");
    }
  }

  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("experiment: ") + e.what());
  }
  return spec;
}

ExperimentSpec load_config(const std::filesystem::path& path) {
  return spec_from_json(read_json_file(path));
}

void save_config(const ExperimentSpec& spec, const std::filesystem::path& path) {
  write_json_file(path, spec_to_json(spec));
}

ResultRecord make_record(std::uint64_t seed, const SweepPoint& point, std::string method,
                         const Scenario& scenario, const PlanResult& result) {
  ResultRecord r;
  r.seed = seed;
  r.sweep_point = point.label;
  r.weight_rate = point.weight_rate;
  r.weight_d2d = point.weight_d2d;
  r.capacity = point.capacity;
  r.method = std::move(method);
  r.objective = result.objective;
  r.sum_rate = result.sum_rate;
  r.d2d_count = result.d2d_count;
  r.iterations = result.iterations();
  r.feasible = result.feasible;

  double total = 0.0;
  for (std::size_t n = 0; n < scenario.size(); ++n) {
    if (!result.association.serve[n].is_uav()) continue;
    const double margin = result.per_user_illuminance[n] - scenario.params.illum_threshold;
    r.min_margin = r.served_centroid_count == 0 ? margin : std::min(r.min_margin, margin);
    total += margin;
    ++r.served_centroid_count;
  }
  if (r.served_centroid_count > 0) {
    r.mean_margin = total / static_cast<double>(r.served_centroid_count);
  }
  return r;
}

std::vector<SummaryRow> summarize(const std::vector<ResultRecord>& records) {
  std::vector<SummaryRow> rows;
  auto row_for = [&](const ResultRecord& rec) -> SummaryRow& {
    for (SummaryRow& row : rows) {
      if (row.sweep_point == rec.sweep_point && row.method == rec.method) return row;
    }
    rows.push_back({rec.sweep_point, rec.method});
    return rows.back();
  };

  std::map<std::pair<std::string, std::string>, std::size_t> margin_runs;
  for (const ResultRecord& rec : records) {
    SummaryRow& row = row_for(rec);
    if (!rec.error.empty()) {
      ++row.failed;
      continue;
    }
    const bool first = row.runs == 0;
    ++row.runs;
    row.feasible += rec.feasible ? 1 : 0;
    row.mean_objective += rec.objective;
    row.min_objective = first ? rec.objective : std::min(row.min_objective, rec.objective);
    row.mean_sum_rate += rec.sum_rate;
    row.mean_d2d_count += static_cast<double>(rec.d2d_count);
    if (rec.served_centroid_count > 0) {
      auto& count = margin_runs[{rec.sweep_point, rec.method}];
      row.min_margin = count == 0 ? rec.min_margin : std::min(row.min_margin, rec.min_margin);
      row.mean_margin += rec.mean_margin;
      ++count;
    }
  }
  for (SummaryRow& row : rows) {
    if (row.runs > 0) {
      const auto n = static_cast<double>(row.runs);
      row.mean_objective /= n;
      row.mean_sum_rate /= n;
      row.mean_d2d_count /= n;
    }
    const std::size_t m = margin_runs[{row.sweep_point, row.method}];
    if (m > 0) row.mean_margin /= static_cast<double>(m);
  }
  return rows;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned jobs) {
  spec.validate();
  const std::vector<SweepPoint> points = spec.points();
  const std::size_t tasks = spec.seeds.size() * points.size();
  std::vector<std::pair<ResultRecord, ResultRecord>> slots(tasks);

  auto run_task = [&](std::size_t task) {
    const std::uint64_t seed = spec.seeds[task / points.size()];
    const SweepPoint& point = points[task % points.size()];
    NetworkParams params = spec.params;
    params.weight_rate = point.weight_rate;
    params.weight_d2d = point.weight_d2d;
    params.capacity = point.capacity;
    PlannerConfig cfg = spec.planner;
    cfg.seed = seed;

    auto timed = [&](const char* method, auto&& solve) {
      const auto start = std::chrono::steady_clock::now();
      ResultRecord rec;
      try {
        const Scenario scenario =
            generate_scenario(params, spec.user_count, seed, spec.initial_placement);
        rec = make_record(seed, point, method, scenario, solve(scenario));
      } catch (const std::exception& e) {
        rec.seed = seed;
        rec.sweep_point = point.label;
        rec.weight_rate = point.weight_rate;
        rec.weight_d2d = point.weight_d2d;
        rec.capacity = point.capacity;
        rec.method = method;
        rec.error = e.what();
      }
      rec.wall_time_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
      return rec;
    };

    slots[task].first = timed("plan", [&](const Scenario& s) { return plan(s, cfg); });
    slots[task].second =
        timed("baseline", [&](const Scenario& s) { return baseline_fixed_placement(s, cfg); });
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks)));
  if (workers == 1) {
    for (std::size_t t = 0; t < tasks; ++t) run_task(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < tasks; t = next++) run_task(t);
      });
    }
  }

  ExperimentResult result;
  result.records.reserve(2 * tasks);
  for (auto& [planned, baseline] : slots) {
    result.records.push_back(std::move(planned));
    result.records.push_back(std::move(baseline));
  }
  result.summary = summarize(result.records);
  return result;
}

std::string results_csv(const std::vector<ResultRecord>& records) {
  std::string out =
      "seed,sweep_point,weight_rate,weight_d2d,capacity,method,objective,sum_rate,d2d_count,"
      "served_centroid_count,min_margin_lux,mean_margin_lux,iterations,feasible,wall_time_ms,"
      "error\n";
  for (const ResultRecord& r : records) {
    std::string error = r.error;
    std::replace(error.begin(), error.end(), ',', ';');
    std::replace(error.begin(), error.end(), '\n', ' ');
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{:.3f},{}\n", r.seed,
                       r.sweep_point, r.weight_rate, r.weight_d2d, r.capacity, r.method,
                       r.objective, r.sum_rate, r.d2d_count, r.served_centroid_count,
                       r.min_margin, r.mean_margin, r.iterations, r.feasible ? 1 : 0,
                       r.wall_time_ms, error);
  }
  return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out =
      "sweep_point,method,runs,failed,feasible,mean_objective,min_objective,mean_sum_rate,"
      "mean_d2d_count,mean_margin_lux,min_margin_lux\n";
  for (const SummaryRow& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", r.sweep_point, r.method, r.runs,
                       r.failed, r.feasible, r.mean_objective, r.min_objective, r.mean_sum_rate,
                       r.mean_d2d_count, r.mean_margin, r.min_margin);
  }
  return out;
}

namespace {

json record_to_json(const ResultRecord& r) {
  json j{{"seed", r.seed},
         {"sweep_point", r.sweep_point},
         {"weight_rate", r.weight_rate},
         {"weight_d2d", r.weight_d2d},
         {"capacity", r.capacity},
         {"method", r.method},
         {"objective", r.objective},
         {"sum_rate", r.sum_rate},
         {"d2d_count", r.d2d_count},
         {"served_centroid_count", r.served_centroid_count},
         {"min_margin_lux", r.min_margin},
         {"mean_margin_lux", r.mean_margin},
         {"iterations", r.iterations},
         {"feasible", r.feasible},
         {"wall_time_ms", r.wall_time_ms}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

void save_results(const ExperimentResult& result, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

  std::string lines;
  for (const ResultRecord& r : result.records) lines += record_to_json(r).dump() + '\n';
  write_text(dir / "records.jsonl", lines);
  write_text(dir / "results.csv", results_csv(result.records));
  write_text(dir / "summary.csv", summary_csv(result.summary));
}

}  // namespace uavvlc
