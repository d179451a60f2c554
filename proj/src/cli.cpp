#include "uavvlc/cli.hpp"

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "uavvlc/experiment.hpp"
#include "uavvlc/planner.hpp"
#include "uavvlc/serialization.hpp"

namespace uavvlc {

namespace {

ExperimentSpec resolve_config(const std::string& config) {
  if (config.empty() || config == "default") return ExperimentSpec{};
  return load_config(config);
}

void emit_json(const nlohmann::json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << '\n';
  } else {
    write_json_file(path, j);
  }
}

void print_summary(const std::vector<SummaryRow>& rows, std::ostream& out) {
  out << fmt::format("{:<22} {:<9} {:>5} {:>9} {:>14} {:>12} {:>10} {:>14}\n", "sweep_point",
                     "method", "runs", "feasible", "mean_objective", "mean_rate", "mean_d2d",
                     "mean_margin");
  for (const SummaryRow& r : rows) {
    out << fmt::format("{:<22} {:<9} {:>5} {:>9} {:>14.4f} {:>12.4f} {:>10.2f} {:>14.3f}\n",
                       r.sweep_point, r.method, r.runs, r.feasible, r.mean_objective,
                       r.mean_sum_rate, r.mean_d2d_count, r.mean_margin);
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Joint user association and UAV placement for two-tier UAV VLC networks"};
  app.require_subcommand(1);

  std::string config = "default";
  std::string out_path;
  std::vector<std::uint64_t> seeds;
  unsigned jobs = 1;
  auto* run = app.add_subcommand("run", "Run an experiment sweep and write result tables");
  run->add_option("--config", config, "Experiment config file, or 'default'");
  run->add_option("--out", out_path, "Output directory (overrides output_dir)");
  run->add_option("--seed", seeds, "Seed(s) overriding the config's seed list");
  run->add_option("--jobs", jobs, "Concurrent sweep points")->check(CLI::PositiveNumber);

  std::size_t user_count = 0;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a random scenario file");
  gen->add_option("--config", config, "Config supplying params, or 'default'");
  gen->add_option("--n", user_count, "Number of users (default: config user_count)");
  gen->add_option("--seed", seed, "Scenario seed");
  gen->add_option("--out", out_path, "Scenario file (default: stdout)");

  std::string scenario_path;
  bool baseline = false;
  auto* plan_cmd = app.add_subcommand("plan", "Plan one scenario and write a solution file");
  plan_cmd->add_option("--scenario", scenario_path, "Scenario file")->required();
  plan_cmd->add_option("--seed", seed, "Planner seed (default: scenario seed)");
  plan_cmd->add_flag("--baseline", baseline, "Keep the UAVs at their initial placement");
  plan_cmd->add_option("--out", out_path, "Solution file (default: stdout)");

  std::string solution_path;
  auto* check = app.add_subcommand("check", "Re-validate a solution file against all constraints");
  check->add_option("solution,--solution", solution_path, "Solution file")->required();

  auto* oracle = app.add_subcommand("oracle", "Solve a small scenario exactly by enumeration");
  oracle->add_option("--scenario", scenario_path, "Scenario file")->required();
  oracle->add_option("--out", out_path, "Solution file (default: stdout)");

  auto* dump = app.add_subcommand("config", "Print the default experiment config");
  dump->add_option("--out", out_path, "Config file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*run) {
      ExperimentSpec spec = resolve_config(config);
      if (!seeds.empty()) spec.seeds = seeds;
      if (!out_path.empty()) spec.output_dir = out_path;
      const ExperimentResult result = run_experiment(spec, jobs);
      save_results(result, spec.output_dir);
      print_summary(result.summary, out);
      out << "wrote " << result.records.size() << " records to " << spec.output_dir << '\n';
      int failures = 0;
      for (const ResultRecord& r : result.records) {
        if (r.error.empty()) continue;
        ++failures;
        err << "error: seed " << r.seed << " " << r.sweep_point << " " << r.method << ": "
            << r.error << '\n';
      }
      return failures == 0 ? 0 : 1;
    }

    if (*gen) {
      const ExperimentSpec spec = resolve_config(config);
      const std::size_t n = user_count > 0 ? user_count : spec.user_count;
      const Scenario s = generate_scenario(spec.params, n, seed, spec.initial_placement);
      emit_json(scenario_to_json(s), out_path, out);
      return 0;
    }

    if (*plan_cmd) {
      const Scenario s = scenario_from_json(read_json_file(scenario_path));
      PlannerConfig cfg;
      cfg.seed = plan_cmd->count("--seed") > 0 ? seed : s.seed;
      const PlanResult r = baseline ? baseline_fixed_placement(s, cfg) : plan(s, cfg);
      emit_json(solution_to_json(make_solution(s, r)), out_path, out);
      if (!out_path.empty() && out_path != "-") {
        out << fmt::format("objective {:.6f}  sum_rate {:.6f}  d2d {}  iterations {}  {}\n",
                           r.objective, r.sum_rate, r.d2d_count, r.iterations(),
                           r.feasible ? "feasible" : "INFEASIBLE");
      }
      return 0;
    }

    if (*check) {
      const Solution sol = solution_from_json(read_json_file(solution_path));
      const ViolationReport report = check_constraints(sol.placement, sol.association, sol.scenario);
      for (const Violation& v : report.violations) out << "violation " << v.describe() << '\n';
      const bool feasible = report.empty();
      int status = feasible ? 0 : 1;
      if (feasible != sol.feasible) {
        err << "stored feasible flag (" << (sol.feasible ? "true" : "false")
            << ") disagrees with the constraint check\n";
        status = 1;
      }
      if (status == 0) out << "ok: no violations\n";
      return status;
    }

    if (*oracle) {
      const Scenario s = scenario_from_json(read_json_file(scenario_path));
      const PlanResult r = exhaustive_solve(s);
      emit_json(solution_to_json(make_solution(s, r)), out_path, out);
      return 0;
    }

    if (*dump) {
      emit_json(spec_to_json(ExperimentSpec{}), out_path, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace uavvlc
