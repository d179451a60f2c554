#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "uavvlc/experiment.hpp"

namespace uavvlc {
namespace {

using namespace uavvlc::testing;

TEST(GenerateScenario, InsideAreaAndDeterministic) {
  const Scenario s = generate_scenario(NetworkParams{}, 200, 42);
  ASSERT_EQ(s.size(), 200u);
  for (Point2 w : s.users) {
    EXPECT_GE(w.x, 0.0);
    EXPECT_LE(w.x, 200.0);
    EXPECT_GE(w.y, 0.0);
    EXPECT_LE(w.y, 200.0);
  }
  EXPECT_EQ(generate_scenario(NetworkParams{}, 200, 42).users, s.users);
  EXPECT_NE(generate_scenario(NetworkParams{}, 200, 43).users, s.users);
  EXPECT_NO_THROW(s.validate());
}

TEST(GenerateScenario, UniformMean) {
  const Scenario s = generate_scenario(NetworkParams{}, 100000, 9);
  double sx = 0, sy = 0;
  for (Point2 w : s.users) {
    sx += w.x;
    sy += w.y;
  }
  EXPECT_NEAR(sx / 1e5, 100.0, 1.0);
  EXPECT_NEAR(sy / 1e5, 100.0, 1.0);
}

ExperimentSpec small_spec() {
  ExperimentSpec spec;
  spec.user_count = 60;
  spec.seeds = {1, 2, 3};
  return spec;
}

TEST(RunExperiment, WeightSweepCardinality) {
  ExperimentSpec spec;
  spec.axis = SweepAxis::weights;
  spec.weight_points = {{0.99, 0.01}, {0.01, 0.99}};
  spec.seeds.clear();
  for (std::uint64_t s = 1; s <= 20; ++s) spec.seeds.push_back(s);
  const ExperimentResult r = run_experiment(spec, 4);
  ASSERT_EQ(r.records.size(), 80u);
  std::size_t plans = 0;
  for (const ResultRecord& rec : r.records) {
    plans += rec.method == "plan" ? 1 : 0;
    EXPECT_TRUE(rec.error.empty());
  }
  EXPECT_EQ(plans, 40u);
  ASSERT_EQ(r.summary.size(), 4u);
  for (const SummaryRow& row : r.summary) EXPECT_EQ(row.runs, 20u);
}

TEST(RunExperiment, CapacitySweepIsPaired) {
  ExperimentSpec spec = small_spec();
  spec.axis = SweepAxis::capacity;
  spec.capacity_points = {4, 8};
  const ExperimentResult r = run_experiment(spec);
  ASSERT_EQ(r.records.size(), 12u);
  // (seed, point, method) order: each seed carries K=4 then K=8
  for (std::size_t i = 0; i < r.records.size(); i += 4) {
    EXPECT_EQ(r.records[i].seed, r.records[i + 2].seed);
    EXPECT_EQ(r.records[i].capacity, 4);
    EXPECT_EQ(r.records[i + 2].capacity, 8);
    EXPECT_EQ(r.records[i].method, "plan");
    EXPECT_EQ(r.records[i + 1].method, "baseline");
  }
}

TEST(RunExperiment, EmptyAxisSinglePoint) {
  const ExperimentResult r = run_experiment(small_spec());
  ASSERT_EQ(r.records.size(), 6u);
  for (const ResultRecord& rec : r.records) EXPECT_EQ(rec.sweep_point, "base");
}

std::string without_wall_time(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  int wall_column = -1;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    if (wall_column < 0) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] == "wall_time_ms") wall_column = static_cast<int>(i);
      }
    }
    if (wall_column >= 0 && static_cast<std::size_t>(wall_column) < cells.size()) {
      cells.erase(cells.begin() + wall_column);
    }
    for (const std::string& c : cells) out += c + ',';
    out += '\n';
  }
  return out;
}

TEST(RunExperiment, DeterministicAcrossRunsAndJobCounts) {
  ExperimentSpec spec = small_spec();
  spec.axis = SweepAxis::weights;
  spec.weight_points = {{0.5, 0.5}, {0.9, 0.1}};
  const ExperimentResult a = run_experiment(spec, 1);
  const ExperimentResult b = run_experiment(spec, 4);
  EXPECT_EQ(without_wall_time(results_csv(a.records)), without_wall_time(results_csv(b.records)));
  EXPECT_EQ(summary_csv(a.summary), summary_csv(b.summary));
}

TEST(RunExperiment, FailingPointIsRecorded) {
  ExperimentSpec spec = small_spec();
  spec.initial_placement.uav1 = {std::numeric_limits<double>::quiet_NaN(), 0};
  const ExperimentResult r = run_experiment(spec);
  ASSERT_EQ(r.records.size(), 6u);
  for (const ResultRecord& rec : r.records) EXPECT_FALSE(rec.error.empty());
  ASSERT_EQ(r.summary.size(), 2u);
  EXPECT_EQ(r.summary[0].failed, 3u);
  EXPECT_EQ(r.summary[0].runs, 0u);
}

TEST(MakeRecord, MarginsOverUavServedUsers) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Scenario s = generate_scenario(NetworkParams{}, 200, seed);
    PlannerConfig cfg;
    cfg.seed = seed;
    const PlanResult p = plan(s, cfg);
    const ResultRecord rec = make_record(seed, {}, "plan", s, p);

    double lo = std::numeric_limits<double>::infinity(), total = 0;
    std::size_t count = 0;
    for (std::size_t n = 0; n < s.size(); ++n) {
      const ServeTag t = p.association.serve[n];
      if (!t.is_uav()) continue;
      const double lux = illuminance(channel_gain(p.placement[t.uav_index()], s.users[n], s.params),
                                     s.params);
      lo = std::min(lo, lux - 0.4);
      total += lux - 0.4;
      ++count;
    }
    ASSERT_GT(count, 0u);
    EXPECT_EQ(rec.served_centroid_count, count);
    EXPECT_NEAR(rec.min_margin, lo, 1e-9);
    EXPECT_NEAR(rec.mean_margin, total / static_cast<double>(count), 1e-9);
    EXPECT_GE(rec.min_margin, 0.0);
  }
}

TEST(SaveResults, WritesTablesAndRejectsBadPath) {
  const auto dir = std::filesystem::temp_directory_path() / "uavvlc_experiment_test";
  std::filesystem::remove_all(dir);
  const ExperimentResult r = run_experiment(small_spec());
  save_results(r, dir);
  for (const char* f : {"records.jsonl", "results.csv", "summary.csv"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  std::ifstream in(dir / "records.jsonl");
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) {
    EXPECT_TRUE(nlohmann::json::accept(line));
    ++lines;
  }
  EXPECT_EQ(lines, r.records.size());

  std::ofstream(dir / "blocker") << "x";
  EXPECT_THROW(save_results(r, dir / "blocker" / "sub"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace uavvlc
