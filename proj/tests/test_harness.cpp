#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "kcolor/harness.hpp"
#include "support/oracles.hpp"

using namespace kcolor;

namespace {

BatchSpec petersen_batch(int runs) {
  BatchSpec spec;
  spec.instance = "petersen";
  spec.engine.k = 3;
  spec.engine.iter_tc = 500;
  spec.engine.threads = 1;
  spec.engine.max_generations = 50;
  spec.runs = runs;
  spec.base_seed = 10;
  return spec;
}

}  // namespace

TEST_CASE("run_batch aggregates exactly what the run records say") {
  auto g = oracle::make_petersen();
  std::vector<RunRecord> records;
  StatsRow row = run_batch(g, petersen_batch(6), &records);
  CHECK(row.runs == 6);
  CHECK(row.successes == 6);
  REQUIRE(records.size() == 6);
  double gens = 0, iters = 0, secs = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].seed == 10 + i);  // run i uses base_seed + i
    CHECK(records[i].found);
    CHECK(records[i].instance == "petersen");
    gens += records[i].generations;
    iters += records[i].iterations;
    secs += records[i].seconds;
  }
  CHECK(row.mean_generations == doctest::Approx(gens / 6));
  CHECK(row.mean_iterations == doctest::Approx(iters / 6));
  CHECK(row.mean_seconds == doctest::Approx(secs / 6));
}

TEST_CASE("censored runs count toward totals but never toward means") {
  auto g = oracle::make_complete(4);  // k = 2 is infeasible
  BatchSpec spec;
  spec.instance = "k4";
  spec.engine.k = 2;
  spec.engine.iter_tc = 50;
  spec.engine.threads = 1;
  spec.engine.max_generations = 5;
  spec.runs = 4;
  std::vector<RunRecord> records;
  StatsRow row = run_batch(g, spec, &records);
  CHECK(row.runs == 4);
  CHECK(row.successes == 0);
  CHECK(row.mean_generations == 0.0);
  CHECK(row.mean_iterations == 0.0);
  for (const auto& r : records) CHECK_FALSE(r.found);
}

TEST_CASE("batches are reproducible") {
  auto g = oracle::make_petersen();
  StatsRow a = run_batch(g, petersen_batch(4), nullptr);
  StatsRow b = run_batch(g, petersen_batch(4), nullptr);
  CHECK(a.mean_generations == b.mean_generations);
  CHECK(a.mean_iterations == b.mean_iterations);
  CHECK(a.successes == b.successes);
}

TEST_CASE("pearson on hand-checked samples") {
  CHECK(pearson({1, 2, 3}, {2, 4, 6}) == doctest::Approx(1.0));
  CHECK(pearson({1, 2, 3}, {6, 4, 2}) == doctest::Approx(-1.0));
  CHECK(pearson({1, 2, 3, 4}, {1, 3, 2, 4}) == doctest::Approx(0.8));
  CHECK_THROWS_AS(pearson({1, 1, 1}, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(pearson({1}, {1}), std::invalid_argument);
}

TEST_CASE("experiment with an explicit cap runs every grid point") {
  auto g = oracle::make_petersen();
  ExperimentSpec spec;
  spec.instance = "petersen";
  spec.engine.k = 3;
  spec.engine.iter_tc = 300;
  spec.engine.threads = 1;
  spec.x_grid = {0, 1, 3};
  spec.runs_per_x = 3;
  spec.cap_iterations = 500'000;
  spec.base_seed = 5;
  Curve curve = experiment_random_level(g, spec);
  CHECK(curve.name == "random_level");
  CHECK(curve.cap_iterations == 500'000);
  REQUIRE(curve.points.size() == 3);
  for (const auto& p : curve.points) {
    CHECK(p.runs == 3);
    CHECK(p.successes == 3);  // Petersen at k = 3 is easy at any level
    CHECK(p.mean_iterations > 0);
  }
  CHECK(curve.runs.size() == 9);
  CHECK(curve.runs.front().x == 0);
  CHECK(curve.runs.back().x == 3);
}

TEST_CASE("the derived cap is ten times the baseline mean") {
  auto g = oracle::make_petersen();
  ExperimentSpec spec;
  spec.instance = "petersen";
  spec.engine.k = 3;
  spec.engine.iter_tc = 300;
  spec.engine.threads = 1;
  spec.x_grid = {0};
  spec.runs_per_x = 4;
  spec.base_seed = 5;
  Curve curve = experiment_random_level(g, spec);
  // the baseline is x = 0 itself, so the grid point must fully succeed:
  // no single run exceeds 10x the mean of a 4-run batch
  REQUIRE(curve.points.size() == 1);
  CHECK(curve.points[0].successes == 4);
  CHECK(curve.cap_iterations ==
        static_cast<std::int64_t>(10.0 * curve.points[0].mean_iterations));
}

TEST_CASE("replacement and imbalance experiments accept only x in [0,1]") {
  auto g = oracle::make_petersen();
  ExperimentSpec spec;
  spec.instance = "petersen";
  spec.engine.k = 3;
  spec.engine.iter_tc = 200;
  spec.engine.threads = 1;
  spec.runs_per_x = 2;
  spec.cap_iterations = 200'000;
  spec.x_grid = {1.5};
  CHECK_THROWS_AS(experiment_replacement(g, spec), std::invalid_argument);
  CHECK_THROWS_AS(experiment_imbalance(g, spec), std::invalid_argument);
  spec.x_grid = {0.5, 1.0};
  Curve c1 = experiment_replacement(g, spec);
  CHECK(c1.points.size() == 2);
  Curve c2 = experiment_imbalance(g, spec);
  CHECK(c2.points.size() == 2);
  // the random-level grid must hold integers within [0, k]
  spec.x_grid = {0.5};
  CHECK_THROWS_AS(experiment_random_level(g, spec), std::invalid_argument);
  spec.x_grid = {4};
  CHECK_THROWS_AS(experiment_random_level(g, spec), std::invalid_argument);
}

TEST_CASE("distance correlation experiment produces usable bins") {
  Graph g = random_graph(40, 0.5, 404);
  DistanceExperimentSpec spec;
  spec.k = 3;
  spec.parent_fitness = 60;  // crossed on the way down from ~130
  spec.pool_runs = 6;
  spec.pool_iterations = 3000;
  spec.snapshots_per_run = 4;
  spec.snapshot_gap = 50;
  spec.pair_count = 60;
  spec.bins = 8;
  spec.base_seed = 1;
  DistanceCurve curve = experiment_distance_correlation(g, spec);
  CHECK(curve.pool_size >= 2);
  CHECK(curve.points.size() >= 30);
  CHECK(curve.bins.size() >= 3);
  CHECK(std::abs(curve.pearson_binned) <= 1.0);
  CHECK(std::abs(curve.pearson_points) <= 1.0);
  for (const auto& b : curve.bins) CHECK(b.count >= 3);
  // reproducible
  DistanceCurve again = experiment_distance_correlation(g, spec);
  CHECK(again.pearson_binned == curve.pearson_binned);
  CHECK(again.points == curve.points);
}

TEST_CASE("distance experiment validates its parameters") {
  Graph g = random_graph(20, 0.5, 1);
  DistanceExperimentSpec spec;
  spec.k = 1;
  CHECK_THROWS_AS(experiment_distance_correlation(g, spec),
                  std::invalid_argument);
}

TEST_CASE("csv writers emit one line per row plus a header") {
  StatsRow row;
  row.instance = "x";
  row.k = 3;
  row.iter_tc = 100;
  row.runs = 2;
  row.successes = 0;
  std::ostringstream stats;
  write_stats_csv(stats, {row});
  CHECK(stats.str().find("instance,k,iter_tc") == 0);
  CHECK(stats.str().find("x,3,100,2,0,,,") != std::string::npos);

  RunRecord rec{"x", 3, 7, true, 2, 1200, 0.5, 0.25};
  std::ostringstream runs;
  write_runs_csv(runs, {rec}, true);
  CHECK(runs.str().find(",x\n") != std::string::npos);  // x column present
  CHECK(runs.str().find("x,3,7,1,2,1200,0.5,0.25") != std::string::npos);

  Curve curve;
  curve.name = "random_level";
  curve.cap_iterations = 10;
  curve.points.push_back({1.0, 3, 0, 0.0, 0.0, 0.0});
  std::ostringstream cs;
  write_curve_csv(cs, curve);
  CHECK(cs.str().find("random_level,1,3,0,,,,10") != std::string::npos);
}
