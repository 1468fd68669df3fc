#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kcolor/engine.hpp"
#include "kcolor/graph.hpp"
#include "kcolor/tabucol.hpp"

namespace kcolor {

// One solver run inside a batch.
struct RunRecord {
  std::string instance;
  int k = 0;
  std::uint64_t seed = 0;
  bool found = false;
  std::int64_t generations = 0;
  std::int64_t iterations = 0;  // cumulative tabu iterations, both children
  double seconds = 0.0;
  double x = 0.0;  // experiment parameter; 0 outside experiments
};

// Aggregate over a batch. Means cover successful runs only; a run stopped
// by a budget counts toward `runs` but never toward a mean (censoring).
struct StatsRow {
  std::string instance;
  int k = 0;
  std::int64_t iter_tc = 0;
  int runs = 0;
  int successes = 0;
  double mean_generations = 0.0;
  double mean_iterations = 0.0;
  double mean_seconds = 0.0;
};

struct BatchSpec {
  std::string instance;  // reporting name
  EngineConfig engine;   // per-run seed is overwritten with base_seed + i
  int runs = 20;
  std::uint64_t base_seed = 1;
};

// Runs the batch sequentially with seeds base_seed + 0 .. base_seed + runs-1.
// Appends one RunRecord per run when `records` is given.
StatsRow run_batch(const Graph& g, const BatchSpec& spec,
                   std::vector<RunRecord>* records = nullptr);

// One grid point of a diversification experiment.
struct CurvePoint {
  double x = 0.0;
  int runs = 0;
  int successes = 0;          // censored runs = runs - successes
  double mean_iterations = 0.0;   // over successes
  double stderr_iterations = 0.0; // sample stderr over successes; 0 if < 2
  double mean_generations = 0.0;
};

struct Curve {
  std::string name;
  std::vector<CurvePoint> points;
  std::vector<RunRecord> runs;
  std::int64_t cap_iterations = 0;  // cap the grid points ran under
};

// Shared experiment shape: a batch per grid value x. When cap_iterations
// is 0 it is derived as 10x the mean successful iteration count of a
// baseline batch (x = 0 for the random-level experiment, x = 0.5 for the
// imbalance one, x = 1 for the replacement one) run under baseline_cap.
struct ExperimentSpec {
  std::string instance;
  EngineConfig engine;
  std::vector<double> x_grid;
  int runs_per_x = 10;
  std::int64_t cap_iterations = 0;
  std::int64_t baseline_cap = 200'000'000;
  std::uint64_t base_seed = 1;
};

// x = number of leading random transmission steps in the crossover.
Curve experiment_random_level(const Graph& g, const ExperimentSpec& spec);
// x = probability that a transmission step draws from the first parent.
Curve experiment_imbalance(const Graph& g, const ExperimentSpec& spec);
// x = probability that a non-improving child still replaces its parent.
Curve experiment_replacement(const Graph& g, const ExperimentSpec& spec);

// Crossover-distance experiment: harvest plateau colorings of a fixed
// fitness from independent tabu trajectories, cross random pairs and
// relate child fitness to the partition distance between the parents.
struct DistanceExperimentSpec {
  int k = 0;
  int parent_fitness = 40;
  int pool_runs = 30;
  std::int64_t pool_iterations = 200'000;
  int snapshots_per_run = 8;
  std::int64_t snapshot_gap = 500;  // min iterations between snapshots
  int pair_count = 400;
  int bins = 20;
  int tenure_span = 10;
  double tenure_alpha = 0.6;
  std::uint64_t base_seed = 1;
};

struct DistanceCurve {
  struct Bin {
    double center = 0.0;
    double mean_child_fitness = 0.0;
    int count = 0;
  };
  std::vector<std::pair<int, int>> points;  // (distance, child fitness)
  std::vector<Bin> bins;                    // only bins with >= 3 points
  double pearson_binned = 0.0;
  double pearson_points = 0.0;
  int pool_size = 0;
};

DistanceCurve experiment_distance_correlation(const Graph& g,
                                              const DistanceExperimentSpec& spec);

double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

void write_stats_csv(std::ostream& out, const std::vector<StatsRow>& rows);
void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& runs,
                    bool with_x = false);
void write_curve_csv(std::ostream& out, const Curve& curve);
void write_distance_csv(std::ostream& out, const DistanceCurve& curve);
void write_distance_points_csv(std::ostream& out, const DistanceCurve& curve);

}  // namespace kcolor
