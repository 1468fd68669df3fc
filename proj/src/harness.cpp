#include "kcolor/harness.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "kcolor/coloring.hpp"
#include "kcolor/distance.hpp"
#include "kcolor/gpx.hpp"

namespace kcolor {

namespace {

constexpr std::uint64_t kSaltPoolInit = 211;
constexpr std::uint64_t kSaltPoolLs = 223;
constexpr std::uint64_t kSaltPair = 227;

double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

double stderr_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  const double var = ss / static_cast<double>(xs.size() - 1);
  return std::sqrt(var / static_cast<double>(xs.size()));
}

}  // namespace

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("pearson: need two equally sized samples");
  const double mx = mean_of(xs), my = mean_of(ys);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    throw std::invalid_argument("pearson: degenerate sample");
  return sxy / std::sqrt(sxx * syy);
}

StatsRow run_batch(const Graph& g, const BatchSpec& spec,
                   std::vector<RunRecord>* records) {
  if (spec.runs < 1) throw std::invalid_argument("run_batch: runs must be positive");
  StatsRow row;
  row.instance = spec.instance;
  row.k = spec.engine.k;
  row.iter_tc = spec.engine.iter_tc;
  row.runs = spec.runs;
  std::vector<double> gens, iters, secs;
  for (int i = 0; i < spec.runs; ++i) {
    EngineConfig cfg = spec.engine;
    cfg.seed = spec.base_seed + static_cast<std::uint64_t>(i);
    EngineResult res = solve(g, cfg);
    RunRecord rec{spec.instance, cfg.k,     cfg.seed,
                  res.found,     res.generations, res.total_ls_iterations,
                  res.seconds,   0.0};
    if (res.found) {
      ++row.successes;
      gens.push_back(static_cast<double>(res.generations));
      iters.push_back(static_cast<double>(res.total_ls_iterations));
      secs.push_back(res.seconds);
    }
    if (records) records->push_back(rec);
  }
  row.mean_generations = mean_of(gens);
  row.mean_iterations = mean_of(iters);
  row.mean_seconds = mean_of(secs);
  return row;
}

namespace {

// Shared experiment driver. `apply_x` specializes the engine for a grid
// value; the cap, when not given, is 10x the baseline batch's mean
// successful iteration count.
Curve run_curve(const Graph& g, const ExperimentSpec& spec,
                const std::string& name, double baseline_x,
                void (*apply_x)(EngineConfig&, double)) {
  if (spec.runs_per_x < 1)
    throw std::invalid_argument("experiment: runs_per_x must be positive");
  if (spec.x_grid.empty())
    throw std::invalid_argument("experiment: empty x grid");

  Curve curve;
  curve.name = name;
  curve.cap_iterations = spec.cap_iterations;
  if (curve.cap_iterations == 0) {
    BatchSpec base;
    base.instance = spec.instance;
    base.engine = spec.engine;
    apply_x(base.engine, baseline_x);
    base.engine.max_ls_iterations = spec.baseline_cap;
    base.runs = spec.runs_per_x;
    base.base_seed = spec.base_seed;
    StatsRow row = run_batch(g, base, nullptr);
    if (row.successes == 0)
      throw std::runtime_error(
          "experiment: baseline batch found no legal coloring under the "
          "safety cap; cannot derive an iteration cap");
    curve.cap_iterations =
        static_cast<std::int64_t>(10.0 * row.mean_iterations);
  }

  for (double x : spec.x_grid) {
    BatchSpec point;
    point.instance = spec.instance;
    point.engine = spec.engine;
    apply_x(point.engine, x);
    point.engine.max_ls_iterations = curve.cap_iterations;
    point.runs = spec.runs_per_x;
    point.base_seed = spec.base_seed;
    std::vector<RunRecord> recs;
    StatsRow row = run_batch(g, point, &recs);
    CurvePoint p;
    p.x = x;
    p.runs = row.runs;
    p.successes = row.successes;
    p.mean_iterations = row.mean_iterations;
    p.mean_generations = row.mean_generations;
    std::vector<double> iters;
    for (auto& r : recs) {
      r.x = x;
      if (r.found) iters.push_back(static_cast<double>(r.iterations));
      curve.runs.push_back(r);
    }
    p.stderr_iterations = stderr_of(iters);
    curve.points.push_back(p);
  }
  return curve;
}

}  // namespace

Curve experiment_random_level(const Graph& g, const ExperimentSpec& spec) {
  for (double x : spec.x_grid)
    if (x < 0.0 || x > spec.engine.k || x != std::floor(x))
      throw std::invalid_argument(
          "random-level experiment: x grid must hold integers in [0, k]");
  return run_curve(g, spec, "random_level", 0.0,
                   [](EngineConfig& cfg, double x) {
                     cfg.crossover = {CrossoverKind::randomized, x};
                   });
}

Curve experiment_imbalance(const Graph& g, const ExperimentSpec& spec) {
  for (double x : spec.x_grid)
    if (x < 0.0 || x > 1.0)
      throw std::invalid_argument(
          "imbalance experiment: x grid outside [0, 1]");
  return run_curve(g, spec, "imbalance", 0.5,
                   [](EngineConfig& cfg, double x) {
                     cfg.crossover = {CrossoverKind::imbalanced, x};
                   });
}

Curve experiment_replacement(const Graph& g, const ExperimentSpec& spec) {
  for (double x : spec.x_grid)
    if (x < 0.0 || x > 1.0)
      throw std::invalid_argument(
          "replacement experiment: x grid outside [0, 1]");
  return run_curve(g, spec, "replacement", 1.0,
                   [](EngineConfig& cfg, double x) {
                     cfg.crossover = {CrossoverKind::standard, 0.0};
                     cfg.replacement_prob = x;
                   });
}

DistanceCurve experiment_distance_correlation(
    const Graph& g, const DistanceExperimentSpec& spec) {
  if (spec.k < 2 || spec.parent_fitness < 1 || spec.pool_runs < 2 ||
      spec.pair_count < 2 || spec.bins < 2)
    throw std::invalid_argument("distance experiment: bad parameters");

  // Harvest colorings the moment a trajectory passes through the target
  // fitness, a fixed gap apart so one run contributes several distinct
  // nearby points.
  std::vector<std::vector<Coloring>> pool(spec.pool_runs);
  for (int r = 0; r < spec.pool_runs; ++r) {
    Coloring start =
        random_coloring(g, spec.k, derive_seed(spec.base_seed, r, kSaltPoolInit));
    TabuColParams tp{spec.pool_iterations, spec.tenure_span, spec.tenure_alpha,
                     derive_seed(spec.base_seed, r, kSaltPoolLs)};
    TabuSearch search(g, std::move(start), tp);
    std::int64_t last = -spec.snapshot_gap;
    search.set_observer([&](const TabuSearch& s) {
      if (static_cast<int>(pool[r].size()) < spec.snapshots_per_run &&
          s.conflict_count() == spec.parent_fitness &&
          s.iteration() - last >= spec.snapshot_gap) {
        pool[r].push_back(s.coloring());
        last = s.iteration();
      }
    });
    search.run();
  }

  DistanceCurve curve;
  std::vector<std::pair<int, int>> flat;  // (run, index)
  for (int r = 0; r < spec.pool_runs; ++r)
    for (int j = 0; j < static_cast<int>(pool[r].size()); ++j)
      flat.emplace_back(r, j);
  curve.pool_size = static_cast<int>(flat.size());
  if (curve.pool_size < 2)
    throw std::runtime_error(
        "distance experiment: snapshot pool too small; raise pool_iterations "
        "or move parent_fitness closer to the search plateau");

  Rng rng(derive_seed(spec.base_seed, 1, kSaltPair));
  auto add_pair = [&](const Coloring& a, const Coloring& b) {
    const int d = partition_distance(a, b);
    Coloring child = gpx(a, b, rng);
    curve.points.emplace_back(d, fitness(g, child));
  };
  // Consecutive snapshots of one run give the small distances...
  for (int r = 0;
       r < spec.pool_runs && static_cast<int>(curve.points.size()) <
                                 spec.pair_count / 2;
       ++r)
    for (std::size_t j = 0; j + 1 < pool[r].size() &&
                            static_cast<int>(curve.points.size()) <
                                spec.pair_count / 2;
         ++j)
      add_pair(pool[r][j], pool[r][j + 1]);
  // ...and pairs across runs the large ones.
  int guard = 0;
  while (static_cast<int>(curve.points.size()) < spec.pair_count &&
         guard++ < spec.pair_count * 20) {
    const auto [r1, j1] = flat[rng.uniform_int(0, curve.pool_size - 1)];
    const auto [r2, j2] = flat[rng.uniform_int(0, curve.pool_size - 1)];
    if (r1 == r2) continue;
    add_pair(pool[r1][j1], pool[r2][j2]);
  }
  if (curve.points.size() < 2)
    throw std::runtime_error("distance experiment: not enough pairs");

  int dmin = curve.points[0].first, dmax = curve.points[0].first;
  for (auto [d, f] : curve.points) {
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }
  const int width = std::max(1, (dmax - dmin + spec.bins) / spec.bins);
  std::vector<double> sums(spec.bins + 1, 0.0);
  std::vector<int> counts(spec.bins + 1, 0);
  for (auto [d, f] : curve.points) {
    const int b = (d - dmin) / width;
    sums[b] += f;
    ++counts[b];
  }
  std::vector<double> centers, means;
  for (int b = 0; b <= spec.bins; ++b) {
    if (counts[b] < 3) continue;  // too sparse to average meaningfully
    DistanceCurve::Bin bin;
    bin.center = dmin + (b + 0.5) * width;
    bin.mean_child_fitness = sums[b] / counts[b];
    bin.count = counts[b];
    curve.bins.push_back(bin);
    centers.push_back(bin.center);
    means.push_back(bin.mean_child_fitness);
  }
  if (curve.bins.size() < 3)
    throw std::runtime_error("distance experiment: fewer than 3 usable bins");
  curve.pearson_binned = pearson(centers, means);
  std::vector<double> xs, ys;
  for (auto [d, f] : curve.points) {
    xs.push_back(d);
    ys.push_back(f);
  }
  curve.pearson_points = pearson(xs, ys);
  return curve;
}

void write_stats_csv(std::ostream& out, const std::vector<StatsRow>& rows) {
  out << "instance,k,iter_tc,runs,successes,mean_generations,"
         "mean_iterations,mean_seconds\n";
  out << std::setprecision(10);
  for (const auto& r : rows) {
    out << r.instance << ',' << r.k << ',' << r.iter_tc << ',' << r.runs
        << ',' << r.successes << ',';
    if (r.successes > 0)
      out << r.mean_generations << ',' << r.mean_iterations << ','
          << r.mean_seconds;
    else
      out << ",,";  // means undefined without a successful run
    out << '\n';
  }
}

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& runs,
                    bool with_x) {
  out << "instance,k,seed,found,generations,iterations,seconds";
  if (with_x) out << ",x";
  out << '\n';
  out << std::setprecision(10);
  for (const auto& r : runs) {
    out << r.instance << ',' << r.k << ',' << r.seed << ','
        << (r.found ? 1 : 0) << ',' << r.generations << ',' << r.iterations
        << ',' << r.seconds;
    if (with_x) out << ',' << r.x;
    out << '\n';
  }
}

void write_curve_csv(std::ostream& out, const Curve& curve) {
  out << "experiment,x,runs,successes,mean_iterations,stderr_iterations,"
         "mean_generations,cap_iterations\n";
  out << std::setprecision(10);
  for (const auto& p : curve.points) {
    out << curve.name << ',' << p.x << ',' << p.runs << ',' << p.successes
        << ',';
    if (p.successes > 0)
      out << p.mean_iterations << ',' << p.stderr_iterations << ','
          << p.mean_generations;
    else
      out << ",,";
    out << ',' << curve.cap_iterations << '\n';
  }
}

void write_distance_csv(std::ostream& out, const DistanceCurve& curve) {
  out << "bin_center,mean_child_fitness,count\n";
  out << std::setprecision(10);
  for (const auto& b : curve.bins)
    out << b.center << ',' << b.mean_child_fitness << ',' << b.count << '\n';
}

void write_distance_points_csv(std::ostream& out, const DistanceCurve& curve) {
  out << "distance,child_fitness\n";
  for (auto [d, f] : curve.points)
    out << d << ',' << f << '\n';
}

}  // namespace kcolor
