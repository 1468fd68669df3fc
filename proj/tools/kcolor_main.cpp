// Command-line front end: solve one instance, validate or compare
// colorings, run benchmark batches and diversification experiments.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kcolor/config.hpp"
#include "kcolor/coloring.hpp"
#include "kcolor/dimacs.hpp"
#include "kcolor/distance.hpp"
#include "kcolor/engine.hpp"
#include "kcolor/gpx.hpp"
#include "kcolor/graph.hpp"
#include "kcolor/harness.hpp"

namespace fs = std::filesystem;
using namespace kcolor;

namespace {

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

// Resolves the instance of a bench/experiment config: either through the
// registry (name lookup, registry k as fallback) or as a direct file path.
Graph resolve_instance(const ConfigFile& cfg, int* registry_k) {
  *registry_k = 0;
  const std::string instance = cfg.get_string("instance");
  if (cfg.has("registry")) {
    auto registry = load_registry_file(cfg.get_string("registry"));
    const RegistryEntry* entry = find_instance(registry, instance);
    if (!entry)
      throw ParseError("instance '" + instance + "' not in registry");
    *registry_k = entry->best_k;
    return load_dimacs_file(entry->path);
  }
  return load_dimacs_file(instance);
}

EngineConfig engine_from_config(const ConfigFile& cfg, int k) {
  EngineConfig e;
  e.k = k;
  e.iter_tc = cfg.get_int("iter_tc", 8000);
  e.iter_cycle = static_cast<int>(cfg.get_int("iter_cycle", 10));
  e.use_elites = cfg.get_bool("elites", true);
  e.replacement_prob = cfg.get_double("replacement_prob", 1.0);
  e.crossover = parse_crossover_spec(cfg.get_string("crossover", "standard"));
  e.threads = static_cast<int>(cfg.get_int("threads", 1));
  e.tenure_span = static_cast<int>(cfg.get_int("tenure_span", 10));
  e.tenure_alpha = cfg.get_double("tenure_alpha", 0.6);
  e.max_ls_iterations = cfg.get_int("cap", 0);
  e.max_seconds = cfg.get_double("cap_seconds", 0.0);
  e.max_generations = cfg.get_int("cap_generations", 0);
  return e;
}

int resolve_k(const ConfigFile& cfg, int registry_k) {
  const int k = static_cast<int>(cfg.get_int("k", registry_k));
  if (k < 1)
    throw ParseError("no k given and the registry has no entry to fall back on");
  return k;
}

struct SolveArgs {
  std::string instance;
  int k = 0;
  std::int64_t iter_tc = 8000;
  int iter_cycle = 10;
  bool no_elites = false;
  double replacement_prob = 1.0;
  std::string crossover = "standard";
  std::int64_t max_generations = 0;
  double max_seconds = 0.0;
  std::uint64_t seed = 1;
  std::string trace_path;
  std::string ls_trace_path;
  int threads = 2;
  std::string out_path;
};

int cmd_solve(const SolveArgs& args) {
  Graph g = load_dimacs_file(args.instance);
  EngineConfig cfg;
  cfg.k = args.k;
  cfg.iter_tc = args.iter_tc;
  cfg.iter_cycle = args.iter_cycle;
  cfg.use_elites = !args.no_elites;
  cfg.replacement_prob = args.replacement_prob;
  cfg.crossover = parse_crossover_spec(args.crossover);
  cfg.max_generations = args.max_generations;
  cfg.max_seconds = args.max_seconds;
  cfg.seed = args.seed;
  cfg.threads = args.threads;

  std::ofstream trace, ls_trace;
  if (!args.trace_path.empty()) {
    trace = open_out(args.trace_path);
    cfg.trace = &trace;
  }
  if (!args.ls_trace_path.empty()) {
    ls_trace = open_out(args.ls_trace_path);
    cfg.ls_trace = &ls_trace;
  }

  std::cout << "instance " << g.name() << " n " << g.vertex_count() << " m "
            << g.edge_count() << " k " << args.k << " seed " << args.seed
            << " threads " << args.threads << "\n";
  EngineResult res = solve(g, cfg);
  std::cout << "result " << (res.found ? "found" : "exhausted") << " reason "
            << to_string(res.reason) << " best_fitness " << res.best_fitness
            << " generations " << res.generations << " iterations "
            << res.total_ls_iterations << " seconds " << res.seconds << "\n";
  if (res.found) {
    fs::path out = args.out_path.empty()
                       ? fs::path(args.instance).stem().string() + ".k" +
                             std::to_string(args.k) + ".sol"
                       : fs::path(args.out_path);
    auto f = open_out(out);
    write_coloring(f, g, res.best);
    std::cout << "coloring written to " << out.string() << "\n";
    return 0;
  }
  return 1;
}

int cmd_validate(const std::string& instance, const std::string& coloring) {
  Graph g = load_dimacs_file(instance);
  Coloring c = load_coloring_file(coloring, g.vertex_count());
  const int f = fitness(g, c);
  std::cout << (f == 0 ? "LEGAL" : "ILLEGAL") << " k " << c.k << " fitness "
            << f << "\n";
  return f == 0 ? 0 : 1;
}

int cmd_distance(const std::string& instance, const std::string& a_path,
                 const std::string& b_path) {
  Graph g = load_dimacs_file(instance);
  Coloring a = load_coloring_file(a_path, g.vertex_count());
  Coloring b = load_coloring_file(b_path, g.vertex_count());
  std::cout << partition_distance(a, b) << "\n";
  return 0;
}

const std::vector<std::string> kBenchKeys = {
    "registry",    "instance",        "k",           "iter_tc",
    "runs",        "base_seed",       "cap",         "cap_seconds",
    "cap_generations", "iter_cycle",  "elites",      "replacement_prob",
    "crossover",   "threads",         "tenure_span", "tenure_alpha",
    "out_dir"};

int cmd_bench(const std::string& config_path) {
  ConfigFile cfg = ConfigFile::load(config_path);
  cfg.require_known(kBenchKeys);
  int registry_k = 0;
  Graph g = resolve_instance(cfg, &registry_k);
  const int k = resolve_k(cfg, registry_k);

  BatchSpec spec;
  spec.instance = g.name();
  spec.engine = engine_from_config(cfg, k);
  spec.runs = static_cast<int>(cfg.get_int("runs", 20));
  spec.base_seed = static_cast<std::uint64_t>(cfg.get_int("base_seed", 1));

  std::vector<RunRecord> records;
  StatsRow row = run_batch(g, spec, &records);

  const fs::path out_dir = cfg.get_string("out_dir", ".");
  {
    auto f = open_out(out_dir / "stats.csv");
    write_stats_csv(f, {row});
  }
  {
    auto f = open_out(out_dir / "runs.csv");
    write_runs_csv(f, records);
  }
  std::cout << row.instance << " k " << row.k << " iter_tc " << row.iter_tc
            << " successes " << row.successes << "/" << row.runs;
  if (row.successes > 0)
    std::cout << " mean_generations " << row.mean_generations
              << " mean_iterations " << row.mean_iterations
              << " mean_seconds " << row.mean_seconds;
  std::cout << "\nwrote " << (out_dir / "stats.csv").string() << " and "
            << (out_dir / "runs.csv").string() << "\n";
  return 0;
}

const std::vector<std::string> kExperimentKeys = {
    "registry",  "instance",     "k",           "experiment",
    "x_grid",    "runs_per_x",   "cap",         "baseline_cap",
    "base_seed", "iter_tc",      "iter_cycle",  "elites",
    "threads",   "tenure_span",  "tenure_alpha", "out_dir",
    "parent_fitness", "pairs",   "bins",        "pool_runs",
    "pool_iters", "snapshot_gap", "snapshots_per_run"};

int cmd_experiment(const std::string& config_path) {
  ConfigFile cfg = ConfigFile::load(config_path);
  cfg.require_known(kExperimentKeys);
  int registry_k = 0;
  Graph g = resolve_instance(cfg, &registry_k);
  const int k = resolve_k(cfg, registry_k);
  const std::string which = cfg.get_string("experiment");
  const fs::path out_dir = cfg.get_string("out_dir", ".");

  if (which == "distance_correlation") {
    DistanceExperimentSpec spec;
    spec.k = k;
    spec.parent_fitness = static_cast<int>(cfg.get_int("parent_fitness", 40));
    spec.pool_runs = static_cast<int>(cfg.get_int("pool_runs", 30));
    spec.pool_iterations = cfg.get_int("pool_iters", 200'000);
    spec.snapshots_per_run =
        static_cast<int>(cfg.get_int("snapshots_per_run", 8));
    spec.snapshot_gap = cfg.get_int("snapshot_gap", 500);
    spec.pair_count = static_cast<int>(cfg.get_int("pairs", 400));
    spec.bins = static_cast<int>(cfg.get_int("bins", 20));
    spec.tenure_span = static_cast<int>(cfg.get_int("tenure_span", 10));
    spec.tenure_alpha = cfg.get_double("tenure_alpha", 0.6);
    spec.base_seed = static_cast<std::uint64_t>(cfg.get_int("base_seed", 1));
    DistanceCurve curve = experiment_distance_correlation(g, spec);
    {
      auto f = open_out(out_dir / "distance_bins.csv");
      write_distance_csv(f, curve);
    }
    {
      auto f = open_out(out_dir / "distance_points.csv");
      write_distance_points_csv(f, curve);
    }
    std::cout << "distance_correlation pool " << curve.pool_size << " pairs "
              << curve.points.size() << " bins " << curve.bins.size()
              << " pearson_binned " << curve.pearson_binned
              << " pearson_points " << curve.pearson_points << "\nwrote "
              << (out_dir / "distance_bins.csv").string() << " and "
              << (out_dir / "distance_points.csv").string() << "\n";
    return 0;
  }

  ExperimentSpec spec;
  spec.instance = g.name();
  spec.engine = engine_from_config(cfg, k);
  spec.x_grid = cfg.get_grid("x_grid");
  spec.runs_per_x = static_cast<int>(cfg.get_int("runs_per_x", 10));
  spec.cap_iterations = cfg.get_int("cap", 0);
  spec.baseline_cap = cfg.get_int("baseline_cap", 200'000'000);
  spec.base_seed = static_cast<std::uint64_t>(cfg.get_int("base_seed", 1));

  Curve curve;
  if (which == "random_level")
    curve = experiment_random_level(g, spec);
  else if (which == "imbalance")
    curve = experiment_imbalance(g, spec);
  else if (which == "replacement")
    curve = experiment_replacement(g, spec);
  else
    throw ParseError("unknown experiment '" + which + "'");

  {
    auto f = open_out(out_dir / ("curve_" + curve.name + ".csv"));
    write_curve_csv(f, curve);
  }
  {
    auto f = open_out(out_dir / ("curve_" + curve.name + "_runs.csv"));
    write_runs_csv(f, curve.runs, /*with_x=*/true);
  }
  std::cout << curve.name << " cap " << curve.cap_iterations << "\n";
  for (const auto& p : curve.points) {
    std::cout << "  x " << p.x << " successes " << p.successes << "/"
              << p.runs;
    if (p.successes > 0)
      std::cout << " mean_iterations " << p.mean_iterations << " stderr "
                << p.stderr_iterations;
    std::cout << "\n";
  }
  std::cout << "wrote " << (out_dir / ("curve_" + curve.name + ".csv")).string()
            << " and "
            << (out_dir / ("curve_" + curve.name + "_runs.csv")).string()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"memetic tabu-search k-coloring solver"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand(
      "solve", "solve one instance for a fixed number of colors");
  solve_cmd->add_option("instance", sa.instance, "DIMACS .col file")
      ->required();
  solve_cmd->add_option("-k,--colors", sa.k, "number of colors")->required();
  solve_cmd->add_option("--iter-tc", sa.iter_tc,
                        "tabu iterations per child per generation");
  solve_cmd->add_option("--iter-cycle", sa.iter_cycle,
                        "generations per elite cycle");
  solve_cmd->add_flag("--no-elites", sa.no_elites,
                      "disable elite reinjection");
  solve_cmd->add_option("--replacement-prob", sa.replacement_prob,
                        "probability a non-improving child replaces its parent");
  solve_cmd->add_option("--crossover", sa.crossover,
                        "standard | randomized:<x> | imbalanced:<x>");
  solve_cmd->add_option("--max-generations", sa.max_generations,
                        "generation budget (0 = unbounded)");
  solve_cmd->add_option("--max-seconds", sa.max_seconds,
                        "wall-clock budget (0 = unbounded)");
  solve_cmd->add_option("--seed", sa.seed, "random seed");
  solve_cmd->add_option("--trace", sa.trace_path,
                        "write a per-generation CSV trace");
  solve_cmd->add_option("--ls-trace", sa.ls_trace_path,
                        "write a per-iteration local-search CSV trace");
  solve_cmd->add_option("--threads", sa.threads, "child pipelines (1 or 2)")
      ->check(CLI::Range(1, 2));
  solve_cmd->add_option("-o,--out", sa.out_path,
                        "coloring output path (default <instance>.k<K>.sol)");

  std::string v_instance, v_coloring;
  auto* validate_cmd =
      app.add_subcommand("validate", "check a coloring file for legality");
  validate_cmd->add_option("instance", v_instance, "DIMACS .col file")
      ->required();
  validate_cmd->add_option("coloring", v_coloring, "coloring file")
      ->required();

  std::string d_instance, d_a, d_b;
  auto* distance_cmd = app.add_subcommand(
      "distance", "partition distance between two coloring files");
  distance_cmd->add_option("instance", d_instance, "DIMACS .col file")
      ->required();
  distance_cmd->add_option("a", d_a, "first coloring file")->required();
  distance_cmd->add_option("b", d_b, "second coloring file")->required();

  std::string bench_config;
  auto* bench_cmd =
      app.add_subcommand("bench", "run a benchmark batch from a config file");
  bench_cmd->add_option("config", bench_config, "batch config file")
      ->required();

  std::string experiment_config;
  auto* experiment_cmd = app.add_subcommand(
      "experiment", "run a diversification experiment from a config file");
  experiment_cmd->add_option("config", experiment_config,
                             "experiment config file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(sa);
    if (validate_cmd->parsed()) return cmd_validate(v_instance, v_coloring);
    if (distance_cmd->parsed()) return cmd_distance(d_instance, d_a, d_b);
    if (bench_cmd->parsed()) return cmd_bench(bench_config);
    if (experiment_cmd->parsed()) return cmd_experiment(experiment_config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
