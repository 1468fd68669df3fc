#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "kcolor/coloring.hpp"
#include "kcolor/gpx.hpp"
#include "kcolor/graph.hpp"
#include "kcolor/rng.hpp"

namespace kcolor {

// Two-individual memetic search. Each generation builds two children by
// asymmetric crossover of the two parents, improves each with a tabu
// search of iter_tc iterations, and replaces the parents. With elites
// enabled, the best child of the current cycle is remembered and the best
// of the previous cycle is reinjected as the first parent every
// iter_cycle generations.
struct EngineConfig {
  int k = 0;
  std::int64_t iter_tc = 8000;  // tabu iterations per child per generation
  int iter_cycle = 10;          // generations per elite cycle
  bool use_elites = true;
  // A child strictly fitter than its parent always replaces it; otherwise
  // it replaces it with this probability (1.0 = systematic replacement).
  double replacement_prob = 1.0;
  CrossoverSpec crossover;

  std::int64_t max_generations = 0;    // 0 = unbounded
  double max_seconds = 0.0;            // 0 = unbounded
  std::int64_t max_ls_iterations = 0;  // cumulative over children; 0 = unbounded

  int threads = 2;  // 1 or 2 child pipelines per generation
  // Reset elite slots to fresh random colorings instead of to the empty
  // sentinel that loses every comparison and is never reinjected.
  bool random_elite_reset = false;

  int tenure_span = 10;
  double tenure_alpha = 0.6;
  std::uint64_t seed = 1;

  // Generation trace CSV (identical for threads = 1 and 2).
  std::ostream* trace = nullptr;
  // Per-iteration LS trace CSV; buffered per child so the output stays
  // deterministic under both thread counts.
  std::ostream* ls_trace = nullptr;
};

enum class StopReason { found, generation_budget, time_budget, iteration_budget };

std::string to_string(StopReason reason);

struct EngineResult {
  bool found = false;  // best is conflict-free
  Coloring best;
  int best_fitness = 0;
  std::int64_t generations = 0;          // generations fully executed
  std::int64_t total_ls_iterations = 0;  // summed over both children
  double seconds = 0.0;
  StopReason reason = StopReason::found;
};

EngineResult solve(const Graph& g, const EngineConfig& cfg);

// Parent update rule, exposed for tests: the child replaces the parent
// when strictly fitter, otherwise with probability replace_prob. Returns
// whether it replaced. Draws from `rng` only in the non-strict case.
bool replace_parent(Coloring& parent, int& parent_fitness, Coloring child,
                    int child_fitness, double replace_prob, Rng& rng);

}  // namespace kcolor
