#include "kcolor/engine.hpp"

#include <chrono>
#include <future>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "kcolor/tabucol.hpp"

namespace kcolor {

namespace {

// Distinct stream salts so every random decision has its own derived seed.
constexpr std::uint64_t kSaltInit = 101;
constexpr std::uint64_t kSaltElite = 103;
constexpr std::uint64_t kSaltReplace = 105;
constexpr std::uint64_t kSaltCross = 107;
constexpr std::uint64_t kSaltLs = 109;

struct EliteSlot {
  bool set = false;
  Coloring coloring;
  int fitness = std::numeric_limits<int>::max();
};

struct ChildOut {
  Coloring coloring;
  int fitness = 0;
  std::int64_t iters = 0;
  std::string ls_rows;
};

void validate(const EngineConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("engine: k must be positive");
  if (cfg.iter_tc < 0) throw std::invalid_argument("engine: negative iter_tc");
  if (cfg.iter_cycle < 1)
    throw std::invalid_argument("engine: iter_cycle must be positive");
  if (cfg.replacement_prob < 0.0 || cfg.replacement_prob > 1.0)
    throw std::invalid_argument("engine: replacement_prob outside [0, 1]");
  if (cfg.threads != 1 && cfg.threads != 2)
    throw std::invalid_argument("engine: threads must be 1 or 2");
  if (cfg.max_generations < 0 || cfg.max_seconds < 0.0 ||
      cfg.max_ls_iterations < 0)
    throw std::invalid_argument("engine: negative budget");
}

}  // namespace

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::found: return "found";
    case StopReason::generation_budget: return "generation-budget";
    case StopReason::time_budget: return "time-budget";
    case StopReason::iteration_budget: return "iteration-budget";
  }
  return "unknown";
}

bool replace_parent(Coloring& parent, int& parent_fitness, Coloring child,
                    int child_fitness, double replace_prob, Rng& rng) {
  bool take = child_fitness < parent_fitness;
  if (!take) take = rng.bernoulli(replace_prob);
  if (take) {
    parent = std::move(child);
    parent_fitness = child_fitness;
  }
  return take;
}

EngineResult solve(const Graph& g, const EngineConfig& cfg) {
  validate(cfg);
  const auto t_start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t_start)
        .count();
  };

  Coloring parent[2];
  int parent_fitness[2];
  for (int i = 0; i < 2; ++i) {
    parent[i] = random_coloring(g, cfg.k, derive_seed(cfg.seed, kSaltInit, i));
    parent_fitness[i] = fitness(g, parent[i]);
  }

  EngineResult result;
  const int first = parent_fitness[0] <= parent_fitness[1] ? 0 : 1;
  result.best = parent[first];
  result.best_fitness = parent_fitness[first];

  std::uint64_t elite_draws = 0;
  auto fresh_elite = [&]() -> EliteSlot {
    if (!cfg.random_elite_reset) return {};
    Coloring c =
        random_coloring(g, cfg.k, derive_seed(cfg.seed, kSaltElite, elite_draws++));
    int f = fitness(g, c);
    return {true, std::move(c), f};
  };
  EliteSlot elite1 = fresh_elite();
  EliteSlot elite2 = fresh_elite();
  Rng replace_rng(derive_seed(cfg.seed, kSaltReplace));

  if (cfg.trace)
    *cfg.trace << "generation,fitness_c1,fitness_c2,fitness_elite1,"
                  "best_fitness,total_ls_iterations\n";
  if (cfg.ls_trace)
    *cfg.ls_trace << "generation,child,iteration,fitness,best_fitness\n";

  if (result.best_fitness == 0) {
    result.found = true;
    result.seconds = elapsed();
    return result;
  }

  auto make_child = [&](std::int64_t gen, int i) {
    const std::uint64_t stream = static_cast<std::uint64_t>(gen) * 2 + i;
    Rng cross_rng(derive_seed(cfg.seed, stream, kSaltCross));
    Coloring start = crossover(parent[i], parent[i ^ 1], cfg.crossover,
                               cross_rng);
    TabuColParams tp{cfg.iter_tc, cfg.tenure_span, cfg.tenure_alpha,
                     derive_seed(cfg.seed, stream, kSaltLs)};
    TabuSearch search(g, std::move(start), tp);
    ChildOut out;
    if (cfg.ls_trace) {
      search.set_observer([&out, gen, i](const TabuSearch& s) {
        out.ls_rows += std::to_string(gen);
        out.ls_rows += i == 0 ? ",1," : ",2,";
        out.ls_rows += std::to_string(s.iteration());
        out.ls_rows += ',';
        out.ls_rows += std::to_string(s.conflict_count());
        out.ls_rows += ',';
        out.ls_rows += std::to_string(s.best_fitness());
        out.ls_rows += '\n';
      });
    }
    TabuColResult res = search.run();
    out.coloring = std::move(res.best);
    out.fitness = res.best_fitness;
    out.iters = res.iters_used;
    return out;
  };

  for (std::int64_t gen = 1;; ++gen) {
    if (cfg.max_generations > 0 && gen > cfg.max_generations) {
      result.reason = StopReason::generation_budget;
      break;
    }
    if (cfg.max_ls_iterations > 0 &&
        result.total_ls_iterations >= cfg.max_ls_iterations) {
      result.reason = StopReason::iteration_budget;
      break;
    }
    if (cfg.max_seconds > 0.0 && elapsed() >= cfg.max_seconds) {
      result.reason = StopReason::time_budget;
      break;
    }

    ChildOut child[2];
    if (cfg.threads == 2) {
      auto second =
          std::async(std::launch::async, make_child, gen, 1);
      child[0] = make_child(gen, 0);
      child[1] = second.get();
    } else {
      child[0] = make_child(gen, 0);
      child[1] = make_child(gen, 1);
    }
    result.total_ls_iterations += child[0].iters + child[1].iters;
    result.generations = gen;

    for (int i = 0; i < 2; ++i) {
      if (child[i].fitness < elite1.fitness)
        elite1 = {true, child[i].coloring, child[i].fitness};
      if (child[i].fitness < result.best_fitness) {
        result.best_fitness = child[i].fitness;
        result.best = child[i].coloring;
      }
    }
    for (int i = 0; i < 2; ++i)
      replace_parent(parent[i], parent_fitness[i], std::move(child[i].coloring),
                     child[i].fitness, cfg.replacement_prob, replace_rng);

    if (cfg.trace)
      *cfg.trace << gen << ',' << child[0].fitness << ',' << child[1].fitness
                 << ',' << (elite1.set ? elite1.fitness : -1) << ','
                 << result.best_fitness << ',' << result.total_ls_iterations
                 << '\n';
    if (cfg.ls_trace) *cfg.ls_trace << child[0].ls_rows << child[1].ls_rows;

    if (result.best_fitness == 0) {
      result.found = true;
      result.reason = StopReason::found;
      break;
    }

    // End-of-cycle rotation: reinject the previous cycle's elite, shift
    // the current one back, start the new cycle from a fresh slot.
    if (cfg.use_elites && gen % cfg.iter_cycle == 0) {
      if (elite2.set) {
        parent[0] = elite2.coloring;
        parent_fitness[0] = elite2.fitness;
      }
      elite2 = std::move(elite1);
      elite1 = fresh_elite();
    }
  }

  result.seconds = elapsed();
  return result;
}

}  // namespace kcolor
