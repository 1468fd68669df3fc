#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "kcolor/coloring.hpp"
#include "kcolor/graph.hpp"
#include "kcolor/rng.hpp"

namespace kcolor {

struct TabuColParams {
  std::int64_t max_iters = 0;  // iteration budget
  int tenure_span = 10;        // A: uniform tenure part, drawn from [0, A]
  double tenure_alpha = 0.6;   // weight of the conflicting-vertex count
  std::uint64_t seed = 0;
};

struct TabuColResult {
  Coloring best;
  int best_fitness = 0;
  std::int64_t iters_used = 0;
};

// Tabu search over complete k-colorings. One move recolors a single
// conflicting vertex; the reverse assignment becomes tabu for
// uniform(0, A) + floor(alpha * |conflicting|) iterations, evaluated on
// the post-move state. A tabu move is still admitted when it would beat
// the best fitness seen so far (strict aspiration). Ties between best
// allowed moves break uniformly at random - the only stochastic choice.
//
// Fitness deltas come from an incremental n x k table of neighbor color
// counts, updated in O(degree) per move.
class TabuSearch {
 public:
  struct Move {
    int vertex = -1;
    int color = -1;
    int delta = 0;
  };

  // Called after every applied move; used for tracing and snapshots.
  using Observer = std::function<void(const TabuSearch&)>;

  TabuSearch(const Graph& g, Coloring start, const TabuColParams& params);

  // Runs until conflict-free or the budget is exhausted; returns the best
  // coloring encountered (which may be the start). A zero-conflict start
  // returns immediately with zero iterations used.
  TabuColResult run();

  // One iteration: select and apply a move. False when no move exists
  // (zero conflicts, or k < 2).
  bool step();

  // The uniformly random best allowed move for the next iteration.
  // Consumes the search's random stream on ties.
  Move select_move();

  // Recolors `vertex`, updates the incremental tables in O(degree), marks
  // the reverse move tabu and advances the iteration counter.
  void apply_move(int vertex, int color);

  void set_observer(Observer obs) { observer_ = std::move(obs); }

  const Graph& graph() const { return g_; }
  int k() const { return k_; }
  std::int64_t iteration() const { return iteration_; }
  int conflict_count() const { return conflict_count_; }
  int best_fitness() const { return best_fitness_; }
  Coloring coloring() const { return {k_, colors_}; }
  Coloring best_coloring() const { return {k_, best_colors_}; }
  std::span<const int> conflicting_vertices() const { return conflicting_; }

  // Change in conflict count if `vertex` moved to `color` (0 for its
  // current color).
  int delta(int vertex, int color) const {
    const std::int32_t* row = &gamma_[static_cast<std::size_t>(vertex) * k_];
    return row[color] - row[colors_[vertex]];
  }

  // Last iteration for which (vertex, color) stays tabu; 0 if never set.
  std::int64_t tabu_until(int vertex, int color) const {
    return tabu_until_[static_cast<std::size_t>(vertex) * k_ + color];
  }
  // Tabu status as the next select_move() will see it.
  bool is_tabu(int vertex, int color) const {
    return tabu_until(vertex, color) >= iteration_ + 1;
  }

  // Test hook: forces a tabu entry without applying a move.
  void force_tabu(int vertex, int color, std::int64_t until) {
    tabu_until_[static_cast<std::size_t>(vertex) * k_ + color] = until;
  }

  // uniform(0, A) + floor(alpha * |conflicting|); consumes the random
  // stream. Exposed so tests can reproduce the draw sequence.
  int draw_tenure();

 private:
  void add_conflicting(int v);
  void drop_conflicting(int v);

  const Graph& g_;
  TabuColParams params_;
  Rng rng_;
  int k_ = 0;
  std::int64_t iteration_ = 0;
  int conflict_count_ = 0;
  int best_fitness_ = 0;
  std::vector<int> colors_;
  std::vector<int> best_colors_;
  std::vector<std::int32_t> gamma_;  // n x k neighbor color counts
  std::vector<std::int64_t> tabu_until_;
  std::vector<int> conflicting_;     // vertices on >= 1 mono edge
  std::vector<int> conflict_pos_;    // position in conflicting_, -1 if out
  Observer observer_;
};

// Convenience wrapper: construct, run, return.
TabuColResult tabucol(const Graph& g, Coloring start,
                      const TabuColParams& params);

}  // namespace kcolor
