#include "kcolor/tabucol.hpp"

#include <limits>
#include <stdexcept>

namespace kcolor {

namespace {

constexpr std::int32_t kRowSentinel = std::numeric_limits<std::int32_t>::max();

// Plain min reduction; compiles to vectorized code at -O3.
inline std::int32_t row_min(const std::int32_t* row, int k) {
  std::int32_t m = row[0];
  for (int c = 1; c < k; ++c) m = row[c] < m ? row[c] : m;
  return m;
}

}  // namespace

TabuSearch::TabuSearch(const Graph& g, Coloring start,
                       const TabuColParams& params)
    : g_(g),
      params_(params),
      rng_(params.seed),
      k_(start.k),
      colors_(std::move(start.colors)) {
  const int n = g_.vertex_count();
  if (static_cast<int>(colors_.size()) != n)
    throw std::invalid_argument("TabuSearch: coloring size does not match graph");
  if (k_ < 1) throw std::invalid_argument("TabuSearch: k must be positive");
  if (params_.max_iters < 0)
    throw std::invalid_argument("TabuSearch: negative iteration budget");
  if (params_.tenure_span < 0 || params_.tenure_alpha < 0.0)
    throw std::invalid_argument("TabuSearch: negative tenure parameters");

  gamma_.assign(static_cast<std::size_t>(n) * k_, 0);
  tabu_until_.assign(static_cast<std::size_t>(n) * k_, 0);
  conflict_pos_.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    std::int32_t* row = &gamma_[static_cast<std::size_t>(v) * k_];
    for (int u : g_.neighbors(v)) ++row[colors_[u]];
  }
  for (int v = 0; v < n; ++v) {
    int same = gamma_[static_cast<std::size_t>(v) * k_ + colors_[v]];
    if (same > 0) {
      conflict_count_ += same;
      add_conflicting(v);
    }
  }
  conflict_count_ /= 2;  // every mono edge was counted from both ends
  best_colors_ = colors_;
  best_fitness_ = conflict_count_;
}

void TabuSearch::add_conflicting(int v) {
  if (conflict_pos_[v] >= 0) return;
  conflict_pos_[v] = static_cast<int>(conflicting_.size());
  conflicting_.push_back(v);
}

void TabuSearch::drop_conflicting(int v) {
  int pos = conflict_pos_[v];
  if (pos < 0) return;
  int last = conflicting_.back();
  conflicting_[pos] = last;
  conflict_pos_[last] = pos;
  conflicting_.pop_back();
  conflict_pos_[v] = -1;
}

int TabuSearch::draw_tenure() {
  return rng_.uniform_int(0, params_.tenure_span) +
         static_cast<int>(params_.tenure_alpha *
                          static_cast<double>(conflicting_.size()));
}

TabuSearch::Move TabuSearch::select_move() {
  const std::int64_t t = iteration_ + 1;
  const int fitness_now = conflict_count_;
  Move best;
  int best_delta = std::numeric_limits<int>::max();
  int all_min = std::numeric_limits<int>::max();
  int ties = 0;

  for (int v : conflicting_) {
    std::int32_t* row = &gamma_[static_cast<std::size_t>(v) * k_];
    const int cur = colors_[v];
    const std::int32_t base = row[cur];
    // Exclude the stay-put cell so a single vectorized min bounds every
    // candidate delta of this vertex; skip the detailed scan when the
    // bound cannot tie the incumbent.
    row[cur] = kRowSentinel;
    const int dmin = static_cast<int>(row_min(row, k_)) - base;
    row[cur] = base;
    if (dmin < all_min) all_min = dmin;
    if (dmin > best_delta) continue;
    const std::int64_t* trow =
        &tabu_until_[static_cast<std::size_t>(v) * k_];
    for (int c = 0; c < k_; ++c) {
      if (c == cur) continue;
      const int d = row[c] - base;
      if (d > best_delta) continue;
      if (trow[c] >= t && fitness_now + d >= best_fitness_)
        continue;  // tabu and not aspirating
      if (d < best_delta) {
        best_delta = d;
        best = {v, c, d};
        ties = 1;
      } else if (rng_.one_in(++ties)) {
        best = {v, c, d};
      }
    }
  }
  if (best.vertex >= 0) return best;

  // Every candidate is tabu and none aspirates: take a uniformly random
  // least-delta move anyway rather than stalling.
  ties = 0;
  for (int v : conflicting_) {
    const std::int32_t* row = &gamma_[static_cast<std::size_t>(v) * k_];
    const int cur = colors_[v];
    const std::int32_t base = row[cur];
    for (int c = 0; c < k_; ++c) {
      if (c == cur) continue;
      if (row[c] - base == all_min && rng_.one_in(++ties))
        best = {v, c, all_min};
    }
  }
  return best;
}

void TabuSearch::apply_move(int vertex, int color) {
  ++iteration_;
  const int c_old = colors_[vertex];
  const std::int32_t* vrow = &gamma_[static_cast<std::size_t>(vertex) * k_];
  conflict_count_ += vrow[color] - vrow[c_old];
  for (int u : g_.neighbors(vertex)) {
    std::int32_t* urow = &gamma_[static_cast<std::size_t>(u) * k_];
    --urow[c_old];
    ++urow[color];
    const int cu = colors_[u];
    if (cu == c_old) {
      if (urow[cu] == 0) drop_conflicting(u);
    } else if (cu == color) {
      if (urow[cu] == 1) add_conflicting(u);
    }
  }
  colors_[vertex] = color;
  if (vrow[color] > 0)
    add_conflicting(vertex);
  else
    drop_conflicting(vertex);
  // Tenure is drawn on the post-move state; the reverse assignment stays
  // tabu for iterations iteration_+1 .. iteration_+tenure.
  tabu_until_[static_cast<std::size_t>(vertex) * k_ + c_old] =
      iteration_ + draw_tenure();
  if (conflict_count_ < best_fitness_) {
    best_fitness_ = conflict_count_;
    best_colors_ = colors_;
  }
  if (observer_) observer_(*this);
}

bool TabuSearch::step() {
  if (conflict_count_ == 0 || k_ < 2) return false;
  const Move m = select_move();
  apply_move(m.vertex, m.color);
  return true;
}

TabuColResult TabuSearch::run() {
  if (k_ >= 2) {
    while (conflict_count_ > 0 && iteration_ < params_.max_iters) {
      const Move m = select_move();
      apply_move(m.vertex, m.color);
    }
  }
  return {best_coloring(), best_fitness_, iteration_};
}

TabuColResult tabucol(const Graph& g, Coloring start,
                      const TabuColParams& params) {
  TabuSearch search(g, std::move(start), params);
  return search.run();
}

}  // namespace kcolor
