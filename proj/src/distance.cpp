#include "kcolor/distance.hpp"

#include <limits>
#include <stdexcept>

namespace kcolor {

namespace {

// Classic potentials formulation over a square min-cost matrix, 1-based
// internal indexing. Returns per-row assigned column.
std::vector<int> hungarian_min(const std::vector<std::int64_t>& cost, int n) {
  const std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0), minv(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    minv.assign(n + 1, kInf);
    used.assign(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = -1;
      std::int64_t delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        std::int64_t cur =
            cost[static_cast<std::size_t>(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> match(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] != 0) match[p[j] - 1] = j - 1;
  return match;
}

}  // namespace

std::vector<int> solve_assignment_max(const std::vector<std::int64_t>& weight,
                                      int n) {
  if (n < 1) throw std::invalid_argument("solve_assignment_max: empty matrix");
  if (weight.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("solve_assignment_max: bad matrix size");
  std::int64_t maxw = weight[0];
  for (std::int64_t w : weight) maxw = w > maxw ? w : maxw;
  std::vector<std::int64_t> cost(weight.size());
  for (std::size_t i = 0; i < weight.size(); ++i) cost[i] = maxw - weight[i];
  return hungarian_min(cost, n);
}

int partition_distance(const Coloring& a, const Coloring& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("partition_distance: size mismatch");
  if (a.k != b.k)
    throw std::invalid_argument("partition_distance: k mismatch");
  const int n = a.size();
  const int k = a.k;
  if (n == 0) return 0;
  // Intersection sizes between a's and b's color classes.
  std::vector<std::int64_t> w(static_cast<std::size_t>(k) * k, 0);
  for (int v = 0; v < n; ++v)
    ++w[static_cast<std::size_t>(a.colors[v]) * k + b.colors[v]];
  auto match = solve_assignment_max(w, k);
  std::int64_t shared = 0;
  for (int i = 0; i < k; ++i)
    shared += w[static_cast<std::size_t>(i) * k + match[i]];
  return n - static_cast<int>(shared);
}

}  // namespace kcolor
