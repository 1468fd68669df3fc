// Independent reference implementations the fast code paths are checked
// against: everything here recomputes from scratch with no shared state.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "kcolor/coloring.hpp"
#include "kcolor/graph.hpp"
#include "kcolor/rng.hpp"

namespace oracle {

inline int brute_fitness(const kcolor::Graph& g, const kcolor::Coloring& c) {
  int conflicts = 0;
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) ++conflicts;
  return conflicts;
}

// Neighbor color counts, the reference for the incremental delta table.
inline std::vector<std::vector<int>> brute_gamma(const kcolor::Graph& g,
                                                 const kcolor::Coloring& c) {
  std::vector<std::vector<int>> gamma(g.vertex_count(),
                                      std::vector<int>(c.k, 0));
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : g.neighbors(v)) ++gamma[v][c.colors[u]];
  return gamma;
}

inline int brute_delta(const kcolor::Graph& g, const kcolor::Coloring& c,
                       int vertex, int color) {
  kcolor::Coloring moved = c;
  moved.colors[vertex] = color;
  return brute_fitness(g, moved) - brute_fitness(g, c);
}

inline std::vector<int> brute_conflicting(const kcolor::Graph& g,
                                          const kcolor::Coloring& c) {
  std::vector<char> hit(g.vertex_count(), 0);
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) hit[u] = hit[v] = 1;
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (hit[v]) out.push_back(v);
  return out;
}

// Exact partition distance by minimizing over every color relabeling of
// `b`; only usable for small k.
inline int permutation_distance(const kcolor::Coloring& a,
                                const kcolor::Coloring& b) {
  std::vector<int> perm(a.k);
  std::iota(perm.begin(), perm.end(), 0);
  int best = a.size();
  do {
    int moved = 0;
    for (int v = 0; v < a.size(); ++v)
      if (a.colors[v] != perm[b.colors[v]]) ++moved;
    best = std::min(best, moved);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Backtracking exact test for k-colorability; n should stay small.
inline bool colorable_rec(const kcolor::Graph& g, std::vector<int>& colors,
                          int v, int k) {
  if (v == g.vertex_count()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int u : g.neighbors(v))
      if (u < v && colors[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    colors[v] = c;
    if (colorable_rec(g, colors, v + 1, k)) return true;
  }
  colors[v] = -1;
  return false;
}

inline bool is_k_colorable(const kcolor::Graph& g, int k) {
  std::vector<int> colors(g.vertex_count(), -1);
  return colorable_rec(g, colors, 0, k);
}

// --- small fixture graphs -------------------------------------------------

inline kcolor::Graph make_path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return kcolor::Graph(n, e, "path" + std::to_string(n));
}

inline kcolor::Graph make_cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return kcolor::Graph(n, e, "cycle" + std::to_string(n));
}

inline kcolor::Graph make_complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return kcolor::Graph(n, e, "k" + std::to_string(n));
}

// Outer 5-cycle, inner pentagram, spokes; chromatic number 3.
inline kcolor::Graph make_petersen() {
  std::vector<std::pair<int, int>> e = {
      {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},   // outer cycle
      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},   // inner pentagram
      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};  // spokes
  return kcolor::Graph(10, e, "petersen");
}

// Random bipartite graph: sides [0, left) and [left, left+right).
inline kcolor::Graph make_bipartite(int left, int right, double density,
                                    std::uint64_t seed) {
  kcolor::Rng rng(seed);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < left; ++u)
    for (int v = 0; v < right; ++v)
      if (rng.bernoulli(density)) e.emplace_back(u, left + v);
  return kcolor::Graph(left + right, e, "bipartite");
}

inline kcolor::Coloring random_coloring_of(int n, int k, std::uint64_t seed) {
  kcolor::Rng rng(seed);
  kcolor::Coloring c{k, std::vector<int>(n)};
  for (int v = 0; v < n; ++v) c.colors[v] = rng.uniform_int(0, k - 1);
  return c;
}

}  // namespace oracle
