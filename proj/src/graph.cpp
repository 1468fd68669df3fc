#include "kcolor/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kcolor/rng.hpp"

namespace kcolor {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list,
             std::string name)
    : n_(n), name_(std::move(name)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");

  std::vector<std::pair<int, int>> norm;
  norm.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self loop");
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  edge_count_ = static_cast<std::int64_t>(norm.size());

  offsets_.assign(n_ + 1, 0);
  for (auto [u, v] : norm) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (int i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(2 * norm.size());
  std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : norm) {
    adjacency_[cursor[u]++] = v;
    adjacency_[cursor[v]++] = u;
  }
  // norm is sorted, so each list ends up sorted except for the mixed
  // appends above; restore order per vertex.
  for (int v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + offsets_[v],
              adjacency_.begin() + offsets_[v + 1]);
  }

  if (n_ <= kMatrixLimit && n_ > 0) {
    matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (auto [u, v] : norm) {
      matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
      matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
    }
  }
}

double Graph::density() const {
  if (n_ < 2) return 0.0;
  return static_cast<double>(edge_count_) /
         (static_cast<double>(n_) * (n_ - 1) / 2.0);
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::out_of_range("has_edge: vertex out of range");
  if (u == v) return false;
  if (!matrix_.empty())
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph random_graph(int n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_graph: n must be positive");
  if (density < 0.0 || density > 1.0)
    throw std::invalid_argument("random_graph: density outside [0, 1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (density >= 1.0 || rng.bernoulli(density)) edges.emplace_back(u, v);
  return Graph(n, edges, "gnp" + std::to_string(n));
}

}  // namespace kcolor
