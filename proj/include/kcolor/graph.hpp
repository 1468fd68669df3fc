#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kcolor {

// Immutable undirected simple graph over dense 0-based vertex ids.
// Neighbor lists are sorted. For graphs up to kMatrixLimit vertices a
// byte adjacency matrix backs O(1) edge queries; larger graphs fall back
// to binary search in the neighbor list.
class Graph {
 public:
  static constexpr int kMatrixLimit = 4096;

  Graph() = default;

  // Builds the graph from an edge list. Parallel edges (in either
  // orientation) collapse to a single undirected edge. Self loops and
  // out-of-range endpoints are rejected.
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list,
        std::string name = "");

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return edge_count_; }
  const std::string& name() const { return name_; }

  // Fraction of vertex pairs joined by an edge; 0 for n < 2.
  double density() const;

  std::span<const int> neighbors(int v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;

  bool has_edge(int u, int v) const;

  // Every edge once as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  std::int64_t edge_count_ = 0;
  std::string name_;
  std::vector<int> adjacency_;        // concatenated sorted neighbor lists
  std::vector<int> offsets_;          // n_ + 1 offsets into adjacency_
  std::vector<std::uint8_t> matrix_;  // n_ * n_ bytes; empty when n_ > limit
};

// Erdos-Renyi G(n, d): each unordered pair is an edge with probability d.
Graph random_graph(int n, double density, std::uint64_t seed);

}  // namespace kcolor
