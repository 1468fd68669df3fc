#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kcolor/graph.hpp"

namespace kcolor {

// Complete assignment of one of k colors (0-based) to every vertex.
// Legality is a property, not an invariant: the search works on complete,
// possibly conflicting colorings throughout.
struct Coloring {
  int k = 0;
  std::vector<int> colors;

  int size() const { return static_cast<int>(colors.size()); }

  // Vertex lists per color; empty classes are legitimate.
  std::vector<std::vector<int>> classes() const;
};

// Every vertex gets an independent uniform color in [0, k).
Coloring random_coloring(const Graph& g, int k, std::uint64_t seed);

// Number of monochromatic edges (the conflict count the search minimizes).
int fitness(const Graph& g, const Coloring& c);
bool is_legal(const Graph& g, const Coloring& c);

// Exact conflict bookkeeping recomputed from scratch; the oracle the
// incremental search state is checked against.
struct ConflictState {
  int conflict_count = 0;
  std::vector<int> conflicting_vertices;  // sorted; endpoints of mono edges

  static ConflictState compute(const Graph& g, const Coloring& c);
};

// Coloring file: `c` comments, one `s k <k> fitness <f>` header, then one
// `v <vertex> <color>` line per vertex, both 1-based.
void write_coloring(std::ostream& out, const Graph& g, const Coloring& c);
Coloring parse_coloring(std::istream& in, int expected_n);
Coloring load_coloring_file(const std::string& path, int expected_n);

}  // namespace kcolor
