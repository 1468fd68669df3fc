#pragma once

#include <cstdint>
#include <string>

#include "kcolor/graph.hpp"

namespace kcolor {

// Benchmark fixture generator: a balanced planted k-partite graph. The n
// vertices split into `parts` classes of equal size (n must be divisible
// by parts) and the `edge_total` edges spread across the class pairs as
// evenly as possible, each pair's edges drawn uniformly without
// replacement. The planted classes form a proper coloring, so the graph
// is `parts`-colorable by construction. Stands in for the flat-style
// benchmark families when the published files are unavailable.
Graph planted_partition_graph(int n, int parts, std::int64_t edge_total,
                              std::uint64_t seed, std::string name = "");

}  // namespace kcolor
