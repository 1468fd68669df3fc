#include "kcolor/instance_gen.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kcolor/rng.hpp"

namespace kcolor {

Graph planted_partition_graph(int n, int parts, std::int64_t edge_total,
                              std::uint64_t seed, std::string name) {
  if (parts < 2 || n < parts || n % parts != 0)
    throw std::invalid_argument(
        "planted_partition_graph: n must be a positive multiple of parts");
  const int size = n / parts;
  const std::int64_t pairs =
      static_cast<std::int64_t>(parts) * (parts - 1) / 2;
  const std::int64_t slots = static_cast<std::int64_t>(size) * size;
  if (edge_total < 0 || edge_total > pairs * slots)
    throw std::invalid_argument(
        "planted_partition_graph: edge_total exceeds cross-pair capacity");

  const std::int64_t quota = edge_total / pairs;
  std::int64_t remainder = edge_total % pairs;

  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(edge_total));
  std::vector<int> slot_ids(static_cast<std::size_t>(slots));
  for (int a = 0; a < parts; ++a) {
    for (int b = a + 1; b < parts; ++b) {
      std::int64_t want = quota + (remainder > 0 ? 1 : 0);
      if (remainder > 0) --remainder;
      // Partial Fisher-Yates over the size x size cross pairs picks
      // `want` of them uniformly without replacement.
      std::iota(slot_ids.begin(), slot_ids.end(), 0);
      for (std::int64_t i = 0; i < want; ++i) {
        const int j =
            rng.uniform_int(static_cast<int>(i), static_cast<int>(slots - 1));
        std::swap(slot_ids[i], slot_ids[j]);
        const int u = a * size + slot_ids[i] / size;
        const int v = b * size + slot_ids[i] % size;
        edges.emplace_back(u, v);
      }
    }
  }
  if (name.empty())
    name = "flat" + std::to_string(n) + "_" + std::to_string(parts);
  return Graph(n, edges, std::move(name));
}

}  // namespace kcolor
