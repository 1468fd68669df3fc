#pragma once

#include <cstdint>
#include <vector>

#include "kcolor/coloring.hpp"

namespace kcolor {

// Exact square assignment solver (Hungarian method with potentials,
// O(n^3)). `weight` is row-major n x n; returns per-row assigned column,
// maximizing total weight.
std::vector<int> solve_assignment_max(const std::vector<std::int64_t>& weight,
                                      int n);

// Minimum number of single-vertex recolorings turning `a` into `b` modulo
// any relabeling of the colors: n minus the maximum-weight matching between
// the two families of color classes. Symmetric; zero iff the partitions
// into classes coincide.
int partition_distance(const Coloring& a, const Coloring& b);

}  // namespace kcolor
