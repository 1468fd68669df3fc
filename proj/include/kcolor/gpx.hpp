#pragma once

#include <string>
#include <vector>

#include "kcolor/coloring.hpp"
#include "kcolor/rng.hpp"

namespace kcolor {

// Greedy partition crossover. k alternating steps transmit the largest
// remaining color class of one parent (first parent on step 1) into the
// child; transmitted vertices are withdrawn from both parents' working
// views. Vertices still unassigned after k steps get uniform random
// colors. Deliberately asymmetric: gpx(a, b) and gpx(b, a) differ.
enum class CrossoverKind { standard, randomized, imbalanced };

struct CrossoverSpec {
  CrossoverKind kind = CrossoverKind::standard;
  // randomized: integer number of leading steps that transmit a uniformly
  //   random nonempty class instead of the largest one; in [0, k].
  // imbalanced: probability that a step draws from the first parent
  //   (largest class of that parent, no alternation); in [0, 1].
  double x = 0.0;
};

// Parses "standard", "randomized:<x>" or "imbalanced:<x>".
CrossoverSpec parse_crossover_spec(const std::string& text);
std::string to_string(const CrossoverSpec& spec);

Coloring gpx(const Coloring& p1, const Coloring& p2, Rng& rng);
Coloring gpx_randomized(const Coloring& p1, const Coloring& p2,
                        int random_steps, Rng& rng);
Coloring gpx_imbalanced(const Coloring& p1, const Coloring& p2,
                        double p1_probability, Rng& rng);
Coloring crossover(const Coloring& p1, const Coloring& p2,
                   const CrossoverSpec& spec, Rng& rng);

// Instrumented run keeping the pre-completion state; used by tests and
// the crossover-distance experiment.
struct GpxTrace {
  std::vector<int> source_parent;         // per step: 0 or 1
  std::vector<std::vector<int>> classes;  // per step: transmitted vertices
  std::vector<int> leftovers;             // randomly completed at the end
  Coloring child;
};

GpxTrace gpx_traced(const Coloring& p1, const Coloring& p2,
                    const CrossoverSpec& spec, Rng& rng);

}  // namespace kcolor
