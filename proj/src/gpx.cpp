#include "kcolor/gpx.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kcolor {

namespace {

void check_parents(const Coloring& p1, const Coloring& p2) {
  if (p1.size() != p2.size())
    throw std::invalid_argument("gpx: parent size mismatch");
  if (p1.k != p2.k || p1.k < 1)
    throw std::invalid_argument("gpx: parent k mismatch");
}

void check_spec(const CrossoverSpec& spec, int k) {
  if (spec.kind == CrossoverKind::randomized) {
    if (spec.x < 0.0 || spec.x > k ||
        spec.x != std::floor(spec.x))
      throw std::invalid_argument(
          "gpx: randomized step count must be an integer in [0, k]");
  } else if (spec.kind == CrossoverKind::imbalanced) {
    if (spec.x < 0.0 || spec.x > 1.0)
      throw std::invalid_argument(
          "gpx: imbalance probability outside [0, 1]");
  }
}

Coloring gpx_run(const Coloring& p1, const Coloring& p2,
                 const CrossoverSpec& spec, Rng& rng, GpxTrace* trace) {
  check_parents(p1, p2);
  const int n = p1.size();
  const int k = p1.k;
  check_spec(spec, k);

  std::vector<std::vector<int>> cls[2] = {p1.classes(), p2.classes()};
  std::vector<int> live[2] = {std::vector<int>(k), std::vector<int>(k)};
  for (int side = 0; side < 2; ++side)
    for (int c = 0; c < k; ++c)
      live[side][c] = static_cast<int>(cls[side][c].size());

  std::vector<char> taken(n, 0);
  Coloring child{k, std::vector<int>(n, -1)};
  const int random_steps = spec.kind == CrossoverKind::randomized
                               ? static_cast<int>(spec.x)
                               : 0;

  for (int step = 0; step < k; ++step) {
    int side;
    if (spec.kind == CrossoverKind::imbalanced)
      side = rng.bernoulli(spec.x) ? 0 : 1;
    else
      side = step % 2;

    int chosen = -1;
    if (step < random_steps) {
      // Uniform among the nonempty classes of this parent.
      int count = 0;
      for (int c = 0; c < k; ++c)
        if (live[side][c] > 0 && rng.one_in(++count)) chosen = c;
      if (chosen < 0) {
        // Everything already transmitted: any (empty) class will do.
        count = 0;
        for (int c = 0; c < k; ++c)
          if (rng.one_in(++count)) chosen = c;
      }
    } else {
      // Largest remaining class, uniform among ties. May be empty once
      // both parents are exhausted; the child class then stays empty.
      int best_size = -1, ties = 0;
      for (int c = 0; c < k; ++c) {
        const int s = live[side][c];
        if (s > best_size) {
          best_size = s;
          chosen = c;
          ties = 1;
        } else if (s == best_size && rng.one_in(++ties)) {
          chosen = c;
        }
      }
    }

    std::vector<int> transmitted;
    for (int v : cls[side][chosen]) {
      if (taken[v]) continue;
      taken[v] = 1;
      child.colors[v] = step;
      --live[0][p1.colors[v]];
      --live[1][p2.colors[v]];
      if (trace) transmitted.push_back(v);
    }
    if (trace) {
      trace->source_parent.push_back(side);
      trace->classes.push_back(std::move(transmitted));
    }
  }

  for (int v = 0; v < n; ++v) {
    if (taken[v]) continue;
    child.colors[v] = rng.uniform_int(0, k - 1);
    if (trace) trace->leftovers.push_back(v);
  }
  return child;
}

}  // namespace

CrossoverSpec parse_crossover_spec(const std::string& text) {
  if (text == "standard") return {CrossoverKind::standard, 0.0};
  auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  if (colon != std::string::npos &&
      (head == "randomized" || head == "imbalanced")) {
    const std::string arg = text.substr(colon + 1);
    std::size_t pos = 0;
    double x = 0.0;
    try {
      x = std::stod(arg, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != arg.size() || arg.empty())
      throw std::invalid_argument("crossover: bad parameter '" + arg + "'");
    CrossoverSpec spec{head == "randomized" ? CrossoverKind::randomized
                                            : CrossoverKind::imbalanced,
                       x};
    if (spec.kind == CrossoverKind::randomized &&
        (x < 0.0 || x != std::floor(x)))
      throw std::invalid_argument(
          "crossover: randomized step count must be a nonnegative integer");
    if (spec.kind == CrossoverKind::imbalanced && (x < 0.0 || x > 1.0))
      throw std::invalid_argument(
          "crossover: imbalance probability outside [0, 1]");
    return spec;
  }
  throw std::invalid_argument(
      "crossover: expected 'standard', 'randomized:<x>' or 'imbalanced:<x>', "
      "got '" + text + "'");
}

std::string to_string(const CrossoverSpec& spec) {
  std::ostringstream out;
  switch (spec.kind) {
    case CrossoverKind::standard:
      out << "standard";
      break;
    case CrossoverKind::randomized:
      out << "randomized:" << static_cast<int>(spec.x);
      break;
    case CrossoverKind::imbalanced:
      out << "imbalanced:" << spec.x;
      break;
  }
  return out.str();
}

Coloring gpx(const Coloring& p1, const Coloring& p2, Rng& rng) {
  return gpx_run(p1, p2, {CrossoverKind::standard, 0.0}, rng, nullptr);
}

Coloring gpx_randomized(const Coloring& p1, const Coloring& p2,
                        int random_steps, Rng& rng) {
  return gpx_run(p1, p2,
                 {CrossoverKind::randomized,
                  static_cast<double>(random_steps)},
                 rng, nullptr);
}

Coloring gpx_imbalanced(const Coloring& p1, const Coloring& p2,
                        double p1_probability, Rng& rng) {
  return gpx_run(p1, p2, {CrossoverKind::imbalanced, p1_probability}, rng,
                 nullptr);
}

Coloring crossover(const Coloring& p1, const Coloring& p2,
                   const CrossoverSpec& spec, Rng& rng) {
  return gpx_run(p1, p2, spec, rng, nullptr);
}

GpxTrace gpx_traced(const Coloring& p1, const Coloring& p2,
                    const CrossoverSpec& spec, Rng& rng) {
  GpxTrace trace;
  trace.child = gpx_run(p1, p2, spec, rng, &trace);
  return trace;
}

}  // namespace kcolor
