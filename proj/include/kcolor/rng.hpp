#pragma once

#include <cstdint>
#include <random>

namespace kcolor {

// splitmix64 finalizer; spreads an arbitrary 64-bit value.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a base seed and stream indices.
// Every child search, crossover and batch run gets its own stream, so
// results do not depend on thread scheduling.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0) {
  return mix64(mix64(base ^ mix64(a)) ^ mix64(b ^ 0x6a09e667f3bcc908ULL));
}

// Seeded random source used by all stochastic components.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(mix64(seed)) {}

  std::uint64_t next() { return gen_(); }

  // Uniform integer in [lo, hi], both bounds inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() %
                                 static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Uniform in [0, 1).
  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  // True with probability 1/n (always true for n <= 1); reservoir helper.
  bool one_in(int n) {
    return n <= 1 || next() % static_cast<std::uint64_t>(n) == 0;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace kcolor
