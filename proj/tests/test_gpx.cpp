#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "kcolor/distance.hpp"
#include "kcolor/gpx.hpp"
#include "support/oracles.hpp"

using namespace kcolor;

namespace {

// Child classes must be complete, in range, and each transmitted class a
// subset of one class of the parent it came from.
void check_child_validity(const Coloring& p1, const Coloring& p2,
                          const GpxTrace& t) {
  const int n = p1.size();
  const int k = p1.k;
  REQUIRE(t.child.size() == n);
  REQUIRE(t.child.k == k);
  for (int v = 0; v < n; ++v) {
    CHECK(t.child.colors[v] >= 0);
    CHECK(t.child.colors[v] < k);
  }
  REQUIRE(t.classes.size() == static_cast<std::size_t>(k));
  REQUIRE(t.source_parent.size() == static_cast<std::size_t>(k));
  std::vector<char> seen(n, 0);
  for (int step = 0; step < k; ++step) {
    const Coloring& src = t.source_parent[step] == 0 ? p1 : p2;
    int src_color = -1;
    for (int v : t.classes[step]) {
      CHECK(t.child.colors[v] == step);
      CHECK_FALSE(seen[v]);  // each vertex transmitted at most once
      seen[v] = 1;
      if (src_color == -1) src_color = src.colors[v];
      CHECK(src.colors[v] == src_color);  // subset of one source class
    }
  }
  for (int v : t.leftovers) {
    CHECK_FALSE(seen[v]);
    seen[v] = 1;
  }
  CHECK(std::count(seen.begin(), seen.end(), 1) == n);
}

}  // namespace

TEST_CASE("hand-traced example transmits the expected classes") {
  // p1 = {0,1,2 | 3,4,5,6 | 7,8,9}, p2 = {2,3,4,6 | 0,5,8 | 1,7,9}.
  // Step 1 takes p1's {3,4,5,6}; step 2 takes what is left of p2's
  // largest, {1,7,9}; step 3 takes {0,2} from p1; vertex 8 is leftover.
  Coloring p1{3, {0, 0, 0, 1, 1, 1, 1, 2, 2, 2}};
  Coloring p2{3, {1, 2, 0, 0, 0, 1, 0, 2, 1, 2}};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    auto t = gpx_traced(p1, p2, {CrossoverKind::standard, 0.0}, rng);
    CHECK(t.source_parent == std::vector<int>{0, 1, 0});
    CHECK(t.classes[0] == std::vector<int>{3, 4, 5, 6});
    CHECK(t.classes[1] == std::vector<int>{1, 7, 9});
    CHECK(t.classes[2] == std::vector<int>{0, 2});
    CHECK(t.leftovers == std::vector<int>{8});
    CHECK(t.child.colors[8] >= 0);
    CHECK(t.child.colors[8] < 3);
    check_child_validity(p1, p2, t);
  }
}

TEST_CASE("crossing a parent with itself reproduces its partition") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const int n = 5 + static_cast<int>(s) * 3;
    const int k = 2 + static_cast<int>(s % 5);
    auto p = oracle::random_coloring_of(n, k, 700 + s);
    Rng rng(s);
    auto child = gpx(p, p, rng);
    CHECK(partition_distance(p, child) == 0);
  }
}

TEST_CASE("children are valid over random parents and all variants") {
  Rng meta(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = meta.uniform_int(2, 60);
    const int k = meta.uniform_int(1, 8);
    auto p1 = oracle::random_coloring_of(n, k, 3000 + trial);
    auto p2 = oracle::random_coloring_of(n, k, 4000 + trial);
    CrossoverSpec spec;
    switch (trial % 3) {
      case 0: spec = {CrossoverKind::standard, 0.0}; break;
      case 1:
        spec = {CrossoverKind::randomized,
                static_cast<double>(meta.uniform_int(0, k))};
        break;
      case 2:
        spec = {CrossoverKind::imbalanced, meta.uniform_int(0, 10) / 10.0};
        break;
    }
    Rng rng(5000 + trial);
    auto t = gpx_traced(p1, p2, spec, rng);
    check_child_validity(p1, p2, t);
  }
}

TEST_CASE("standard alternation starts from the first parent") {
  auto p1 = oracle::random_coloring_of(30, 4, 81);
  auto p2 = oracle::random_coloring_of(30, 4, 82);
  Rng rng(83);
  auto t = gpx_traced(p1, p2, {CrossoverKind::standard, 0.0}, rng);
  CHECK(t.source_parent == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("zero random steps is byte-identical to the standard crossover") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto p1 = oracle::random_coloring_of(40, 5, 900 + s);
    auto p2 = oracle::random_coloring_of(40, 5, 950 + s);
    Rng r1(s), r2(s);
    auto standard = gpx(p1, p2, r1);
    auto randomized0 = gpx_randomized(p1, p2, 0, r2);
    CHECK(standard.colors == randomized0.colors);
    CHECK(r1.next() == r2.next());  // identical stream consumption
  }
}

TEST_CASE("imbalance probability 1 draws only from the first parent") {
  auto p1 = oracle::random_coloring_of(30, 4, 61);
  auto p2 = oracle::random_coloring_of(30, 4, 62);
  Rng rng(63);
  auto t1 = gpx_traced(p1, p2, {CrossoverKind::imbalanced, 1.0}, rng);
  CHECK(t1.source_parent == std::vector<int>{0, 0, 0, 0});
  auto t0 = gpx_traced(p1, p2, {CrossoverKind::imbalanced, 0.0}, rng);
  CHECK(t0.source_parent == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("the crossover is asymmetric in its arguments") {
  bool differs = false;
  for (std::uint64_t s = 0; s < 10 && !differs; ++s) {
    auto a = oracle::random_coloring_of(25, 3, 7100 + s);
    auto b = oracle::random_coloring_of(25, 3, 7200 + s);
    Rng r1(1), r2(1);
    differs = partition_distance(gpx(a, b, r1), gpx(b, a, r2)) > 0;
  }
  CHECK(differs);
}

TEST_CASE("randomized steps still transmit only whole remaining classes") {
  Rng meta(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 4;
    auto p1 = oracle::random_coloring_of(30, k, 8100 + trial);
    auto p2 = oracle::random_coloring_of(30, k, 8200 + trial);
    Rng rng(trial);
    auto t = gpx_traced(p1, p2, {CrossoverKind::randomized, 4.0}, rng);
    check_child_validity(p1, p2, t);
  }
}

TEST_CASE("parent validation") {
  Coloring a{2, {0, 1, 0}};
  Coloring size_mismatch{2, {0, 1}};
  Coloring k_mismatch{3, {0, 1, 2}};
  Rng rng(1);
  CHECK_THROWS_AS(gpx(a, size_mismatch, rng), std::invalid_argument);
  CHECK_THROWS_AS(gpx(a, k_mismatch, rng), std::invalid_argument);
  CHECK_THROWS_AS(gpx_randomized(a, a, 3, rng), std::invalid_argument);
  CHECK_THROWS_AS(gpx_randomized(a, a, -1, rng), std::invalid_argument);
  CHECK_THROWS_AS(gpx_imbalanced(a, a, 1.5, rng), std::invalid_argument);
}

TEST_CASE("crossover spec parsing") {
  auto std_spec = parse_crossover_spec("standard");
  CHECK(std_spec.kind == CrossoverKind::standard);
  auto rnd = parse_crossover_spec("randomized:3");
  CHECK(rnd.kind == CrossoverKind::randomized);
  CHECK(rnd.x == 3.0);
  auto imb = parse_crossover_spec("imbalanced:0.4");
  CHECK(imb.kind == CrossoverKind::imbalanced);
  CHECK(imb.x == 0.4);
  CHECK(to_string(rnd) == "randomized:3");
  CHECK(to_string(imb) == "imbalanced:0.4");
  CHECK_THROWS_AS(parse_crossover_spec("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(parse_crossover_spec("randomized:1.5"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_crossover_spec("randomized:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_crossover_spec("imbalanced:1.5"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_crossover_spec("imbalanced:x"),
                  std::invalid_argument);
}
