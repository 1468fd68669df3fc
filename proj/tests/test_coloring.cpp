#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "kcolor/coloring.hpp"
#include "kcolor/dimacs.hpp"
#include "support/oracles.hpp"

using namespace kcolor;

TEST_CASE("fitness agrees with the brute-force count on random inputs") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Graph g = random_graph(40, 0.3, 1000 + s);
    Coloring c = random_coloring(g, 4, 2000 + s);
    CHECK(fitness(g, c) == oracle::brute_fitness(g, c));
  }
}

TEST_CASE("hand-checked fitness values") {
  auto p3 = oracle::make_path(3);
  CHECK(fitness(p3, {2, {0, 0, 1}}) == 1);
  CHECK(fitness(p3, {2, {0, 1, 0}}) == 0);
  CHECK(is_legal(p3, {2, {0, 1, 0}}));
  auto k4 = oracle::make_complete(4);
  CHECK(fitness(k4, {1, {0, 0, 0, 0}}) == 6);  // every edge monochromatic
  CHECK(fitness(k4, {2, {0, 0, 1, 1}}) == 2);
}

TEST_CASE("fitness validates dimensions") {
  auto p3 = oracle::make_path(3);
  CHECK_THROWS_AS(fitness(p3, {2, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(fitness(p3, {0, {0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("random_coloring is complete, in range and seed-deterministic") {
  Graph g = random_graph(50, 0.2, 7);
  Coloring a = random_coloring(g, 5, 11);
  Coloring b = random_coloring(g, 5, 11);
  Coloring c = random_coloring(g, 5, 12);
  CHECK(a.size() == 50);
  for (int v = 0; v < a.size(); ++v) {
    CHECK(a.colors[v] >= 0);
    CHECK(a.colors[v] < 5);
  }
  CHECK(a.colors == b.colors);
  CHECK(a.colors != c.colors);
}

TEST_CASE("random_coloring fitness is binomial in expectation") {
  // Edge indicators are pairwise independent under a uniform coloring, so
  // the conflict count over many samples has mean m/k and the binomial
  // variance; check the sample mean within 5 sigma of its own stderr.
  Graph g = random_graph(40, 0.4, 31);
  const double m = static_cast<double>(g.edge_count());
  const int k = 4;
  const int samples = 2000;
  double sum = 0;
  for (int s = 0; s < samples; ++s)
    sum += fitness(g, random_coloring(g, k, 5000 + s));
  const double mean = sum / samples;
  const double expect = m / k;
  const double sigma_mean =
      std::sqrt(m * (1.0 / k) * (1 - 1.0 / k) / samples);
  CHECK(std::abs(mean - expect) < 5 * sigma_mean);
}

TEST_CASE("ConflictState matches the oracle") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Graph g = random_graph(30, 0.3, 300 + s);
    Coloring c = random_coloring(g, 3, 400 + s);
    auto st = ConflictState::compute(g, c);
    CHECK(st.conflict_count == oracle::brute_fitness(g, c));
    CHECK(st.conflicting_vertices == oracle::brute_conflicting(g, c));
  }
}

TEST_CASE("classes split the vertices by color") {
  Coloring c{3, {0, 2, 0, 1, 2}};
  auto cls = c.classes();
  REQUIRE(cls.size() == 3);
  CHECK(cls[0] == std::vector<int>{0, 2});
  CHECK(cls[1] == std::vector<int>{3});
  CHECK(cls[2] == std::vector<int>{1, 4});
}

TEST_CASE("coloring file round trip") {
  Graph g = random_graph(25, 0.3, 17);
  Coloring c = random_coloring(g, 4, 18);
  std::stringstream buf;
  write_coloring(buf, g, c);
  Coloring back = parse_coloring(buf, g.vertex_count());
  CHECK(back.k == c.k);
  CHECK(back.colors == c.colors);
}

TEST_CASE("coloring parse errors") {
  auto check_error = [](const char* text, const char* needle) {
    std::istringstream in(text);
    try {
      parse_coloring(in, 3);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  check_error("s k 2 fitness 0\nv 1 1\nv 2 1\n", "vertex 3 missing");
  check_error("s k 2 fitness 0\nv 1 1\nv 1 2\nv 2 1\nv 3 1\n",
              "vertex 1 assigned twice, line 3");
  check_error("s k 2 fitness 0\nv 4 1\n", "vertex id out of range, line 2");
  check_error("s k 2 fitness 0\nv 1 3\n", "color out of range, line 2");
  check_error("v 1 1\n", "v line before s line, line 1");
  check_error("s q 2 fitness 0\n", "malformed s line");
  check_error("c nothing\n", "missing s line");
}
