#include "kcolor/coloring.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kcolor/dimacs.hpp"
#include "kcolor/rng.hpp"

namespace kcolor {

namespace {

void check_dimensions(const Graph& g, const Coloring& c, const char* who) {
  if (c.size() != g.vertex_count())
    throw std::invalid_argument(std::string(who) +
                                ": coloring size does not match graph");
  if (c.k < 1)
    throw std::invalid_argument(std::string(who) + ": k must be positive");
}

}  // namespace

std::vector<std::vector<int>> Coloring::classes() const {
  std::vector<std::vector<int>> out(k);
  for (int v = 0; v < size(); ++v) out[colors[v]].push_back(v);
  return out;
}

Coloring random_coloring(const Graph& g, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("random_coloring: k must be positive");
  Rng rng(seed);
  Coloring c{k, std::vector<int>(g.vertex_count())};
  for (int v = 0; v < g.vertex_count(); ++v) c.colors[v] = rng.uniform_int(0, k - 1);
  return c;
}

int fitness(const Graph& g, const Coloring& c) {
  check_dimensions(g, c, "fitness");
  int conflicts = 0;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v && c.colors[u] == c.colors[v]) ++conflicts;
  return conflicts;
}

bool is_legal(const Graph& g, const Coloring& c) { return fitness(g, c) == 0; }

ConflictState ConflictState::compute(const Graph& g, const Coloring& c) {
  check_dimensions(g, c, "ConflictState");
  ConflictState s;
  std::vector<char> in_conflict(g.vertex_count(), 0);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v && c.colors[u] == c.colors[v]) {
        ++s.conflict_count;
        in_conflict[u] = in_conflict[v] = 1;
      }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (in_conflict[v]) s.conflicting_vertices.push_back(v);
  return s;
}

void write_coloring(std::ostream& out, const Graph& g, const Coloring& c) {
  check_dimensions(g, c, "write_coloring");
  out << "s k " << c.k << " fitness " << fitness(g, c) << "\n";
  for (int v = 0; v < c.size(); ++v)
    out << "v " << v + 1 << " " << c.colors[v] + 1 << "\n";
}

Coloring parse_coloring(std::istream& in, int expected_n) {
  Coloring c;
  c.colors.assign(expected_n, -1);
  bool have_header = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string kind;
    if (!(ss >> kind)) continue;
    if (kind == "c") continue;
    if (kind == "s") {
      if (have_header)
        throw ParseError("duplicate s line, line " + std::to_string(lineno));
      std::string kw1, kw2;
      int k = 0;
      long long f = 0;
      if (!(ss >> kw1 >> k >> kw2 >> f) || kw1 != "k" || kw2 != "fitness" ||
          k < 1)
        throw ParseError("malformed s line, expected 's k <k> fitness <f>'"
                         ", line " + std::to_string(lineno));
      c.k = k;
      have_header = true;
    } else if (kind == "v") {
      if (!have_header)
        throw ParseError("v line before s line, line " +
                         std::to_string(lineno));
      int id = 0, color = 0;
      if (!(ss >> id >> color))
        throw ParseError("malformed v line, line " + std::to_string(lineno));
      if (id < 1 || id > expected_n)
        throw ParseError("vertex id out of range, line " +
                         std::to_string(lineno));
      if (color < 1 || color > c.k)
        throw ParseError("color out of range, line " + std::to_string(lineno));
      if (c.colors[id - 1] != -1)
        throw ParseError("vertex " + std::to_string(id) +
                         " assigned twice, line " + std::to_string(lineno));
      c.colors[id - 1] = color - 1;
    } else {
      throw ParseError("unknown line type '" + kind + "', line " +
                       std::to_string(lineno));
    }
  }
  if (!have_header) throw ParseError("missing s line");
  for (int v = 0; v < expected_n; ++v)
    if (c.colors[v] == -1)
      throw ParseError("vertex " + std::to_string(v + 1) +
                       " missing from coloring");
  return c;
}

Coloring load_coloring_file(const std::string& path, int expected_n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open coloring file: " + path);
  try {
    return parse_coloring(in, expected_n);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace kcolor
