#include "kcolor/dimacs.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace kcolor {

namespace {

[[noreturn]] void fail(const std::string& what, int line) {
  throw ParseError(what + ", line " + std::to_string(line));
}

// Whole-token integer parse; anything else is a format error.
long long parse_int(const std::string& tok, const std::string& what,
                    int line) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    fail(what + " is not an integer", line);
  }
  if (pos != tok.size()) fail(what + " is not an integer", line);
  return value;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Graph parse_dimacs(std::istream& in, std::string name) {
  int n = -1;
  long long declared_m = 0;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& kind = toks[0];
    if (kind == "c") continue;
    if (kind == "p") {
      if (n >= 0) fail("duplicate p line", lineno);
      if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "edges"))
        fail("malformed p line, expected 'p edge <n> <m>'", lineno);
      long long nn = parse_int(toks[2], "vertex count", lineno);
      declared_m = parse_int(toks[3], "edge count", lineno);
      if (nn < 0 || nn > 100'000'000) fail("vertex count out of range", lineno);
      if (declared_m < 0) fail("edge count out of range", lineno);
      n = static_cast<int>(nn);
      edges.reserve(static_cast<std::size_t>(declared_m));
    } else if (kind == "e") {
      if (n < 0) fail("e line before p line", lineno);
      if (toks.size() != 3) fail("malformed e line, expected 'e <u> <v>'",
                                 lineno);
      long long u = parse_int(toks[1], "vertex id", lineno);
      long long v = parse_int(toks[2], "vertex id", lineno);
      if (u < 1 || u > n || v < 1 || v > n)
        fail("vertex id out of range", lineno);
      if (u == v) fail("self loop", lineno);
      edges.emplace_back(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
    } else {
      fail("unknown line type '" + kind + "'", lineno);
    }
  }
  if (n < 0) throw ParseError("missing p line");
  return Graph(n, edges, std::move(name));
}

Graph load_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::string name = std::filesystem::path(path).stem().string();
  try {
    return parse_dimacs(in, std::move(name));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_dimacs(std::ostream& out, const Graph& g) {
  if (!g.name().empty()) out << "c " << g.name() << "\n";
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

std::vector<RegistryEntry> parse_registry(std::istream& in) {
  std::vector<RegistryEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() != 3)
      fail("malformed registry line, expected '<name> <k> <path>'", lineno);
    long long k = parse_int(toks[1], "registry k", lineno);
    if (k < 1) fail("registry k must be positive", lineno);
    entries.push_back({toks[0], static_cast<int>(k), toks[2]});
  }
  return entries;
}

std::vector<RegistryEntry> load_registry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open registry file: " + path);
  auto entries = parse_registry(in);
  // Relative instance paths are taken relative to the registry location.
  auto base = std::filesystem::path(path).parent_path();
  for (auto& e : entries) {
    std::filesystem::path p(e.path);
    if (p.is_relative()) e.path = (base / p).string();
  }
  return entries;
}

const RegistryEntry* find_instance(const std::vector<RegistryEntry>& registry,
                                   const std::string& name) {
  for (const auto& e : registry)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace kcolor
