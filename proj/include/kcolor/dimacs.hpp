#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcolor/graph.hpp"

namespace kcolor {

// Malformed input file; the message carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// DIMACS .col reader: `c` comment lines, exactly one `p edge <n> <m>`
// line, then `e <u> <v>` lines with 1-based endpoints. Duplicate edges
// collapse; edge_count() reflects the deduplicated graph.
Graph parse_dimacs(std::istream& in, std::string name = "");
Graph load_dimacs_file(const std::string& path);

// Writes the canonical form: one p line, then each edge once (u < v,
// 1-based, lexicographic order).
void write_dimacs(std::ostream& out, const Graph& g);

struct RegistryEntry {
  std::string name;
  int best_k = 0;
  std::string path;  // relative paths resolve against the registry file
};

// Line-oriented `name k path` registry; `#` starts a comment.
std::vector<RegistryEntry> parse_registry(std::istream& in);
std::vector<RegistryEntry> load_registry_file(const std::string& path);

// nullptr when absent.
const RegistryEntry* find_instance(const std::vector<RegistryEntry>& registry,
                                   const std::string& name);

}  // namespace kcolor
