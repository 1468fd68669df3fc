#include "kcolor/config.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "kcolor/dimacs.hpp"

namespace kcolor {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ConfigFile ConfigFile::parse(std::istream& in) {
  ConfigFile cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'key = value', line " +
                       std::to_string(lineno));
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ParseError("empty key, line " + std::to_string(lineno));
    for (const auto& e : cfg.entries_)
      if (e.key == key)
        throw ParseError("duplicate key '" + key + "', line " +
                         std::to_string(lineno));
    cfg.entries_.push_back({std::move(key), std::move(value), lineno});
  }
  return cfg;
}

ConfigFile ConfigFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  try {
    return parse(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

const ConfigFile::Entry* ConfigFile::find(const std::string& key) const {
  for (const auto& e : entries_)
    if (e.key == key) return &e;
  return nullptr;
}

void ConfigFile::fail(const Entry& e, const std::string& what) const {
  throw ParseError(what + " for key '" + e.key + "', line " +
                   std::to_string(e.line));
}

bool ConfigFile::has(const std::string& key) const { return find(key); }

std::string ConfigFile::get_string(const std::string& key) const {
  const Entry* e = find(key);
  if (!e) throw ParseError("missing required config key '" + key + "'");
  return e->value;
}

std::string ConfigFile::get_string(const std::string& key,
                                   const std::string& fallback) const {
  const Entry* e = find(key);
  return e ? e->value : fallback;
}

std::int64_t ConfigFile::get_int(const std::string& key,
                                 std::int64_t fallback) const {
  const Entry* e = find(key);
  if (!e) return fallback;
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(e->value, &pos);
  } catch (const std::exception&) {
    fail(*e, "expected an integer");
  }
  if (pos != e->value.size()) fail(*e, "expected an integer");
  return v;
}

std::int64_t ConfigFile::require_int(const std::string& key) const {
  if (!has(key)) throw ParseError("missing required config key '" + key + "'");
  return get_int(key, 0);
}

double ConfigFile::get_double(const std::string& key, double fallback) const {
  const Entry* e = find(key);
  if (!e) return fallback;
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(e->value, &pos);
  } catch (const std::exception&) {
    fail(*e, "expected a number");
  }
  if (pos != e->value.size()) fail(*e, "expected a number");
  return v;
}

bool ConfigFile::get_bool(const std::string& key, bool fallback) const {
  const Entry* e = find(key);
  if (!e) return fallback;
  if (e->value == "1" || e->value == "true" || e->value == "yes") return true;
  if (e->value == "0" || e->value == "false" || e->value == "no") return false;
  fail(*e, "expected a boolean (true/false/1/0)");
}

std::vector<double> ConfigFile::get_grid(const std::string& key) const {
  const Entry* e = find(key);
  if (!e) throw ParseError("missing required config key '" + key + "'");
  std::vector<double> out;
  std::istringstream ss(e->value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      fail(*e, "expected comma-separated numbers");
    }
    if (pos != item.size()) fail(*e, "expected comma-separated numbers");
    out.push_back(v);
  }
  if (out.empty()) fail(*e, "empty list");
  return out;
}

void ConfigFile::require_known(const std::vector<std::string>& known) const {
  for (const auto& e : entries_)
    if (std::find(known.begin(), known.end(), e.key) == known.end())
      throw ParseError("unknown config key '" + e.key + "', line " +
                       std::to_string(e.line));
}

}  // namespace kcolor
