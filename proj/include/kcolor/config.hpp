#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kcolor {

// `key = value` file with `#` comments. Values keep their raw text; typed
// access validates on use and reports the defining line on error.
class ConfigFile {
 public:
  static ConfigFile parse(std::istream& in);
  static ConfigFile load(const std::string& path);

  bool has(const std::string& key) const;

  std::string get_string(const std::string& key) const;  // throws if absent
  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  std::int64_t require_int(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  // Comma-separated list of numbers, e.g. `x_grid = 0, 0.25, 0.5`.
  std::vector<double> get_grid(const std::string& key) const;

  // Rejects keys outside the accepted set (typo guard).
  void require_known(const std::vector<std::string>& known) const;

  bool empty() const { return entries_.empty(); }

 private:
  struct Entry {
    std::string key;
    std::string value;
    int line = 0;
  };
  const Entry* find(const std::string& key) const;
  [[noreturn]] void fail(const Entry& e, const std::string& what) const;

  std::vector<Entry> entries_;
};

}  // namespace kcolor
