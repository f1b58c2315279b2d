#pragma once

// Plain key=value run configuration ('#' comments, blank lines ignored),
// with typed accessors.  Precedence is handled by the caller: command line
// flags override file values, which override defaults.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace pmech {

struct RunConfig {
  std::map<std::string, std::string> values;

  /// Parses a key=value file; malformed lines raise config_error.
  static RunConfig from_file(const std::string& path);
  /// Parses "key=value" (as given on the command line).
  void set_pair(const std::string& pair);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  std::size_t get_size(const std::string& key, std::size_t fallback) const;
  /// Comma-separated list of reals.
  std::vector<double> get_double_list(const std::string& key,
                                      std::vector<double> fallback) const;
};

}  // namespace pmech
