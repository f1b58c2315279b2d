#include "pmech/config.hpp"

#include <fstream>
#include <sstream>

#include "pmech/common.hpp"

namespace pmech {

namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return {};
  }
  const auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw config_error("config: key '" + key + "' is not a real number: '" +
                       text + "'");
  }
  if (used != text.size()) {
    throw config_error("config: trailing characters in '" + key + "=" + text +
                       "'");
  }
  return value;
}

}  // namespace

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) {
    throw config_error("config: cannot open " + path);
  }
  RunConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto comment = line.find('#');
    if (comment != std::string::npos) {
      line = line.substr(0, comment);
    }
    const std::string body = trim(line);
    if (body.empty()) {
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw config_error("config: " + path + ":" + std::to_string(lineno) +
                         ": expected key=value, got '" + body + "'");
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty()) {
      throw config_error("config: " + path + ":" + std::to_string(lineno) +
                         ": empty key");
    }
    cfg.values[key] = value;
  }
  return cfg;
}

void RunConfig::set_pair(const std::string& pair) {
  const auto eq = pair.find('=');
  if (eq == std::string::npos || trim(pair.substr(0, eq)).empty()) {
    throw config_error("expected key=value, got '" + pair + "'");
  }
  values[trim(pair.substr(0, eq))] = trim(pair.substr(eq + 1));
}

void RunConfig::set(const std::string& key, const std::string& value) {
  values[key] = value;
}

bool RunConfig::has(const std::string& key) const {
  return values.find(key) != values.end();
}

std::string RunConfig::get_string(const std::string& key,
                                  const std::string& fallback) const {
  const auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

double RunConfig::get_double(const std::string& key, double fallback) const {
  const auto it = values.find(key);
  return it == values.end() ? fallback : parse_double(key, it->second);
}

std::size_t RunConfig::get_size(const std::string& key,
                                std::size_t fallback) const {
  const auto it = values.find(key);
  if (it == values.end()) {
    return fallback;
  }
  const double value = parse_double(key, it->second);
  if (value < 0.0 || value != static_cast<double>(static_cast<std::size_t>(value))) {
    throw config_error("config: key '" + key +
                       "' must be a nonnegative integer, got '" + it->second +
                       "'");
  }
  return static_cast<std::size_t>(value);
}

std::vector<double> RunConfig::get_double_list(
    const std::string& key, std::vector<double> fallback) const {
  const auto it = values.find(key);
  if (it == values.end()) {
    return fallback;
  }
  std::vector<double> out;
  std::stringstream ss(it->second);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string body = trim(item);
    if (body.empty()) {
      throw config_error("config: empty entry in list '" + key + "'");
    }
    out.push_back(parse_double(key, body));
  }
  if (out.empty()) {
    throw config_error("config: list '" + key + "' is empty");
  }
  return out;
}

}  // namespace pmech
