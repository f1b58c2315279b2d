#include "pmech/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "pmech/common.hpp"

namespace pmech {

CheckResult make_check(const std::string& name, double residual,
                       double tolerance, double runtime_ms) {
  CheckResult result;
  result.check = name;
  result.residual = residual;
  result.tolerance = tolerance;
  result.pass = std::isfinite(residual) && residual <= tolerance;
  result.runtime_ms = runtime_ms;
  return result;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

std::string report_json(std::vector<CheckResult> results) {
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return a.check < b.check;
            });
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckResult& r : results) {
    arr.push_back({{"check", r.check},
                   {"residual", r.residual},
                   {"tolerance", r.tolerance},
                   {"pass", r.pass},
                   {"runtime_ms", r.runtime_ms}});
  }
  return arr.dump(2) + "\n";
}

void write_report(const std::string& path,
                  const std::vector<CheckResult>& results) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) {
    throw config_error("cannot open " + path + " for writing");
  }
  os << report_json(results);
}

}  // namespace pmech
