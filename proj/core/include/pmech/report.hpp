#pragma once

// Check reporting: named residual-vs-tolerance results assembled into a
// deterministic JSON array (sorted by check name).  runtime_ms is the one
// wall-clock field; every other field is reproducible given config and
// seed.

#include <chrono>
#include <string>
#include <vector>

namespace pmech {

struct CheckResult {
  std::string check;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// pass = (residual <= tolerance), with NaN counted as failure.
CheckResult make_check(const std::string& name, double residual,
                       double tolerance, double runtime_ms);

bool all_pass(const std::vector<CheckResult>& results);

/// JSON array, entries sorted by check name.
std::string report_json(std::vector<CheckResult> results);

void write_report(const std::string& path,
                  const std::vector<CheckResult>& results);

}  // namespace pmech
