#include "pmech/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace pmech::fft {
namespace {

using PlanKey = std::tuple<int, int, int, int, int>;  // n, howmany, stride, dist, sign

struct PlanCache {
  std::mutex mu;
  std::map<PlanKey, fftw_plan> plans;

  ~PlanCache() {
    for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
  }

  fftw_plan get(const PlanKey& key, fftw_complex* data) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;
    auto [n, howmany, stride, dist, sign] = key;
    // FFTW_UNALIGNED keeps the plan valid for any buffer handed to
    // fftw_execute_dft later, not just the one used at planning time.
    fftw_plan plan = fftw_plan_many_dft(
        1, &n, howmany, data, nullptr, stride, dist, data, nullptr, stride,
        dist, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans.emplace(key, plan);
    return plan;
  }
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void transform_many(std::complex<double>* data, int n, int howmany, int stride,
                    int dist, int sign) {
  if (n <= 0 || howmany <= 0) return;
  auto* raw = reinterpret_cast<fftw_complex*>(data);
  fftw_plan plan =
      cache().get({n, howmany, stride, dist, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD}, raw);
  fftw_execute_dft(plan, raw, raw);
}

void transform(std::complex<double>* data, int n, int sign) {
  transform_many(data, n, 1, 1, n, sign);
}

}  // namespace pmech::fft
