#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace tfmult::detail {
namespace {

// Plans are created once per shape and kept for the process lifetime.
// FFTW planning is not thread-safe, execution of an existing plan is.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(int dim, std::size_t n, FftSign sign) {
    const std::lock_guard lock(mutex_);
    const auto key = std::make_tuple(dim, n, static_cast<int>(sign));
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    std::vector<int> dims(static_cast<std::size_t>(dim), static_cast<int>(n));
    std::size_t total = 1;
    for (int i = 0; i < dim; ++i) total *= n;
    fftw_complex* scratch = fftw_alloc_complex(total);
    // FFTW_UNALIGNED: results must not depend on where the caller's buffer lives.
    fftw_plan plan = fftw_plan_dft(dim, dims.data(), scratch, scratch,
                                   sign == FftSign::forward ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    if (plan == nullptr) throw std::runtime_error("fftw: failed to create plan");
    plans_.emplace(key, plan);
    return plan;
  }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, std::size_t, int>, fftw_plan> plans_;
};

}  // namespace

void fft_inplace(std::span<std::complex<double>> data, int dim, std::size_t n,
                 FftSign sign) {
  fftw_plan plan = PlanCache::instance().get(dim, n, sign);
  auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buffer, buffer);
}

}  // namespace tfmult::detail
