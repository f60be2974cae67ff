#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace fbl::detail {
namespace {

// One plan per (n, dims, sign) with its own aligned buffer; callers copy in and out.
struct Plan {
  fftw_plan plan = nullptr;
  fftw_complex* buffer = nullptr;
  std::size_t size = 0;

  Plan(int n, int dims, int sign) {
    size = 1;
    int shape[3];
    for (int d = 0; d < dims; ++d) {
      shape[d] = n;
      size *= static_cast<std::size_t>(n);
    }
    buffer = fftw_alloc_complex(size);
    plan = fftw_plan_dft(dims, shape, buffer, buffer, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                         FFTW_ESTIMATE);
    if (!plan) throw std::runtime_error("fftw plan creation failed");
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() {
    fftw_destroy_plan(plan);
    fftw_free(buffer);
  }
};

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

void fft_inplace(std::span<std::complex<double>> data, int n, int dims, int sign) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Plan>> plans;
  std::lock_guard lock(plan_mutex());
  auto& slot = plans[{n, dims, sign < 0 ? -1 : 1}];
  if (!slot) slot = std::make_unique<Plan>(n, dims, sign);
  if (data.size() != slot->size) throw std::logic_error("fft size mismatch");
  std::memcpy(slot->buffer, data.data(), data.size_bytes());
  fftw_execute(slot->plan);
  std::memcpy(static_cast<void*>(data.data()), slot->buffer, data.size_bytes());
}

}  // namespace fbl::detail
