#include "fbl/grid.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "fbl/errors.hpp"

namespace fbl {

ConfigError::ConfigError(std::vector<std::string> violations)
    : Error([&] {
        std::string msg = "invalid configuration:";
        for (const auto& v : violations) msg += "\n  - " + v;
        return msg;
      }()),
      violations_(std::move(violations)) {}

GridSpec::GridSpec(int n, int dims) : n_(n), dims_(dims), size_(1) {
  if (dims < 1 || dims > 3) throw DomainError("grid dimension must be 1, 2 or 3");
  if (n < 8 || (n & (n - 1)) != 0)
    throw DomainError("grid size must be a power of two and at least 8, got " + std::to_string(n));
  for (int d = 0; d < dims; ++d) size_ *= static_cast<std::size_t>(n);
}

double GridSpec::cell_volume() const noexcept {
  return std::pow(kTwoPi / n_, dims_);
}

double GridSpec::total_measure() const noexcept { return std::pow(kTwoPi, dims_); }

std::array<int, 3> GridSpec::multi_index(std::size_t flat) const noexcept {
  std::array<int, 3> m{0, 0, 0};
  for (int d = dims_ - 1; d >= 0; --d) {
    m[d] = static_cast<int>(flat % n_);
    flat /= n_;
  }
  return m;
}

Freq GridSpec::frequency(std::size_t flat) const noexcept {
  auto m = multi_index(flat);
  Freq xi{0, 0, 0};
  for (int d = 0; d < dims_; ++d) xi[d] = signed_frequency(m[d]);
  return xi;
}

std::size_t GridSpec::flat_from_multi(const std::array<int, 3>& m) const noexcept {
  std::size_t flat = 0;
  for (int d = 0; d < dims_; ++d) flat = flat * n_ + static_cast<std::size_t>(m[d]);
  return flat;
}

std::size_t GridSpec::flat_index(const Freq& xi) const noexcept {
  std::array<int, 3> m{0, 0, 0};
  for (int d = 0; d < dims_; ++d) m[d] = ((xi[d] % n_) + n_) % n_;
  return flat_from_multi(m);
}

std::array<double, 3> GridSpec::position(std::size_t flat) const noexcept {
  auto m = multi_index(flat);
  std::array<double, 3> x{0.0, 0.0, 0.0};
  for (int d = 0; d < dims_; ++d) x[d] = kTwoPi * m[d] / n_;
  return x;
}

bool GridSpec::touches_nyquist(std::size_t flat) const noexcept {
  auto m = multi_index(flat);
  for (int d = 0; d < dims_; ++d)
    if (m[d] == n_ / 2) return true;
  return false;
}

const LatticeTable& lattice(const GridSpec& grid) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<LatticeTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{grid.n(), grid.dims()}];
  if (!slot) {
    auto table = std::make_unique<LatticeTable>();
    const std::size_t size = grid.size();
    table->freq.resize(size);
    table->radius.resize(size);
    table->radius2.resize(size);
    table->nyquist.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
      const Freq xi = grid.frequency(i);
      const double r2 = double(xi[0]) * xi[0] + double(xi[1]) * xi[1] + double(xi[2]) * xi[2];
      table->freq[i] = xi;
      table->radius2[i] = r2;
      table->radius[i] = std::sqrt(r2);
      table->nyquist[i] = grid.touches_nyquist(i) ? 1 : 0;
    }
    slot = std::move(table);
  }
  return *slot;
}

int padded_size(int n) noexcept { return 3 * n / 2; }

}  // namespace fbl
