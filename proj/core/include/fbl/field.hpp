#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "fbl/errors.hpp"
#include "fbl/grid.hpp"

namespace fbl {

using cplx = std::complex<double>;

enum class Side : std::uint8_t { physical = 0, spectral = 1 };

/// Scalar or vector field sampled on a periodic grid. Components are stored
/// one after another (component-major), each in the grid's row-major order.
template <Side S>
class GridField {
 public:
  static constexpr Side side = S;

  GridField(GridSpec grid, int components)
      : grid_(grid), components_(components), data_(grid.size() * checked(components)) {}

  GridField(GridSpec grid, int components, std::vector<cplx> data)
      : grid_(grid), components_(checked(components)), data_(std::move(data)) {
    if (data_.size() != grid_.size() * static_cast<std::size_t>(components_))
      throw DomainError("field data size does not match grid and component count");
  }

  const GridSpec& grid() const noexcept { return grid_; }
  int components() const noexcept { return components_; }
  std::size_t points() const noexcept { return grid_.size(); }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }
  std::span<cplx> component(int c) noexcept { return {data_.data() + offset(c), grid_.size()}; }
  std::span<const cplx> component(int c) const noexcept {
    return {data_.data() + offset(c), grid_.size()};
  }
  cplx& at(int c, std::size_t i) noexcept { return data_[offset(c) + i]; }
  const cplx& at(int c, std::size_t i) const noexcept { return data_[offset(c) + i]; }

  bool same_shape(const GridField& other) const noexcept {
    return grid_ == other.grid_ && components_ == other.components_;
  }

  GridField& operator+=(const GridField& o) {
    require_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  GridField& operator-=(const GridField& o) {
    require_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  GridField& operator*=(cplx a) noexcept {
    for (auto& v : data_) v *= a;
    return *this;
  }
  /// this += a * o
  GridField& axpy(cplx a, const GridField& o) {
    require_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += a * o.data_[i];
    return *this;
  }

  friend GridField operator+(GridField a, const GridField& b) { return a += b; }
  friend GridField operator-(GridField a, const GridField& b) { return a -= b; }
  friend GridField operator*(cplx s, GridField a) { return a *= s; }
  friend GridField operator*(double s, GridField a) { return a *= cplx(s, 0.0); }

  /// Plain sum of |value|^2 over all entries (no measure weight).
  double sum_squares() const noexcept {
    double acc = 0.0;
    for (const auto& v : data_) acc += std::norm(v);
    return acc;
  }
  double max_abs() const noexcept {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }
  bool is_zero() const noexcept {
    for (const auto& v : data_)
      if (v != cplx{}) return false;
    return true;
  }
  /// Pointwise Euclidean magnitude across components.
  std::vector<double> magnitude() const {
    std::vector<double> mag(grid_.size(), 0.0);
    for (int c = 0; c < components_; ++c) {
      auto comp = component(c);
      for (std::size_t i = 0; i < mag.size(); ++i) mag[i] += std::norm(comp[i]);
    }
    for (auto& m : mag) m = std::sqrt(m);
    return mag;
  }

 private:
  static int checked(int components) {
    if (components < 1) throw DomainError("field needs at least one component");
    return components;
  }
  std::size_t offset(int c) const noexcept { return static_cast<std::size_t>(c) * grid_.size(); }
  void require_shape(const GridField& o) const {
    if (!same_shape(o)) throw DomainError("field shapes differ");
  }

  GridSpec grid_;
  int components_;
  std::vector<cplx> data_;
};

using SpectralField = GridField<Side::spectral>;
using PhysicalField = GridField<Side::physical>;

}  // namespace fbl
