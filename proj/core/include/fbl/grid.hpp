#pragma once

#include <array>
#include <cstddef>
#include <numbers>
#include <vector>

namespace fbl {

/// Integer lattice frequency (unused trailing axes are zero when dims < 3).
using Freq = std::array<int, 3>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Uniform periodic grid on the torus [0, 2π)^dims with n points per axis.
///
/// Storage order is row-major with axis 0 slowest; index k along an axis
/// carries the signed frequency k for k < n/2 and k - n otherwise, so the
/// frequency lattice is Z^dims ∩ [-n/2, n/2)^dims.
class GridSpec {
 public:
  GridSpec(int n, int dims = 3);

  int n() const noexcept { return n_; }
  int dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return size_; }

  static constexpr double period() noexcept { return kTwoPi; }
  /// Physical cell volume (2π/n)^dims.
  double cell_volume() const noexcept;
  /// Weight of one frequency lattice point in frequency-side norms, (2π/n)^dims.
  double frequency_cell() const noexcept { return cell_volume(); }
  /// Total torus measure (2π)^dims.
  double total_measure() const noexcept;

  int signed_frequency(int index) const noexcept { return index < n_ / 2 ? index : index - n_; }
  std::array<int, 3> multi_index(std::size_t flat) const noexcept;
  Freq frequency(std::size_t flat) const noexcept;
  /// Flat index of a frequency; components are wrapped modulo n.
  std::size_t flat_index(const Freq& xi) const noexcept;
  /// Flat index of a multi-index (no wrapping).
  std::size_t flat_from_multi(const std::array<int, 3>& m) const noexcept;
  /// Physical coordinate x_m = 2π m / n of grid point `flat`.
  std::array<double, 3> position(std::size_t flat) const noexcept;
  /// True when some component equals the unpaired frequency -n/2.
  bool touches_nyquist(std::size_t flat) const noexcept;

  bool operator==(const GridSpec&) const = default;

 private:
  int n_;
  int dims_;
  std::size_t size_;
};

/// Precomputed frequency data for one grid, shared across calls.
struct LatticeTable {
  std::vector<Freq> freq;
  std::vector<double> radius;
  std::vector<double> radius2;
  std::vector<unsigned char> nyquist;
};

const LatticeTable& lattice(const GridSpec& grid);

/// Smallest padded size that makes quadratic products alias free on `n` points.
int padded_size(int n) noexcept;

}  // namespace fbl
