#pragma once

#include <string>
#include <vector>

#include "fbl/field.hpp"

namespace fbl {

enum class Quadrature { left_endpoint, trapezoid };
enum class TimeSpacing { uniform, geometric };

std::string to_string(Quadrature q);
std::string to_string(TimeSpacing s);

/// Recipe for a time grid 0 = t_0 < ... < t_M = T.
/// Geometric spacing clusters nodes near t = 0:
///   t_k = T (e^{g k/M} - 1) / (e^g - 1), g = grading.
struct TimeGridSpec {
  double horizon = 1.0;
  int intervals = 128;
  TimeSpacing spacing = TimeSpacing::geometric;
  double grading = 8.0;

  std::vector<double> nodes() const;
  std::string describe() const;
};

/// Spectral snapshots on a shared grid at strictly increasing times from 0.
class TimeSeriesField {
 public:
  TimeSeriesField(std::vector<double> times, std::vector<SpectralField> snapshots,
                  Quadrature quadrature = Quadrature::trapezoid);
  /// Zero field with the given shape at every node.
  static TimeSeriesField zeros(const GridSpec& grid, int components, std::vector<double> times,
                               Quadrature quadrature = Quadrature::trapezoid);
  /// The same snapshot at every node.
  static TimeSeriesField constant(const SpectralField& f, std::vector<double> times,
                                  Quadrature quadrature = Quadrature::trapezoid);

  const std::vector<double>& times() const noexcept { return times_; }
  std::size_t size() const noexcept { return times_.size(); }
  double horizon() const noexcept { return times_.back(); }
  Quadrature quadrature() const noexcept { return quadrature_; }
  void set_quadrature(Quadrature q) noexcept { quadrature_ = q; }
  const GridSpec& grid() const noexcept { return snapshots_.front().grid(); }
  int components() const noexcept { return snapshots_.front().components(); }

  const SpectralField& operator[](std::size_t k) const noexcept { return snapshots_[k]; }
  SpectralField& operator[](std::size_t k) noexcept { return snapshots_[k]; }
  const std::vector<SpectralField>& snapshots() const noexcept { return snapshots_; }

  bool same_shape(const TimeSeriesField& o) const noexcept;
  TimeSeriesField& operator+=(const TimeSeriesField& o);
  TimeSeriesField& operator-=(const TimeSeriesField& o);
  TimeSeriesField& operator*=(double a);
  TimeSeriesField& axpy(double a, const TimeSeriesField& o);
  friend TimeSeriesField operator+(TimeSeriesField a, const TimeSeriesField& b) { return a += b; }
  friend TimeSeriesField operator-(TimeSeriesField a, const TimeSeriesField& b) { return a -= b; }
  friend TimeSeriesField operator*(double s, TimeSeriesField a) { return a *= s; }

  double max_abs() const noexcept;

 private:
  std::vector<double> times_;
  std::vector<SpectralField> snapshots_;
  Quadrature quadrature_;
};

/// (∫_0^T g(t)^ρ dt)^{1/ρ} for node values g_k ≥ 0 under the chosen rule;
/// ρ = ∞ gives the maximum over nodes.
double time_lebesgue(const std::vector<double>& times, const std::vector<double>& values, double rho,
                     Quadrature quadrature);

}  // namespace fbl
