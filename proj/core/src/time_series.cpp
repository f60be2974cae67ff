#include "fbl/time_series.hpp"

#include <algorithm>
#include <cmath>

#include "fbl/errors.hpp"
#include "format.hpp"

namespace fbl {

std::string to_string(Quadrature q) {
  return q == Quadrature::trapezoid ? "trapezoid" : "left-endpoint";
}

std::string to_string(TimeSpacing s) { return s == TimeSpacing::uniform ? "uniform" : "geometric"; }

std::vector<double> TimeGridSpec::nodes() const {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw DomainError("time horizon must be positive");
  if (intervals < 1) throw DomainError("time grid needs at least one interval");
  if (spacing == TimeSpacing::geometric && !(grading > 0.0))
    throw DomainError("geometric time grading must be positive");
  std::vector<double> t(static_cast<std::size_t>(intervals) + 1);
  for (int k = 0; k <= intervals; ++k) {
    const double x = static_cast<double>(k) / intervals;
    t[k] = spacing == TimeSpacing::uniform
               ? horizon * x
               : horizon * std::expm1(grading * x) / std::expm1(grading);
  }
  t.back() = horizon;
  return t;
}

std::string TimeGridSpec::describe() const {
  std::string out = to_string(spacing) + " grid on [0, " + detail::format_double(horizon) + "], " +
                    std::to_string(intervals) + " intervals";
  if (spacing == TimeSpacing::geometric) out += ", grading " + detail::format_double(grading);
  return out;
}

TimeSeriesField::TimeSeriesField(std::vector<double> times, std::vector<SpectralField> snapshots,
                                 Quadrature quadrature)
    : times_(std::move(times)), snapshots_(std::move(snapshots)), quadrature_(quadrature) {
  if (times_.empty() || times_.size() != snapshots_.size())
    throw DomainError("time series needs one snapshot per time node");
  if (times_.front() != 0.0) throw DomainError("time series must start at t = 0");
  for (std::size_t k = 1; k < times_.size(); ++k) {
    if (!(times_[k] > times_[k - 1])) throw DomainError("time nodes must be strictly increasing");
    if (!snapshots_[k].same_shape(snapshots_.front()))
      throw DomainError("time series snapshots must share grid and component count");
  }
}

TimeSeriesField TimeSeriesField::zeros(const GridSpec& grid, int components,
                                       std::vector<double> times, Quadrature quadrature) {
  std::vector<SpectralField> snaps(times.size(), SpectralField(grid, components));
  return TimeSeriesField(std::move(times), std::move(snaps), quadrature);
}

TimeSeriesField TimeSeriesField::constant(const SpectralField& f, std::vector<double> times,
                                          Quadrature quadrature) {
  std::vector<SpectralField> snaps(times.size(), f);
  return TimeSeriesField(std::move(times), std::move(snaps), quadrature);
}

bool TimeSeriesField::same_shape(const TimeSeriesField& o) const noexcept {
  return times_ == o.times_ && snapshots_.front().same_shape(o.snapshots_.front());
}

TimeSeriesField& TimeSeriesField::operator+=(const TimeSeriesField& o) {
  if (!same_shape(o)) throw DomainError("time series shapes differ");
  for (std::size_t k = 0; k < size(); ++k) snapshots_[k] += o.snapshots_[k];
  return *this;
}

TimeSeriesField& TimeSeriesField::operator-=(const TimeSeriesField& o) {
  if (!same_shape(o)) throw DomainError("time series shapes differ");
  for (std::size_t k = 0; k < size(); ++k) snapshots_[k] -= o.snapshots_[k];
  return *this;
}

TimeSeriesField& TimeSeriesField::operator*=(double a) {
  for (auto& s : snapshots_) s *= cplx(a, 0.0);
  return *this;
}

TimeSeriesField& TimeSeriesField::axpy(double a, const TimeSeriesField& o) {
  if (!same_shape(o)) throw DomainError("time series shapes differ");
  for (std::size_t k = 0; k < size(); ++k) snapshots_[k].axpy(a, o.snapshots_[k]);
  return *this;
}

double TimeSeriesField::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& s : snapshots_) m = std::max(m, s.max_abs());
  return m;
}

double time_lebesgue(const std::vector<double>& times, const std::vector<double>& values, double rho,
                     Quadrature quadrature) {
  if (times.size() != values.size() || times.empty())
    throw DomainError("time quadrature needs one value per node");
  if (!(rho >= 1.0)) throw DomainError("time integrability index must be at least 1");
  if (std::isinf(rho)) return *std::max_element(values.begin(), values.end());
  // Scale out the maximum so large ρ does not overflow.
  const double top = *std::max_element(values.begin(), values.end());
  if (top == 0.0) return 0.0;
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < times.size(); ++k) {
    const double h = times[k + 1] - times[k];
    const double left = std::pow(values[k] / top, rho);
    if (quadrature == Quadrature::left_endpoint) {
      acc += h * left;
    } else {
      acc += 0.5 * h * (left + std::pow(values[k + 1] / top, rho));
    }
  }
  return top * std::pow(acc, 1.0 / rho);
}

}  // namespace fbl
