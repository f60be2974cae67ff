#pragma once

#include <optional>
#include <vector>

#include "fbl/estimate_report.hpp"
#include "fbl/estimates.hpp"
#include "fbl/exponents.hpp"
#include "fbl/littlewood_paley.hpp"
#include "fbl/time_series.hpp"

namespace fbl {

/// Lower bound |ξ|^2 ≥ κ 2^{2j} on the support of φ_j; (3/4)^2 for the ring.
inline constexpr double kHeatKappa = 9.0 / 16.0;

/// Exact semigroup: û(t_k) = e^{-t_k|ξ|^2} û_0 at every node.
TimeSeriesField heat_propagate(const SpectralField& u0, const std::vector<double>& times,
                               Quadrature quadrature = Quadrature::trapezoid);

/// ∫_0^{t_i} e^{-(t_i-τ)|ξ|^2} f̂(τ) dτ with f̂ held at its trapezoid mean on
/// each subinterval and the kernel integrated exactly. The zero mode gets the
/// plain mean·h sum.
SpectralField duhamel(const TimeSeriesField& f, std::size_t t_index);
/// The Duhamel term at every node, by the one-step recursion
///   D_{k+1} = e^{-h_k|ξ|^2} D_k + m_k (1 - e^{-h_k|ξ|^2}) / |ξ|^2.
TimeSeriesField duhamel_series(const TimeSeriesField& f);

struct HeatSolution {
  TimeSeriesField series;
  SpectralField u0;
  std::optional<TimeSeriesField> forcing;
  double kappa = kHeatKappa;
};

/// Mild solution of ∂_t u - Δu = f, u(0) = u0 on the nodes of `times`.
HeatSolution solve_heat(const SpectralField& u0, const std::optional<TimeSeriesField>& forcing,
                        const std::vector<double>& times);

/// min over covered j and lattice points with φ_j ≠ 0 of |ξ|^2 / 2^{2j}.
double kappa_lattice_bound(const DyadicPartition& part);

/// One evaluation of the linear heat estimate
///   ‖u‖_{L^{ρ1}_T FḂ^{s+2/ρ1}_{p,r}} ≤ C (‖u0‖_{FḂ^s_{p,r}} + ‖f‖_{L^ρ_T FḂ^{s+2/ρ-2}_{p,r}}).
/// Returns the report with a single trial; without forcing and with ρ1 = ∞ the
/// check "semigroup_contraction" asserts ratio ≤ 1 + 1e-10.
EstimateReport verify_heat_estimate(const SpectralField& u0,
                                    const std::optional<TimeSeriesField>& forcing,
                                    const ExponentField& s, const ExponentField& p, double r,
                                    double rho, double rho1, const std::vector<double>& times,
                                    const DyadicPartition& part);

struct HeatSweep {
  ExponentRecipe s{ExponentKind::constant, 0.5, 0.0, Profile::bump};
  ExponentRecipe p{ExponentKind::smooth, 4.0, 1.0, Profile::bump};
  double r = 1.0;
  double rho = 1.0;
  double rho1 = 2.0;
  TimeGridSpec time{1.0, 64, TimeSpacing::geometric, 8.0};
  bool forcing = true;
};

/// Random (u0, f) pairs under the calibration/holdout protocol.
EstimateReport sweep_heat_estimate(const HeatSweep& sweep, const TrialPlan& plan);

}  // namespace fbl
