#include "fbl/heat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fbl/errors.hpp"
#include "fbl/norms.hpp"
#include "fbl/random_fields.hpp"
#include "fbl/spectral.hpp"
#include "format.hpp"

namespace fbl {

TimeSeriesField heat_propagate(const SpectralField& u0, const std::vector<double>& times,
                               Quadrature quadrature) {
  const auto& table = lattice(u0.grid());
  std::vector<SpectralField> snaps;
  snaps.reserve(times.size());
  for (double t : times) {
    SpectralField s = u0;
    if (t != 0.0) {
      for (std::size_t i = 0; i < s.points(); ++i) {
        const double decay = std::exp(-t * table.radius2[i]);
        for (int c = 0; c < s.components(); ++c) s.at(c, i) *= decay;
      }
    }
    snaps.push_back(std::move(s));
  }
  return TimeSeriesField(times, std::move(snaps), quadrature);
}

namespace {

/// One exact step of the Duhamel recursion, in place on `acc`.
void duhamel_step(SpectralField& acc, const SpectralField& f0, const SpectralField& f1, double h) {
  const auto& table = lattice(acc.grid());
  for (std::size_t i = 0; i < acc.points(); ++i) {
    const double a = table.radius2[i];
    const double decay = std::exp(-h * a);
    const double gain = a == 0.0 ? h : -std::expm1(-h * a) / a;
    for (int c = 0; c < acc.components(); ++c)
      acc.at(c, i) = decay * acc.at(c, i) + gain * 0.5 * (f0.at(c, i) + f1.at(c, i));
  }
}

}  // namespace

SpectralField duhamel(const TimeSeriesField& f, std::size_t t_index) {
  if (t_index >= f.size()) throw DomainError("Duhamel time index outside the grid");
  SpectralField acc(f.grid(), f.components());
  const auto& t = f.times();
  for (std::size_t k = 0; k < t_index; ++k) duhamel_step(acc, f[k], f[k + 1], t[k + 1] - t[k]);
  return acc;
}

TimeSeriesField duhamel_series(const TimeSeriesField& f) {
  std::vector<SpectralField> snaps;
  snaps.reserve(f.size());
  SpectralField acc(f.grid(), f.components());
  snaps.push_back(acc);
  const auto& t = f.times();
  for (std::size_t k = 0; k + 1 < f.size(); ++k) {
    duhamel_step(acc, f[k], f[k + 1], t[k + 1] - t[k]);
    snaps.push_back(acc);
  }
  return TimeSeriesField(t, std::move(snaps), f.quadrature());
}

HeatSolution solve_heat(const SpectralField& u0, const std::optional<TimeSeriesField>& forcing,
                        const std::vector<double>& times) {
  auto series = heat_propagate(u0, times);
  if (forcing) {
    if (forcing->times() != times || !forcing->snapshots().front().same_shape(u0))
      throw DomainError("forcing must share the time grid and shape of the data");
    series += duhamel_series(*forcing);
  }
  return HeatSolution{std::move(series), u0, forcing, kHeatKappa};
}

double kappa_lattice_bound(const DyadicPartition& part) {
  const auto& table = lattice(part.grid());
  double best = std::numeric_limits<double>::infinity();
  for (int j = part.j_min(); j <= part.j_max(); ++j)
    for (const auto& e : part.block_support(j))
      best = std::min(best, std::ldexp(table.radius2[e.index], -2 * j));
  return best;
}

EstimateReport verify_heat_estimate(const SpectralField& u0,
                                    const std::optional<TimeSeriesField>& forcing,
                                    const ExponentField& s, const ExponentField& p, double r,
                                    double rho, double rho1, const std::vector<double>& times,
                                    const DyadicPartition& part) {
  if (!(rho >= 1.0) || !(rho1 >= rho)) throw DomainError("heat estimate needs 1 ≤ ρ ≤ ρ1");
  const auto solution = solve_heat(u0, forcing, times);
  auto shifted = [&](double by) {
    return s.map([by](double v) { return v + by; }, s.descriptor() + "+" + detail::format_double(by),
                 ExponentRole::regularity);
  };
  const double gain1 = std::isinf(rho1) ? 0.0 : 2.0 / rho1;
  const double lhs = chemin_lerner_norm(solution.series, rho1, shifted(gain1), p, r, part).value;
  double rhs = variable_fourier_besov_norm(u0, s, p, r, part).value;
  if (forcing) {
    const double gain = (std::isinf(rho) ? 0.0 : 2.0 / rho) - 2.0;
    rhs += chemin_lerner_norm(*forcing, rho, shifted(gain), p, r, part).value;
  }
  EstimateReport report;
  report.estimate_id = "heat-3.2";
  report.parameters = {{"r", r}, {"rho", rho}, {"rho1", rho1}, {"T", times.back()},
                       {"nodes", double(times.size())}, {"kappa", kHeatKappa},
                       {"kappa_lattice", kappa_lattice_bound(part)}};
  report.add_trial(lhs, rhs);
  report.finalize(1, 1.0);
  if (!forcing && std::isinf(rho1)) {
    report.checks.emplace_back("semigroup_contraction", report.max_ratio() <= 1.0 + 1e-10);
    report.passes = report.all_checks();
  }
  return report;
}

EstimateReport sweep_heat_estimate(const HeatSweep& sweep, const TrialPlan& plan) {
  const auto& grid = plan.grid;
  const auto part = build_partition(grid);
  const auto s = ExponentField::from_recipe(sweep.s, grid, ExponentRole::regularity);
  const auto p = ExponentField::from_recipe(sweep.p, grid);
  const auto times = sweep.time.nodes();
  const double limit = grid.n() / 2 - 1;
  EstimateReport report;
  report.estimate_id = "heat-3.2";
  report.seed = plan.seed;
  for (std::size_t t = 0; t < plan.total(); ++t) {
    auto engine = trial_engine(plan.seed, t);
    RandomFieldSpec spec;
    spec.inner = 1.0;
    spec.outer = std::uniform_real_distribution<double>(3.0, limit)(engine);
    spec.slope = t % 2 == 0 ? 0.0 : plan.slope;
    const auto u0 = random_field(grid, spec, engine);
    std::optional<TimeSeriesField> forcing;
    if (sweep.forcing) {
      const auto a = random_field(grid, spec, engine);
      const auto b = random_field(grid, spec, engine);
      const double omega = std::uniform_real_distribution<double>(0.0, 10.0)(engine);
      std::vector<SpectralField> snaps;
      for (double tk : times) {
        SpectralField fk = std::cos(omega * tk) * a;
        fk.axpy(std::exp(-tk), b);
        snaps.push_back(std::move(fk));
      }
      forcing.emplace(times, std::move(snaps));
    }
    const auto one = verify_heat_estimate(u0, forcing, s, p, sweep.r, sweep.rho, sweep.rho1, times, part);
    report.add_trial(one.lhs.empty() ? 0.0 : one.lhs[0], one.rhs.empty() ? 0.0 : one.rhs[0]);
  }
  report.parameters = {{"r", sweep.r}, {"rho", sweep.rho}, {"rho1", sweep.rho1},
                       {"T", sweep.time.horizon}, {"intervals", double(sweep.time.intervals)},
                       {"n", double(grid.n())}, {"kappa_lattice", kappa_lattice_bound(part)}};
  report.notes.push_back("s = " + s.descriptor());
  report.notes.push_back("p = " + p.descriptor());
  report.notes.push_back("time grid: " + sweep.time.describe());
  report.checks.emplace_back("kappa_lattice_bound", kappa_lattice_bound(part) >= kHeatKappa - 1e-12);
  report.finalize(plan.calibration, plan.safety);
  return report;
}

}  // namespace fbl
