#include "fbl/solvers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "fbl/errors.hpp"
#include "fbl/heat.hpp"
#include "fbl/random_fields.hpp"
#include "fbl/spectral.hpp"
#include "format.hpp"

namespace fbl {
namespace {

constexpr double kDivergenceTolerance = 1e-10;
constexpr double kMeanTolerance = 1e-13;
constexpr double kInf = std::numeric_limits<double>::infinity();

double max_zero_mode(const SpectralField& g) {
  double m = 0.0;
  for (const auto& z : zero_mode(g)) m = std::max(m, std::abs(z));
  return m;
}

void require_pair(const TimeSeriesField& u, const TimeSeriesField& v, int components) {
  if (!u.same_shape(v)) throw DomainError("bilinear form needs two series of the same shape");
  if (u.components() != components)
    throw DomainError("bilinear form expects " + std::to_string(components) + " component(s)");
  if (u.times() != v.times()) throw DomainError("bilinear form needs matching time grids");
}

void require_zero_mean(const TimeSeriesField& u) {
  for (const auto& s : u.snapshots())
    if (max_zero_mode(s) > kMeanTolerance * std::max(1.0, s.max_abs()))
      throw DomainError("field has a nonzero mean");
}

void require_solenoidal(const TimeSeriesField& u) {
  for (const auto& s : u.snapshots())
    if (divergence_defect(s) > kDivergenceTolerance)
      throw DomainError("velocity field is not divergence-free");
}

/// Physical samples of every component on the padded grid.
std::vector<std::vector<cplx>> evaluate_all(const PaddedProduct& pp, const SpectralField& f) {
  std::vector<std::vector<cplx>> out;
  out.reserve(f.components());
  for (int c = 0; c < f.components(); ++c) out.push_back(pp.evaluate(f.component(c)));
  return out;
}

/// Coefficients of (a ⋅ b + c ⋅ d)/2 on the base grid.
std::vector<cplx> symmetric_product(const PaddedProduct& pp, const std::vector<cplx>& a,
                                    const std::vector<cplx>& b, const std::vector<cplx>& c,
                                    const std::vector<cplx>& d) {
  std::vector<cplx> s(a.size());
  for (std::size_t x = 0; x < s.size(); ++x) s[x] = 0.5 * (a[x] * b[x] + c[x] * d[x]);
  return pp.project(std::move(s));
}

SpectralField as_field(const GridSpec& grid, std::vector<std::vector<cplx>> comps,
                       const BilinearOptions& options) {
  std::vector<cplx> data;
  data.reserve(grid.size() * comps.size());
  for (auto& c : comps) data.insert(data.end(), c.begin(), c.end());
  SpectralField f(grid, static_cast<int>(comps.size()), std::move(data));
  if (options.dealias) truncate_two_thirds(f);
  return f;
}

/// Σ_k iξ_k T_ik for a tensor stored as dims×dims component fields.
SpectralField tensor_divergence(const GridSpec& grid, const std::vector<SpectralField>& rows) {
  const auto& table = lattice(grid);
  const int d = grid.dims();
  SpectralField out(grid, d);
  for (int i = 0; i < d; ++i) {
    for (std::size_t x = 0; x < grid.size(); ++x) {
      if (table.nyquist[x]) continue;
      cplx acc{};
      for (int k = 0; k < d; ++k) acc += cplx{0.0, double(table.freq[x][k])} * rows[i].at(k, x);
      out.at(i, x) = acc;
    }
  }
  return out;
}

/// Symmetric part of u⊗v at one node, as dims rows of dims components.
std::vector<SpectralField> symmetric_tensor(const PaddedProduct& pp, const SpectralField& u,
                                            const SpectralField& v, const BilinearOptions& options,
                                            bool same) {
  const GridSpec& grid = u.grid();
  const int d = u.components();
  const auto eu = evaluate_all(pp, u);
  const auto ev = same ? eu : evaluate_all(pp, v);
  std::vector<std::vector<std::vector<cplx>>> t(d, std::vector<std::vector<cplx>>(d));
  for (int i = 0; i < d; ++i)
    for (int k = i; k < d; ++k) {
      t[i][k] = symmetric_product(pp, eu[i], ev[k], ev[i], eu[k]);
      if (k != i) t[k][i] = t[i][k];
    }
  std::vector<SpectralField> rows;
  for (int i = 0; i < d; ++i) rows.push_back(as_field(grid, std::move(t[i]), options));
  return rows;
}

std::vector<double> solver_times(const SolverConfig& config) { return config.time.nodes(); }

/// Zero-mean copy; rejects a mean above rounding level.
SpectralField centered(const SpectralField& u0, std::vector<std::string>& notes) {
  SpectralField out = u0;
  const double mean = max_zero_mode(out);
  if (mean > kMeanTolerance * std::max(1.0, out.max_abs()))
    throw DomainError("data must have zero mean");
  if (mean > 0.0) {
    remove_mean(out);
    notes.push_back("removed rounding-level mean " + detail::format_double(mean));
  }
  return out;
}

ExponentField solver_exponent(const SolverConfig& config, const GridSpec& grid) {
  return ExponentField::from_recipe(config.p, grid);
}

RandomFieldSpec calibration_spec(System system, const GridSpec& grid, std::uint64_t index) {
  RandomFieldSpec spec;
  spec.components = system == System::navier_stokes ? 3 : 1;
  spec.inner = 1.0;
  spec.outer = grid.n() / 4.0;
  spec.slope = index % 2 == 0 ? 0.0 : 2.0;
  spec.real = true;
  spec.solenoidal = system == System::navier_stokes;
  return spec;
}

TimeSeriesField system_bilinear(System system, const TimeSeriesField& u, const TimeSeriesField& v,
                                const BilinearOptions& options) {
  return system == System::navier_stokes ? ns_bilinear(u, v, options)
                                         : ks_bilinear(u, v, options);
}

/// The operator the Picard engine iterates: -B for Navier–Stokes, +B for Keller–Segel.
auto signed_bilinear(System system, const BilinearOptions& options) {
  return [system, options](const TimeSeriesField& u, const TimeSeriesField& v) {
    TimeSeriesField b = system_bilinear(system, u, v, options);
    if (system == System::navier_stokes) b *= -1.0;
    return b;
  };
}

}  // namespace

std::string to_string(System s) {
  return s == System::navier_stokes ? "navier-stokes" : "keller-segel";
}

double critical_offset(System s) { return s == System::navier_stokes ? 2.0 : 1.0; }

TimeSeriesField ns_bilinear(const TimeSeriesField& u, const TimeSeriesField& v,
                            const BilinearOptions& options) {
  require_pair(u, v, 3);
  if (u.grid().dims() != 3) throw DomainError("Navier-Stokes needs a three-dimensional grid");
  require_zero_mean(u);
  require_zero_mean(v);
  require_solenoidal(u);
  require_solenoidal(v);
  const bool same = &u == &v;
  const PaddedProduct pp(u.grid());
  std::vector<SpectralField> forcing;
  forcing.reserve(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    const auto rows = symmetric_tensor(pp, u[k], v[k], options, same);
    forcing.push_back(leray_project(tensor_divergence(u.grid(), rows)));
  }
  return duhamel_series(TimeSeriesField(u.times(), std::move(forcing), u.quadrature()));
}

namespace {

/// (u∇ψ_v + v∇ψ_u)/2 at one node.
SpectralField ks_flux(const PaddedProduct& pp, const SpectralField& u, const SpectralField& v,
                      const BilinearOptions& options, bool same) {
  const auto gu = gradient(volume_potential(u));
  const auto eu = pp.evaluate(u.component(0));
  const auto egu = evaluate_all(pp, gu);
  std::vector<std::vector<cplx>> flux;
  if (same) {
    for (const auto& g : egu) flux.push_back(symmetric_product(pp, eu, g, eu, g));
  } else {
    const auto gv = gradient(volume_potential(v));
    const auto ev = pp.evaluate(v.component(0));
    const auto egv = evaluate_all(pp, gv);
    for (std::size_t c = 0; c < egu.size(); ++c)
      flux.push_back(symmetric_product(pp, eu, egv[c], ev, egu[c]));
  }
  return as_field(u.grid(), std::move(flux), options);
}

}  // namespace

TimeSeriesField ks_bilinear(const TimeSeriesField& u, const TimeSeriesField& v,
                            const BilinearOptions& options) {
  require_pair(u, v, 1);
  require_zero_mean(u);
  require_zero_mean(v);
  const bool same = &u == &v;
  const PaddedProduct pp(u.grid());
  std::vector<SpectralField> forcing;
  forcing.reserve(u.size());
  for (std::size_t k = 0; k < u.size(); ++k)
    forcing.push_back(divergence(ks_flux(pp, u[k], v[k], options, same)));
  return duhamel_series(TimeSeriesField(u.times(), std::move(forcing), u.quadrature()));
}

SpectralField ks_direct_flux(const SpectralField& u, const BilinearOptions& options) {
  if (u.components() != 1) throw DomainError("density must be scalar");
  const PaddedProduct pp(u.grid());
  return ks_flux(pp, u, u, options, true);
}

SpectralField ks_symmetric_form(const SpectralField& u, const BilinearOptions& options) {
  if (u.components() != 1) throw DomainError("density must be scalar");
  const GridSpec& grid = u.grid();
  const PaddedProduct pp(grid);
  const auto g = gradient(volume_potential(u));
  auto rows = symmetric_tensor(pp, g, g, options, true);
  const int d = grid.dims();
  // ½|∇ψ|² from the diagonal, subtracted on the diagonal.
  SpectralField half_energy(grid, 1);
  for (int k = 0; k < d; ++k)
    for (std::size_t x = 0; x < grid.size(); ++x) half_energy.at(0, x) += 0.5 * rows[k].at(k, x);
  for (int k = 0; k < d; ++k)
    for (std::size_t x = 0; x < grid.size(); ++x) rows[k].at(k, x) -= half_energy.at(0, x);
  SpectralField out = tensor_divergence(grid, rows);
  out *= -1.0;
  return out;
}

double SpaceNorms::max() const noexcept { return std::max({variable, integrable, bounded}); }

SolutionSpace::SolutionSpace(System system, ExponentField p, double rho, DyadicPartition partition)
    : system_(system),
      p_(std::move(p)),
      rho_(rho),
      partition_(std::move(partition)),
      s_data_(p_.map([a = critical_offset(system)](double q) { return a - 3.0 / q; },
                     "critical regularity", ExponentRole::regularity)),
      s_variable_(p_.map(
          [a = critical_offset(system), rho](double q) {
            return a - 3.0 / q + (std::isinf(rho) ? 0.0 : 2.0 / rho);
          },
          "critical regularity plus 2/rho", ExponentRole::regularity)) {
  if (!(rho >= 1.0)) throw DomainError("time exponent rho must be at least 1");
  if (!(p_.grid() == partition_.grid())) throw DomainError("exponent and partition grids differ");
}

SpaceNorms SolutionSpace::norms(const TimeSeriesField& u) const {
  const double a = critical_offset(system_);
  SpaceNorms out;
  out.variable = chemin_lerner_norm(u, rho_, s_variable_, p_, 1.0, partition_).value;
  out.integrable = chemin_lerner_norm(u, 1.0, a + 0.5, 2.0, 1.0, partition_).value;
  out.bounded = chemin_lerner_norm(u, kInf, a - 1.5, 2.0, 1.0, partition_).value;
  return out;
}

double SolutionSpace::data_norm(const SpectralField& u0,
                                const std::optional<TimeSeriesField>& f) const {
  double total = variable_fourier_besov_norm(u0, s_data_, p_, 1.0, partition_).value;
  if (f) {
    const double a = critical_offset(system_);
    total += chemin_lerner_norm(*f, 1.0, s_data_, p_, 1.0, partition_).value;
    total += chemin_lerner_norm(*f, 1.0, a - 1.5, 2.0, 1.0, partition_).value;
  }
  return total;
}

std::vector<std::string> SolutionSpace::describe() const {
  const double a = critical_offset(system_);
  const std::string rho = std::isinf(rho_) ? "inf" : detail::format_double(rho_);
  return {
      "L^" + rho + "_T FB^{" + detail::format_double(a) + "-3/p(x)+2/" + rho + "}_{p(x),1}",
      "L^1_T FB^{" + detail::format_double(a + 0.5) + "}_{2,1}",
      "L^inf_T FB^{" + detail::format_double(a - 1.5) + "}_{2,1}",
  };
}

BilinearCalibration calibrate_bilinear(const SolutionSpace& space, const std::vector<double>& times,
                                       const BilinearOptions& options, int trials,
                                       std::uint64_t seed) {
  if (trials < 1) throw DomainError("calibration needs at least one trial");
  const GridSpec& grid = space.partition().grid();
  BilinearCalibration out;
  for (int t = 0; t < trials; ++t) {
    const auto i = static_cast<std::uint64_t>(2 * t);
    const auto u = heat_propagate(random_field(grid, calibration_spec(space.system(), grid, i), seed, i),
                                  times);
    const auto v = heat_propagate(
        random_field(grid, calibration_spec(space.system(), grid, i + 1), seed, i + 1), times);
    const double denom = space.norm(u) * space.norm(v);
    const double ratio = space.norm(system_bilinear(space.system(), u, v, options)) / denom;
    out.ratios.push_back(ratio);
    out.constant = std::max(out.constant, ratio);
  }
  return out;
}

TimeSeriesField free_evolution(System system, const SpectralField& u0,
                               const std::optional<TimeSeriesField>& f,
                               const std::vector<double>& times) {
  TimeSeriesField y = heat_propagate(u0, times);
  if (f) {
    if (f->times() != times) throw DomainError("forcing must live on the solver time grid");
    if (!f->same_shape(y)) throw DomainError("forcing and data have different shapes");
    TimeSeriesField g = *f;
    if (system == System::navier_stokes)
      for (std::size_t k = 0; k < g.size(); ++k) g[k] = leray_project(g[k]);
    y += duhamel_series(g);
  }
  return y;
}

SmallnessThreshold smallness_threshold(const SolverConfig& config, int trials) {
  const GridSpec& grid = config.grid;
  const SolutionSpace space(config.system, solver_exponent(config, grid), config.rho,
                            build_partition(grid));
  const auto times = solver_times(config);
  SmallnessThreshold out;
  for (int t = 0; t < trials; ++t) {
    const auto i = static_cast<std::uint64_t>(2 * t);
    const auto u0 = random_field(grid, calibration_spec(config.system, grid, i), config.seed, i);
    auto f0 = random_field(grid, calibration_spec(config.system, grid, i + 1), config.seed, i + 1);
    const auto f = TimeSeriesField::constant(f0, times);
    const double ratio =
        space.norm(free_evolution(config.system, u0, f, times)) / space.data_norm(u0, f);
    out.linear_ratios.push_back(ratio);
    out.linear_constant = std::max(out.linear_constant, ratio);
  }
  const auto bilinear =
      calibrate_bilinear(space, times, config.bilinear, trials, config.seed + 0x9e37);
  out.bilinear_ratios = bilinear.ratios;
  out.bilinear_constant = bilinear.constant;
  out.epsilon = 1.0 / (4.0 * out.linear_constant * out.bilinear_constant);
  return out;
}

double scale_data(const SolverConfig& config, SpectralField& u0, std::optional<TimeSeriesField>& f,
                  double target) {
  if (!(target > 0.0)) throw DomainError("target norm must be positive");
  const GridSpec& grid = u0.grid();
  const SolutionSpace space(config.system, solver_exponent(config, grid), config.rho,
                            build_partition(grid));
  const double current = space.norm(free_evolution(config.system, u0, f, solver_times(config)));
  if (!(current > 0.0)) throw DomainError("cannot scale zero data to a positive norm");
  const double factor = target / current;
  u0 *= factor;
  if (f) *f *= factor;
  return factor;
}

bool RunRecord::passes() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.second; });
}

RunRecord solve(const SolverConfig& config, const SpectralField& data,
                const std::optional<TimeSeriesField>& f) {
  RunRecord rec;
  rec.system = config.system;
  const System system = config.system;
  const bool ns = system == System::navier_stokes;
  const GridSpec& grid = data.grid();
  if (!(grid == config.grid)) throw DomainError("data grid differs from the configured grid");
  if (ns) {
    if (data.components() != 3 || grid.dims() != 3)
      throw DomainError("Navier-Stokes data must be a 3-vector field on a 3-d grid");
    if (divergence_defect(data) > kDivergenceTolerance)
      throw DomainError("Navier-Stokes data must be divergence-free");
  } else if (data.components() != 1) {
    throw DomainError("Keller-Segel data must be a scalar field");
  }
  const SpectralField u0 = centered(data, rec.notes);

  const auto times = solver_times(config);
  const SolutionSpace space(system, solver_exponent(config, grid), config.rho,
                            build_partition(grid));
  rec.space = space.describe();
  const TimeSeriesField y = free_evolution(system, u0, f, times);
  rec.data_norm = space.data_norm(u0, f);

  rec.c_fit = config.c_fit > 0.0
                  ? config.c_fit
                  : calibrate_bilinear(space, times, config.bilinear, config.calibration_trials,
                                       config.seed)
                        .constant;
  PicardOptions options = config.picard;
  options.c_fit = rec.c_fit;
  rec.eta = options.eta;

  double worst_divergence = 0.0;
  double worst_mean = 0.0;
  SpaceNorms last;
  auto norm = [&](const TimeSeriesField& u) {
    last = space.norms(u);
    return last.max();
  };
  auto observe = [&](const TimeSeriesField& u, double) {
    rec.iterate_components.push_back(last);
    for (const auto& s : u.snapshots()) {
      worst_mean = std::max(worst_mean, max_zero_mode(s));
      if (ns) worst_divergence = std::max(worst_divergence, divergence_defect(s));
    }
  };
  auto result = picard_solve(y, signed_bilinear(system, config.bilinear), norm, options, observe);

  rec.iterate_norms = result.iterate_norms;
  rec.increments = result.increments;
  rec.contraction_rates = result.rates;
  rec.iterations = result.iterations;
  rec.converged = result.converged;
  rec.residual = result.residual;
  rec.y_norm = result.y_norm;
  rec.contraction_bound = result.contraction_bound;
  rec.certified = result.certified;
  rec.final_norms = rec.iterate_components.back();
  const int j_min = space.partition().j_min();
  rec.tail_bound = std::exp(-kHeatKappa * std::ldexp(1.0, 2 * j_min) * config.time.horizon);

  rec.verdicts.emplace_back("converged", rec.converged);
  rec.verdicts.emplace_back("residual_below_tolerance", rec.residual <= 10.0 * options.tolerance);
  rec.verdicts.emplace_back("certified", rec.certified);
  if (rec.certified) {
    rec.verdicts.emplace_back("norm_within_two_eta",
                              rec.final_norms.max() <= 2.0 * rec.eta * (1.0 + 1e-9));
    rec.verdicts.emplace_back("contraction_within_bound",
                              result.max_rate() <= rec.contraction_bound + 0.05);
  } else {
    rec.notes.push_back("outside the smallness regime: ||y|| = " +
                        detail::format_double(rec.y_norm) + ", eta = " +
                        detail::format_double(rec.eta) + ", 4 eta C_fit = " +
                        detail::format_double(rec.contraction_bound));
  }
  if (ns) {
    rec.verdicts.emplace_back("divergence_free", worst_divergence <= kDivergenceTolerance);
    rec.diagnostics.emplace_back("max_divergence_defect", worst_divergence);
    rec.notes.push_back("iteration u = y - B(u,u), B(u,v) = int e^{(t-s)Lap} P div(u (x) v) ds");
  } else {
    rec.verdicts.emplace_back("zero_mode_preserved", worst_mean == 0.0);
    rec.diagnostics.emplace_back("max_zero_mode", worst_mean);
    double worst_form = 0.0;
    for (const auto& s : result.solution.snapshots()) {
      const auto direct = ks_direct_flux(s, config.bilinear);
      const double scale = direct.max_abs();
      if (scale == 0.0) continue;
      worst_form = std::max(worst_form,
                            (direct - ks_symmetric_form(s, config.bilinear)).max_abs() / scale);
    }
    rec.verdicts.emplace_back("symmetric_form_agrees", worst_form <= 1e-9);
    rec.diagnostics.emplace_back("symmetric_form_defect", worst_form);
    rec.notes.push_back("iteration u = y + B(u,u), B(u,v) = int e^{(t-s)Lap} div(u grad(-Lap)^{-1} v) ds");
  }
  rec.diagnostics.emplace_back("max_contraction_rate", result.max_rate());
  rec.diagnostics.emplace_back("norm_variable", rec.final_norms.variable);
  rec.diagnostics.emplace_back("norm_integrable", rec.final_norms.integrable);
  rec.diagnostics.emplace_back("norm_bounded", rec.final_norms.bounded);
  rec.solution = std::move(result.solution);
  return rec;
}

RunRecord solve_ns(const SolverConfig& config, const SpectralField& u0,
                   const std::optional<TimeSeriesField>& f) {
  SolverConfig c = config;
  c.system = System::navier_stokes;
  return solve(c, u0, f);
}

RunRecord solve_ks(const SolverConfig& config, const SpectralField& u0,
                   const std::optional<TimeSeriesField>& f) {
  SolverConfig c = config;
  c.system = System::keller_segel;
  return solve(c, u0, f);
}

ContinuityReport continuity_check(const SolverConfig& config, const SpectralField& u0,
                                  const SpectralField& perturbation,
                                  const std::optional<TimeSeriesField>& f) {
  const RunRecord a = solve(config, u0, f);
  SolverConfig fixed = config;
  fixed.c_fit = a.c_fit;
  const RunRecord b = solve(fixed, u0 + perturbation, f);
  const auto times = solver_times(config);
  const SolutionSpace space(config.system, solver_exponent(config, u0.grid()), config.rho,
                            build_partition(u0.grid()));
  ContinuityReport out;
  out.solution_distance = space.norm(*a.solution - *b.solution);
  out.data_distance = space.norm(heat_propagate(perturbation, times));
  out.bound = out.data_distance / (1.0 - a.contraction_bound);
  out.passes = a.certified && b.certified && a.converged && b.converged &&
               out.solution_distance <= 1.1 * out.bound;
  return out;
}

UniquenessReport uniqueness_check(const SolverConfig& config, const SpectralField& u0,
                                  const SpectralField& offset,
                                  const std::optional<TimeSeriesField>& f) {
  const RunRecord a = solve(config, u0, f);
  const GridSpec& grid = u0.grid();
  const auto times = solver_times(config);
  const SolutionSpace space(config.system, solver_exponent(config, grid), config.rho,
                            build_partition(grid));
  std::vector<std::string> notes;
  const TimeSeriesField y = free_evolution(config.system, centered(u0, notes), f, times);
  const TimeSeriesField start = y + heat_propagate(offset, times);
  PicardOptions options = config.picard;
  options.c_fit = a.c_fit;
  auto norm = [&](const TimeSeriesField& u) { return space.norm(u); };
  const auto b = picard_solve_from(y, start, signed_bilinear(config.system, config.bilinear), norm,
                                   options);
  UniquenessReport out;
  out.start_distance = space.norm(start - y);
  out.distance = space.norm(*a.solution - b.solution);
  out.passes = a.converged && b.converged && b.final_norm() <= 2.0 * options.eta &&
               out.distance <= 10.0 * options.tolerance;
  return out;
}

ScalingReport scaling_check(System system, const SpectralField& field, int lambda, double p,
                            const DyadicPartition& part) {
  const GridSpec& grid = field.grid();
  if (grid.dims() != 3) throw DomainError("scaling check needs a three-dimensional grid");
  if (lambda < 1 || (lambda & (lambda - 1)) != 0)
    throw DomainError("scaling factor must be a power of two");
  ScalingReport out;
  out.system = system;
  out.lambda = lambda;
  out.p = p;
  const double a = critical_offset(system);
  const double s = a - 3.0 / p;
  const double factor = std::pow(double(lambda), -a);
  SpectralField scaled(grid, field.components());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bool nonzero = false;
    for (int c = 0; c < field.components(); ++c) nonzero = nonzero || field.at(c, i) != cplx{};
    if (!nonzero) continue;
    Freq xi = grid.frequency(i);
    for (auto& k : xi) {
      k *= lambda;
      if (2 * std::abs(k) >= grid.n())
        throw DomainError("rescaled support leaves the resolved band");
    }
    const std::size_t j = grid.flat_index(xi);
    for (int c = 0; c < field.components(); ++c) scaled.at(c, j) = factor * field.at(c, i);
  }
  NormOptions options;
  options.measure_scale = std::pow(double(lambda), 3.0);
  out.original = fourier_besov_norm(field, s, p, 1.0, part).value;
  out.rescaled = fourier_besov_norm(scaled, s, p, 1.0, part, options).value;
  out.relative_error = std::abs(out.rescaled - out.original) / out.original;
  out.passes = out.relative_error <= 1e-12;
  return out;
}

std::string to_string(InitialKind k) {
  switch (k) {
    case InitialKind::shell: return "shell";
    case InitialKind::mode: return "mode";
    case InitialKind::zero: return "zero";
    case InitialKind::bump_pair: return "bump-pair";
    case InitialKind::taylor_green: return "taylor-green";
  }
  return "shell";
}

std::optional<InitialKind> parse_initial_kind(const std::string& s) {
  for (auto k : {InitialKind::shell, InitialKind::mode, InitialKind::zero, InitialKind::bump_pair,
                 InitialKind::taylor_green})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

namespace {

SpectralField from_physical(PhysicalField f) {
  SpectralField g = forward_transform(f);
  clear_nyquist(g);
  make_hermitian(g);
  remove_mean(g);
  return g;
}

SpectralField mode_data(System system, const GridSpec& grid, const Freq& xi, double amplitude) {
  const std::size_t i = grid.flat_index(xi);
  if (grid.frequency(i) != xi) throw DomainError("mode lies outside the grid");
  if (xi == Freq{0, 0, 0}) throw DomainError("mode must be nonzero");
  if (grid.touches_nyquist(i)) throw DomainError("mode touches the Nyquist plane");
  if (system == System::keller_segel) return single_mode(grid, xi, amplitude);
  // Polarization orthogonal to ξ: ξ × e for the axis e least aligned with ξ.
  int axis = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(xi[k]) < std::abs(xi[axis])) axis = k;
  std::array<double, 3> e{0, 0, 0};
  e[axis] = 1.0;
  std::array<double, 3> w{xi[1] * e[2] - xi[2] * e[1], xi[2] * e[0] - xi[0] * e[2],
                          xi[0] * e[1] - xi[1] * e[0]};
  const double len = std::hypot(w[0], w[1], w[2]);
  SpectralField out(grid, 3);
  for (int c = 0; c < 3; ++c)
    out += single_mode(grid, xi, cplx{amplitude * w[c] / len, 0.0}, 3, c);
  return out;
}

SpectralField modes_data(System system, const GridSpec& grid, const std::vector<Freq>& modes,
                         double amplitude) {
  if (modes.empty()) throw DomainError("mode list is empty");
  SpectralField out(grid, system == System::navier_stokes ? 3 : 1);
  for (const auto& xi : modes) out += mode_data(system, grid, xi, amplitude);
  return out;
}

}  // namespace

SpectralField make_initial(System system, const GridSpec& grid, const InitialSpec& spec) {
  const bool ns = system == System::navier_stokes;
  const int components = ns ? 3 : 1;
  switch (spec.kind) {
    case InitialKind::zero: return SpectralField(grid, components);
    case InitialKind::mode: return modes_data(system, grid, spec.modes, spec.amplitude);
    case InitialKind::shell: {
      RandomFieldSpec r;
      r.components = components;
      r.inner = spec.inner;
      r.outer = spec.outer;
      r.slope = spec.slope;
      r.real = true;
      r.solenoidal = ns;
      SpectralField out = random_field(grid, r, spec.seed, 0);
      out *= spec.amplitude;
      return out;
    }
    case InitialKind::bump_pair: {
      if (ns) throw DomainError("bump-pair data is scalar; use it for Keller-Segel");
      const double sigma = 0.5;
      const std::array<double, 3> c1{kTwoPi / 4, kTwoPi / 2, kTwoPi / 2};
      const std::array<double, 3> c2{3 * kTwoPi / 4, kTwoPi / 2, kTwoPi / 2};
      PhysicalField f(grid, 1);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto x = grid.position(i);
        const double d1 = torus_distance(x, c1, grid.dims());
        const double d2 = torus_distance(x, c2, grid.dims());
        f.at(0, i) = spec.amplitude * (std::exp(-d1 * d1 / (2 * sigma * sigma)) -
                                       std::exp(-d2 * d2 / (2 * sigma * sigma)));
      }
      return from_physical(std::move(f));
    }
    case InitialKind::taylor_green: {
      if (!ns) throw DomainError("Taylor-Green data is a velocity field; use it for Navier-Stokes");
      if (grid.dims() != 3) throw DomainError("Taylor-Green data needs a three-dimensional grid");
      PhysicalField f(grid, 3);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto x = grid.position(i);
        f.at(0, i) = spec.amplitude * std::sin(x[0]) * std::cos(x[1]) * std::cos(x[2]);
        f.at(1, i) = -spec.amplitude * std::cos(x[0]) * std::sin(x[1]) * std::cos(x[2]);
      }
      return from_physical(std::move(f));
    }
  }
  throw DomainError("unknown initial data kind");
}

std::string to_string(Envelope e) { return e == Envelope::constant ? "constant" : "exp-decay"; }

std::optional<Envelope> parse_envelope(const std::string& s) {
  if (s == "constant") return Envelope::constant;
  if (s == "exp-decay") return Envelope::exp_decay;
  return std::nullopt;
}

std::string to_string(ForcingKind k) { return k == ForcingKind::shell ? "shell" : "mode"; }

std::optional<ForcingKind> parse_forcing_kind(const std::string& s) {
  if (s == "shell") return ForcingKind::shell;
  if (s == "mode") return ForcingKind::mode;
  return std::nullopt;
}

TimeSeriesField make_forcing(System system, const GridSpec& grid, const ForcingSpec& spec,
                             const std::vector<double>& times) {
  const bool ns = system == System::navier_stokes;
  SpectralField shape(grid, ns ? 3 : 1);
  if (spec.kind == ForcingKind::mode) {
    shape = modes_data(system, grid, spec.modes, 1.0);
  } else {
    RandomFieldSpec r;
    r.components = ns ? 3 : 1;
    r.inner = spec.inner;
    r.outer = spec.outer;
    r.real = true;
    r.solenoidal = ns;
    shape = random_field(grid, r, spec.seed, 0);
  }
  std::vector<SpectralField> snaps;
  snaps.reserve(times.size());
  for (double t : times) {
    const double envelope = spec.envelope == Envelope::constant ? 1.0 : std::exp(-spec.rate * t);
    SpectralField s = shape;
    s *= spec.amplitude * envelope;
    snaps.push_back(std::move(s));
  }
  return TimeSeriesField(times, std::move(snaps));
}

}  // namespace fbl
