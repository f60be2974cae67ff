#include "fbl/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fbl/errors.hpp"
#include "format.hpp"

namespace fbl {
namespace {

std::string physical_measure(const GridSpec& g) {
  return "physical cell (2π/" + std::to_string(g.n()) + ")^" + std::to_string(g.dims());
}

std::string frequency_measure(const GridSpec& g, const NormOptions& options) {
  std::string out = "frequency lattice weight (2π/" + std::to_string(g.n()) + ")^" +
                    std::to_string(g.dims());
  if (options.measure_scale != 1.0) out += " × " + detail::format_double(options.measure_scale);
  return out;
}

std::string index_text(double v) {
  return std::isinf(v) ? std::string("inf") : detail::format_double(v);
}

/// Root t of F(t) = log Σ_i exp(L_i - q_i t), all q_i > 0. F is convex and
/// decreasing, so Newton started left of the root approaches it monotonically.
double solve_log_modular(const std::vector<double>& L, const std::vector<double>& q) {
  const auto [qlo, qhi] = std::minmax_element(q.begin(), q.end());
  std::vector<double> work(L.size());
  auto eval = [&](double t, double& slope) {
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < L.size(); ++i) {
      work[i] = L[i] - q[i] * t;
      top = std::max(top, work[i]);
    }
    double sum = 0.0, weighted = 0.0;
    for (std::size_t i = 0; i < L.size(); ++i) {
      const double e = std::exp(work[i] - top);
      sum += e;
      weighted += q[i] * e;
    }
    slope = -weighted / sum;
    return top + std::log(sum);
  };

  double slope = 0.0;
  const double m0 = eval(0.0, slope);
  double lo = m0 >= 0.0 ? m0 / *qhi : m0 / *qlo;
  double hi = m0 >= 0.0 ? m0 / *qlo : m0 / *qhi;
  if (lo == hi) return lo;
  double t = lo;
  for (int iter = 0; iter < 200; ++iter) {
    const double value = eval(t, slope);
    if (value == 0.0) return t;
    if (value < 0.0) {
      // Rounding put us right of the root; pull back by bisection.
      hi = t;
      t = 0.5 * (lo + hi);
      continue;
    }
    lo = t;
    double next = t - value / slope;
    if (!(next > t) || next > hi) next = 0.5 * (t + hi);
    if (std::abs(next - t) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t)))
      return next;
    t = next;
  }
  return t;
}

struct BlockSamples {
  std::vector<double> a;
  std::vector<double> p;
  std::vector<double> r;
};

double magnitude_at(const SpectralField& f, std::size_t i) {
  if (f.components() == 1) return std::abs(f.at(0, i));
  double acc = 0.0;
  for (int c = 0; c < f.components(); ++c) acc += std::norm(f.at(c, i));
  return std::sqrt(acc);
}

void require_grid(const SpectralField& f, const DyadicPartition& part) {
  if (f.grid() != part.grid()) throw DomainError("field and partition use different grids");
}

void require_exponent_grid(const GridSpec& g, const ExponentField& e) {
  if (e.grid() != g) throw DomainError("exponent field and data use different grids");
}

double block_lebesgue(const std::vector<double>& a, double p, double weight) {
  if (std::isinf(p)) return a.empty() ? 0.0 : *std::max_element(a.begin(), a.end());
  double top = 0.0;
  for (double v : a) top = std::max(top, v);
  if (top == 0.0) return 0.0;
  double acc = 0.0;
  for (double v : a) acc += std::pow(v / top, p);
  return top * std::pow(acc * weight, 1.0 / p);
}

NormValue besov_value(const std::vector<double>& blocks, double r, const DyadicPartition& part,
                      NormMethod method, double tolerance, std::string measure,
                      std::vector<std::string> exponents) {
  NormValue out;
  out.value = sequence_norm(blocks, r);
  out.method = method;
  out.tolerance = tolerance;
  out.measure = std::move(measure);
  out.has_range = true;
  out.j_min = part.j_min();
  out.j_max = part.j_max();
  out.exponents = std::move(exponents);
  return out;
}

}  // namespace

std::string to_string(NormMethod m) {
  switch (m) {
    case NormMethod::closed_form: return "closed-form";
    case NormMethod::quadrature: return "quadrature";
    case NormMethod::bisection: return "bisection";
  }
  return "?";
}

double modular(std::span<const double> a, std::span<const double> q, double weight) {
  if (a.size() != q.size()) throw DomainError("modular needs one exponent per sample");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0.0) acc += std::pow(a[i], q[i]);
  return acc * weight;
}

double modular(const PhysicalField& f, const ExponentField& p) {
  require_exponent_grid(f.grid(), p);
  const auto mag = f.magnitude();
  return modular(mag, p.values(), f.grid().cell_volume());
}

NormValue luxemburg_norm(std::span<const double> a, std::span<const double> q, double weight) {
  if (a.size() != q.size()) throw DomainError("Luxemburg norm needs one exponent per sample");
  if (!(weight > 0.0)) throw DomainError("Luxemburg norm needs a positive weight");
  NormValue out;
  out.method = NormMethod::closed_form;
  double top = 0.0;
  bool constant = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(q[i] > 0.0) || !std::isfinite(q[i])) throw DomainError("Luxemburg exponents must be positive");
    if (a[i] < 0.0 || !std::isfinite(a[i])) throw DomainError("Luxemburg samples must be finite and nonnegative");
    top = std::max(top, a[i]);
    if (q[i] != q[0]) constant = false;
  }
  if (top == 0.0) return out;
  if (constant) {
    double acc = 0.0;
    for (double v : a) acc += std::pow(v / top, q[0]);
    out.value = top * std::pow(acc * weight, 1.0 / q[0]);
    out.tolerance = 4.0 * std::numeric_limits<double>::epsilon();
    return out;
  }
  std::vector<double> L, qs;
  const double logw = std::log(weight);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    L.push_back(logw + q[i] * std::log(a[i] / top));
    qs.push_back(q[i]);
  }
  out.value = top * std::exp(solve_log_modular(L, qs));
  out.method = NormMethod::bisection;
  out.tolerance = kNormTolerance;
  return out;
}

NormValue variable_lebesgue_norm(const PhysicalField& f, const ExponentField& p) {
  require_exponent_grid(f.grid(), p);
  const auto mag = f.magnitude();
  auto out = luxemburg_norm(mag, p.values(), f.grid().cell_volume());
  out.measure = physical_measure(f.grid());
  out.exponents = {"p=" + p.descriptor()};
  return out;
}

NormValue lebesgue_norm(const PhysicalField& f, double p) {
  if (!(p >= 1.0)) throw DomainError("Lebesgue index must be at least 1");
  const auto mag = f.magnitude();
  NormValue out;
  out.value = block_lebesgue(mag, p, f.grid().cell_volume());
  out.method = NormMethod::closed_form;
  out.tolerance = 4.0 * std::numeric_limits<double>::epsilon();
  out.measure = physical_measure(f.grid());
  out.exponents = {"p=" + index_text(p)};
  return out;
}

double fourier_lebesgue_norm(const SpectralField& f, double p, const NormOptions& options) {
  if (!(p > 0.0)) throw DomainError("Lebesgue index must be positive");
  std::vector<double> a(f.points());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = magnitude_at(f, i);
  return block_lebesgue(a, p, f.grid().frequency_cell() * options.measure_scale);
}

EstimateReport holder_check(const PhysicalField& f, const PhysicalField& g, const ExponentField& p1,
                            const ExponentField& p2) {
  if (f.grid() != g.grid()) throw DomainError("Hölder check needs fields on one grid");
  require_exponent_grid(f.grid(), p1);
  require_exponent_grid(f.grid(), p2);
  const auto p = harmonic_combination(p1, p2);
  const auto mf = f.magnitude();
  const auto mg = g.magnitude();
  std::vector<double> prod(mf.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = mf[i] * mg[i];
  const double w = f.grid().cell_volume();
  EstimateReport report;
  report.estimate_id = "holder";
  report.add_trial(luxemburg_norm(prod, p.values(), w).value,
                   variable_lebesgue_norm(f, p1).value * variable_lebesgue_norm(g, p2).value);
  report.finalize(1, 1.0);
  report.parameters = {{"p1_minus", p1.p_minus()}, {"p1_plus", p1.p_plus()},
                       {"p2_minus", p2.p_minus()}, {"p2_plus", p2.p_plus()}};
  return report;
}

std::vector<double> besov_blocks(const SpectralField& f, double s, double p,
                                 const DyadicPartition& part, const NormOptions& options) {
  require_grid(f, part);
  if (!(p >= 1.0)) throw DomainError("Fourier–Besov index p must be at least 1");
  const double weight = f.grid().frequency_cell() * options.measure_scale;
  std::vector<double> out;
  std::vector<double> a;
  for (int j = part.j_min(); j <= part.j_max(); ++j) {
    a.clear();
    for (const auto& e : part.block_support(j)) a.push_back(e.weight * magnitude_at(f, e.index));
    out.push_back(std::exp2(j * s) * block_lebesgue(a, p, weight));
  }
  return out;
}

std::vector<double> besov_blocks(const SpectralField& f, const ExponentField& s,
                                 const ExponentField& p, const DyadicPartition& part,
                                 const NormOptions& options) {
  require_grid(f, part);
  require_exponent_grid(f.grid(), s);
  require_exponent_grid(f.grid(), p);
  const double weight = f.grid().frequency_cell() * options.measure_scale;
  std::vector<double> out;
  std::vector<double> a, q;
  for (int j = part.j_min(); j <= part.j_max(); ++j) {
    a.clear();
    q.clear();
    for (const auto& e : part.block_support(j)) {
      a.push_back(std::exp2(j * s.at_frequency(e.index)) * e.weight * magnitude_at(f, e.index));
      q.push_back(p.at_frequency(e.index));
    }
    out.push_back(luxemburg_norm(a, q, weight).value);
  }
  return out;
}

double sequence_norm(const std::vector<double>& blocks, double r) {
  if (!(r >= 1.0)) throw DomainError("sequence index r must be at least 1");
  if (blocks.empty()) return 0.0;
  const double top = *std::max_element(blocks.begin(), blocks.end());
  if (std::isinf(r) || top == 0.0) return top;
  double acc = 0.0;
  for (double b : blocks) acc += std::pow(b / top, r);
  return top * std::pow(acc, 1.0 / r);
}

NormValue fourier_besov_norm(const SpectralField& f, double s, double p, double r,
                             const DyadicPartition& part, const NormOptions& options) {
  return besov_value(besov_blocks(f, s, p, part, options), r, part, NormMethod::closed_form,
                     4.0 * std::numeric_limits<double>::epsilon() * part.block_count(),
                     frequency_measure(f.grid(), options),
                     {"s=" + detail::format_double(s), "p=" + index_text(p), "r=" + index_text(r)});
}

NormValue variable_fourier_besov_norm(const SpectralField& f, const ExponentField& s,
                                      const ExponentField& p, double r,
                                      const DyadicPartition& part, const NormOptions& options) {
  const bool constant = s.is_constant() && p.is_constant();
  return besov_value(besov_blocks(f, s, p, part, options), r, part,
                     constant ? NormMethod::closed_form : NormMethod::bisection,
                     constant ? 1e-14 : kNormTolerance, frequency_measure(f.grid(), options),
                     {"s=" + s.descriptor(), "p=" + p.descriptor(), "r=" + index_text(r)});
}

NormValue variable_fourier_besov_norm(const SpectralField& f, const ExponentField& s,
                                      const ExponentField& p, const ExponentField& r,
                                      const DyadicPartition& part, const NormOptions& options) {
  require_grid(f, part);
  require_exponent_grid(f.grid(), s);
  require_exponent_grid(f.grid(), p);
  require_exponent_grid(f.grid(), r);
  const double logw = std::log(f.grid().frequency_cell() * options.measure_scale);

  std::vector<BlockSamples> blocks;
  double largest = 0.0;
  for (int j = part.j_min(); j <= part.j_max(); ++j) {
    BlockSamples b;
    for (const auto& e : part.block_support(j)) {
      const double a = std::exp2(j * s.at_frequency(e.index)) * e.weight * magnitude_at(f, e.index);
      if (a == 0.0) continue;
      b.a.push_back(a);
      b.p.push_back(p.at_frequency(e.index));
      b.r.push_back(r.at_frequency(e.index));
      largest = std::max(largest, a);
    }
    if (!b.a.empty()) blocks.push_back(std::move(b));
  }

  NormValue out = besov_value({}, 1.0, part, NormMethod::bisection, 1e-6,
                              frequency_measure(f.grid(), options),
                              {"s=" + s.descriptor(), "p=" + p.descriptor(), "r=" + r.descriptor()});
  if (blocks.empty()) return out;

  // Σ_j λ_j(μ): λ_j solves Σ_i w (a_i/μ)^{p_i} λ^{-p_i/r_i} = 1.
  auto total = [&](double log_mu) {
    double acc = 0.0;
    std::vector<double> L, q;
    for (const auto& b : blocks) {
      L.resize(b.a.size());
      q.resize(b.a.size());
      for (std::size_t i = 0; i < b.a.size(); ++i) {
        L[i] = logw + b.p[i] * (std::log(b.a[i]) - log_mu);
        q[i] = b.p[i] / b.r[i];
      }
      acc += std::exp(solve_log_modular(L, q));
    }
    return acc;
  };

  double lo = std::log(largest), hi = lo;
  while (total(lo) <= 1.0) lo -= 1.0;
  while (total(hi) > 1.0) hi += 1.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++iter) {
    const double mid = 0.5 * (lo + hi);
    (total(mid) > 1.0 ? lo : hi) = mid;
  }
  out.value = std::exp(0.5 * (lo + hi));
  return out;
}

std::vector<std::vector<double>> chemin_lerner_profiles(const TimeSeriesField& u,
                                                        const ExponentField& s,
                                                        const ExponentField& p,
                                                        const DyadicPartition& part,
                                                        const NormOptions& options) {
  std::vector<std::vector<double>> profiles(static_cast<std::size_t>(part.block_count()),
                                            std::vector<double>(u.size()));
  for (std::size_t k = 0; k < u.size(); ++k) {
    const auto blocks = besov_blocks(u[k], s, p, part, options);
    for (std::size_t j = 0; j < blocks.size(); ++j) profiles[j][k] = blocks[j];
  }
  return profiles;
}

namespace {

NormValue combine_profiles(const TimeSeriesField& u, const std::vector<std::vector<double>>& profiles,
                           double rho, double r, const DyadicPartition& part, NormMethod method,
                           double tolerance, std::string measure, std::vector<std::string> exponents) {
  std::vector<double> blocks;
  for (const auto& prof : profiles) blocks.push_back(time_lebesgue(u.times(), prof, rho, u.quadrature()));
  auto out = besov_value(blocks, r, part, method, tolerance, std::move(measure), std::move(exponents));
  out.exponents.push_back("rho=" + index_text(rho));
  out.time_grid = std::to_string(u.size()) + " nodes on [0, " + detail::format_double(u.horizon()) +
                  "], " + to_string(u.quadrature());
  return out;
}

}  // namespace

NormValue chemin_lerner_norm(const TimeSeriesField& u, double rho, double s, double p, double r,
                             const DyadicPartition& part, const NormOptions& options) {
  std::vector<std::vector<double>> profiles(static_cast<std::size_t>(part.block_count()),
                                            std::vector<double>(u.size()));
  for (std::size_t k = 0; k < u.size(); ++k) {
    const auto blocks = besov_blocks(u[k], s, p, part, options);
    for (std::size_t j = 0; j < blocks.size(); ++j) profiles[j][k] = blocks[j];
  }
  return combine_profiles(u, profiles, rho, r, part,
                          std::isinf(rho) ? NormMethod::closed_form : NormMethod::quadrature, 1e-14,
                          frequency_measure(u.grid(), options),
                          {"s=" + detail::format_double(s), "p=" + index_text(p), "r=" + index_text(r)});
}

NormValue chemin_lerner_norm(const TimeSeriesField& u, double rho, const ExponentField& s,
                             const ExponentField& p, double r, const DyadicPartition& part,
                             const NormOptions& options) {
  const bool constant = s.is_constant() && p.is_constant();
  return combine_profiles(u, chemin_lerner_profiles(u, s, p, part, options), rho, r, part,
                          constant ? NormMethod::quadrature : NormMethod::bisection,
                          constant ? 1e-14 : kNormTolerance, frequency_measure(u.grid(), options),
                          {"s=" + s.descriptor(), "p=" + p.descriptor(), "r=" + index_text(r)});
}

}  // namespace fbl
