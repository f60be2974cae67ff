#pragma once

#include <span>
#include <string>
#include <vector>

#include "fbl/estimate_report.hpp"
#include "fbl/exponents.hpp"
#include "fbl/field.hpp"
#include "fbl/littlewood_paley.hpp"
#include "fbl/time_series.hpp"

namespace fbl {

enum class NormMethod { closed_form, quadrature, bisection };
std::string to_string(NormMethod m);

/// Relative accuracy promised for every root-found norm.
inline constexpr double kNormTolerance = 1e-8;

struct NormValue {
  double value = 0.0;
  NormMethod method = NormMethod::closed_form;
  double tolerance = 0.0;
  /// Integration measure, e.g. "physical cell (2π/n)^3".
  std::string measure;
  bool has_range = false;
  int j_min = 0;
  int j_max = 0;
  std::vector<std::string> exponents;
  std::string time_grid;
};

struct NormOptions {
  /// Extra factor on the frequency-lattice weight (2π/n)^dims; used when a
  /// coefficient sequence is read on a rescaled lattice.
  double measure_scale = 1.0;
};

/// Σ_i w·a_i^{q_i} for a_i ≥ 0.
double modular(std::span<const double> a, std::span<const double> q, double weight);
/// Cell-weighted Σ_x |f(x)|^{p(x)}; vector fields use the Euclidean magnitude.
double modular(const PhysicalField& f, const ExponentField& p);

/// Luxemburg norm inf{λ > 0 : Σ_i w (a_i/λ)^{q_i} ≤ 1}, exponents q_i > 0.
/// Constant exponents use the closed form; otherwise the root of the
/// log-modular is bracketed from q_min/q_max and refined by a safeguarded
/// Newton iteration that stays on the left of the root.
NormValue luxemburg_norm(std::span<const double> a, std::span<const double> q, double weight);

/// ‖f‖_{L^{p(·)}} on the torus with the physical cell measure.
NormValue variable_lebesgue_norm(const PhysicalField& f, const ExponentField& p);
/// Classical ‖f‖_{L^p}; p = ∞ is the maximum.
NormValue lebesgue_norm(const PhysicalField& f, double p);
/// ‖f̂‖_{L^p} over the frequency lattice with weight (2π/n)^dims.
double fourier_lebesgue_norm(const SpectralField& f, double p, const NormOptions& options = {});

/// Hölder inequality ‖fg‖_{p} ≤ C‖f‖_{p1}‖g‖_{p2} for one pair, with
/// 1/p = 1/p1 + 1/p2 built pointwise. The report holds a single trial.
EstimateReport holder_check(const PhysicalField& f, const PhysicalField& g, const ExponentField& p1,
                            const ExponentField& p2);

/// Per-block values 2^{js}‖φ_j f̂‖_{L^p}, j = j_min..j_max (constant indices).
std::vector<double> besov_blocks(const SpectralField& f, double s, double p,
                                 const DyadicPartition& part, const NormOptions& options = {});
/// Per-block values ‖2^{js(ξ)} φ_j f̂‖_{L^{p(ξ)}} with s, p read on the frequency lattice.
std::vector<double> besov_blocks(const SpectralField& f, const ExponentField& s,
                                 const ExponentField& p, const DyadicPartition& part,
                                 const NormOptions& options = {});

/// ℓ^r combination of block values (r = ∞ is the max).
double sequence_norm(const std::vector<double>& blocks, double r);

/// ‖f‖_{FḂ^s_{p,r}} with constant indices; p and r may be ∞.
NormValue fourier_besov_norm(const SpectralField& f, double s, double p, double r,
                             const DyadicPartition& part, const NormOptions& options = {});

/// Variable-exponent Fourier–Besov norm with constant sequence index r.
NormValue variable_fourier_besov_norm(const SpectralField& f, const ExponentField& s,
                                      const ExponentField& p, double r,
                                      const DyadicPartition& part, const NormOptions& options = {});

/// Variable r(·): the mixed sequence-space modular Σ_j λ_j, each λ_j the
/// smallest λ with ρ_p(f_j / λ^{1/r}) ≤ 1, inverted over μ by bisection.
NormValue variable_fourier_besov_norm(const SpectralField& f, const ExponentField& s,
                                      const ExponentField& p, const ExponentField& r,
                                      const DyadicPartition& part, const NormOptions& options = {});

/// Chemin–Lerner norm (Σ_j ‖2^{js}φ_j û‖_{L^ρ_T L^p}^r)^{1/r}, constant indices.
NormValue chemin_lerner_norm(const TimeSeriesField& u, double rho, double s, double p, double r,
                             const DyadicPartition& part, const NormOptions& options = {});
/// Chemin–Lerner norm with variable s(·), p(·) read on the frequency lattice.
NormValue chemin_lerner_norm(const TimeSeriesField& u, double rho, const ExponentField& s,
                             const ExponentField& p, double r, const DyadicPartition& part,
                             const NormOptions& options = {});

/// Per-block time profiles: result[j - j_min][k] = block value at node k.
std::vector<std::vector<double>> chemin_lerner_profiles(const TimeSeriesField& u,
                                                        const ExponentField& s,
                                                        const ExponentField& p,
                                                        const DyadicPartition& part,
                                                        const NormOptions& options = {});

}  // namespace fbl
