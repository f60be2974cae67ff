#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fbl/exponents.hpp"
#include "fbl/littlewood_paley.hpp"
#include "fbl/norms.hpp"
#include "fbl/picard.hpp"
#include "fbl/time_series.hpp"

namespace fbl {

enum class System { navier_stokes, keller_segel };
std::string to_string(System s);

/// Regularity offset of the critical space: s = offset - 3/p.
/// Navier–Stokes 2, Keller–Segel 1.
double critical_offset(System s);

struct BilinearOptions {
  /// Apply the 2/3 rule to every product before differentiation.
  bool dealias = false;
};

/// ∫_0^t e^{(t-τ)Δ} P∇·(u⊗v)(τ) dτ, with u⊗v replaced by its symmetric part
/// (u⊗v + v⊗u)/2. Inputs must be zero-mean, divergence-free 3-vector series.
TimeSeriesField ns_bilinear(const TimeSeriesField& u, const TimeSeriesField& v,
                            const BilinearOptions& options = {});

/// ∫_0^t e^{(t-τ)Δ} ∇·(u∇(-Δ)^{-1}v)(τ) dτ, symmetrized in (u, v).
/// Inputs must be zero-mean scalar series.
TimeSeriesField ks_bilinear(const TimeSeriesField& u, const TimeSeriesField& v,
                            const BilinearOptions& options = {});

/// Flux u∇ψ with ψ = (-Δ)^{-1}u, computed directly.
SpectralField ks_direct_flux(const SpectralField& u, const BilinearOptions& options = {});
/// The same flux as -∇·(∇ψ⊗∇ψ - ½|∇ψ|²I).
SpectralField ks_symmetric_form(const SpectralField& u, const BilinearOptions& options = {});

/// Values of the three Chemin–Lerner norms making up the solution space
///   L^ρ_T FḂ^{a-3/p(·)+2/ρ}_{p(·),1} ∩ L^1_T FḂ^{a+1/2}_{2,1} ∩ L^∞_T FḂ^{a-3/2}_{2,1},
/// a the critical offset.
struct SpaceNorms {
  double variable = 0.0;
  double integrable = 0.0;
  double bounded = 0.0;
  double max() const noexcept;
};

class SolutionSpace {
 public:
  SolutionSpace(System system, ExponentField p, double rho, DyadicPartition partition);

  System system() const noexcept { return system_; }
  const ExponentField& p() const noexcept { return p_; }
  double rho() const noexcept { return rho_; }
  const DyadicPartition& partition() const noexcept { return partition_; }

  SpaceNorms norms(const TimeSeriesField& u) const;
  double norm(const TimeSeriesField& u) const { return norms(u).max(); }
  /// ‖u0‖_{FḂ^{a-3/p}_{p,1}} + ‖f‖_{L^1 FḂ^{a-3/p}_{p,1}} + ‖f‖_{L^1 FḂ^{a-3/2}_{2,1}}.
  double data_norm(const SpectralField& u0, const std::optional<TimeSeriesField>& f) const;
  /// Human-readable description of the three components.
  std::vector<std::string> describe() const;

 private:
  System system_;
  ExponentField p_;
  double rho_;
  DyadicPartition partition_;
  ExponentField s_data_;
  ExponentField s_variable_;
};

struct SolverConfig {
  System system = System::navier_stokes;
  GridSpec grid{32, 3};
  TimeGridSpec time{};
  ExponentRecipe p{ExponentKind::smooth, 3.0, 0.5, Profile::bump};
  double rho = 2.0;
  BilinearOptions bilinear{};
  PicardOptions picard{};
  /// Fitted bilinear constant; ≤ 0 means calibrate.
  double c_fit = 0.0;
  int calibration_trials = 6;
  std::uint64_t seed = 1;
};

/// max over heat-propagated random pairs of ‖B(u,v)‖ / (‖u‖‖v‖).
struct BilinearCalibration {
  double constant = 0.0;
  std::vector<double> ratios;
};
BilinearCalibration calibrate_bilinear(const SolutionSpace& space, const std::vector<double>& times,
                                       const BilinearOptions& options, int trials,
                                       std::uint64_t seed);

/// ε = 1/(4 C_1 C_2): C_1 the fitted linear constant ‖y‖/data, C_2 the fitted
/// bilinear constant. Both are maxima over their trials, so more trials never
/// raise ε.
struct SmallnessThreshold {
  double linear_constant = 0.0;
  double bilinear_constant = 0.0;
  double epsilon = 0.0;
  std::vector<double> linear_ratios;
  std::vector<double> bilinear_ratios;
};
SmallnessThreshold smallness_threshold(const SolverConfig& config, int trials);

/// Free evolution y = e^{tΔ}u0 + ∫e^{(t-τ)Δ}Qf, with Q the Leray projector for
/// Navier–Stokes and the identity for Keller–Segel.
TimeSeriesField free_evolution(System system, const SpectralField& u0,
                               const std::optional<TimeSeriesField>& f,
                               const std::vector<double>& times);

/// Scales u0 and f by one factor so that ‖y‖ in the solution space equals
/// `target`; returns the factor. Throws DomainError for zero data.
double scale_data(const SolverConfig& config, SpectralField& u0, std::optional<TimeSeriesField>& f,
                  double target);

struct RunRecord {
  System system = System::navier_stokes;
  std::vector<double> iterate_norms;
  /// The three component norms of every iterate, u_0 = y first.
  std::vector<SpaceNorms> iterate_components;
  std::vector<double> increments;
  std::vector<double> contraction_rates;
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;
  SpaceNorms final_norms;
  double y_norm = 0.0;
  double data_norm = 0.0;
  double eta = 0.0;
  double c_fit = 0.0;
  double contraction_bound = 0.0;
  bool certified = false;
  /// e^{-κ 4^{j_min} T}: weight of the unresolved low-frequency tail.
  double tail_bound = 0.0;
  std::vector<std::string> space;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::pair<std::string, double>> diagnostics;
  std::vector<std::string> notes;
  std::optional<TimeSeriesField> solution;

  bool passes() const;
};

/// Solves u = y + σB(u,u) (σ = -1 for Navier–Stokes, +1 for Keller–Segel) by
/// Picard iteration and records the verdicts. NumericDivergence escapes.
RunRecord solve(const SolverConfig& config, const SpectralField& u0,
                const std::optional<TimeSeriesField>& f);
RunRecord solve_ns(const SolverConfig& config, const SpectralField& u0,
                   const std::optional<TimeSeriesField>& f = std::nullopt);
RunRecord solve_ks(const SolverConfig& config, const SpectralField& u0,
                   const std::optional<TimeSeriesField>& f = std::nullopt);

/// Reruns with perturbed data and compares ‖u - ũ‖ with ‖y - ỹ‖/(1 - 4ηC_fit).
struct ContinuityReport {
  double solution_distance = 0.0;
  double data_distance = 0.0;
  double bound = 0.0;
  bool passes = false;
};
ContinuityReport continuity_check(const SolverConfig& config, const SpectralField& u0,
                                  const SpectralField& perturbation,
                                  const std::optional<TimeSeriesField>& f = std::nullopt);

/// Restarts the iteration from y + offset and measures the distance between
/// the two limits; within the 2η-ball they must coincide.
struct UniquenessReport {
  double distance = 0.0;
  double start_distance = 0.0;
  bool passes = false;
};
UniquenessReport uniqueness_check(const SolverConfig& config, const SpectralField& u0,
                                  const SpectralField& offset,
                                  const std::optional<TimeSeriesField>& f = std::nullopt);

/// Scale invariance of the critical data norm on coefficient sequences:
/// c_λ(λξ) = λ^{-a} c(ξ) read with the lattice weight multiplied by λ^3. This is
/// the lattice image of u ↦ λu(λx) (Navier–Stokes) and u ↦ λ²u(λx) (Keller–Segel).
struct ScalingReport {
  System system = System::navier_stokes;
  int lambda = 2;
  double p = 2.0;
  double original = 0.0;
  double rescaled = 0.0;
  double relative_error = 0.0;
  bool passes = false;
};
ScalingReport scaling_check(System system, const SpectralField& field, int lambda, double p,
                            const DyadicPartition& part);

// Initial data and forcing.

enum class InitialKind { shell, mode, zero, bump_pair, taylor_green };
std::string to_string(InitialKind k);
std::optional<InitialKind> parse_initial_kind(const std::string& s);

struct InitialSpec {
  InitialKind kind = InitialKind::shell;
  double inner = 2.0;
  double outer = 4.0;
  double slope = 0.0;
  /// Wave vectors for InitialKind::mode, one real mode each.
  std::vector<Freq> modes{{1, 0, 0}};
  double amplitude = 1.0;
  std::uint64_t seed = 1;
};
/// Real, zero-mean data for the system: divergence-free 3-vectors for
/// Navier–Stokes, scalars for Keller–Segel.
SpectralField make_initial(System system, const GridSpec& grid, const InitialSpec& spec);

enum class Envelope { constant, exp_decay };
std::string to_string(Envelope e);
std::optional<Envelope> parse_envelope(const std::string& s);

enum class ForcingKind { shell, mode };
std::string to_string(ForcingKind k);
std::optional<ForcingKind> parse_forcing_kind(const std::string& s);

/// f(t, x) = amplitude·g(t)·F(x) with g the envelope.
struct ForcingSpec {
  ForcingKind kind = ForcingKind::shell;
  std::vector<Freq> modes{{1, 0, 0}};
  double inner = 1.0;
  double outer = 3.0;
  double amplitude = 1.0;
  Envelope envelope = Envelope::constant;
  double rate = 1.0;
  std::uint64_t seed = 2;
};
TimeSeriesField make_forcing(System system, const GridSpec& grid, const ForcingSpec& spec,
                             const std::vector<double>& times);

}  // namespace fbl
