#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fbl/estimate_report.hpp"
#include "fbl/exponents.hpp"
#include "fbl/grid.hpp"

namespace fbl {

/// Shared sweep settings: grid, seed and the calibration/holdout split.
struct TrialPlan {
  GridSpec grid{32, 3};
  std::uint64_t seed = 1;
  std::size_t calibration = 50;
  std::size_t holdout = 50;
  double safety = 2.0;
  /// Power-law slope used on odd trials; even trials draw flat spectra.
  double slope = 2.0;

  std::size_t total() const noexcept { return calibration + holdout; }
};

/// Ball 𝓑 = {|ξ| ≤ 8/3} and ring 𝓒 = {3/4 ≤ |ξ| ≤ 8/3} used for band limits.
inline constexpr double kBallRadius = 8.0 / 3.0;
inline constexpr double kRingInner = 3.0 / 4.0;
/// Two-sided Bernstein and gradient-equivalence bound: 8/3 plus 5%.
inline constexpr double kAnnulusConstant = 8.0 / 3.0 * 1.05;

/// Fourier-side Bernstein inequalities on λ𝓑 / λ𝓒:
///   (i)   sup_{|α|=k} ‖ξ^α û‖_q ≤ C^{k+1} λ^{k+n(1/q-1/p)} ‖û‖_p
///   (ii)  C^{-k-1} λ^k ‖û‖_p ≤ sup_{|α|=k} ‖ξ^α û‖_p ≤ C^{k+1} λ^k ‖û‖_p
///   (iii) ‖σ û‖_q ≤ C λ^{n(1/q-1/p)} ‖û‖_p, σ a Riesz symbol (degree 0).
/// Ratios are LHS / (λ-power · ‖û‖_p). Items (i) and (iii) also sweep the
/// swapped (q, p) ordering and report its largest ratio as a parameter.
EstimateReport verify_bernstein(int item, int k, double p, double q, double lambda,
                                const TrialPlan& plan);

/// ‖u‖_{FḂ^{s-n(1/p1-1/p2)}_{p1,r1}} / ‖u‖_{FḂ^{s}_{p2,r2}} over multi-shell fields.
EstimateReport verify_embedding(double s, double p1, double p2, double r1, double r2,
                                const TrialPlan& plan);

/// ‖∇u‖_{FḂ^{s-1}_{p,r}} / ‖u‖_{FḂ^s_{p,r}}; the implied two-sided constant
/// max(ratio, 1/ratio) must stay within kAnnulusConstant.
EstimateReport verify_gradient_equivalence(double s, double p, double r, const TrialPlan& plan);

/// ‖u‖_{FḂ^{θs1+(1-θ)s2}} / (‖u‖^θ_{FḂ^{s1}} ‖u‖^{1-θ}_{FḂ^{s2}}) with constant 1.
EstimateReport verify_interpolation(double s1, double s2, double theta, double p, double r,
                                    const TrialPlan& plan);

/// ‖uv‖_{FḂ^s_{p,1}} against ‖u‖_{FḂ^s_{p1,1}}‖v‖_{FḂ^0_{p2,1}} + ‖u‖_{FḂ^0_{p2,1}}‖v‖_{FḂ^s_{p1,1}},
/// for s > 0 and 1 + 1/p = 1/p1 + 1/p2.
EstimateReport verify_tame_product(double s, double p, double p1, double p2, const TrialPlan& plan);

/// Which hypotheses of the second product law hold.
struct ProductHypotheses {
  bool sum_positive = false;    // s1 + s2 > max{0, n(1 - 1/p1 - 1/p2)}
  bool s1_bounded = false;      // s1 ≤ n·min{1 - 1/p1, 1 - 1/p2}
  bool s2_bounded = false;      // s2 ≤ n(1 - 1/p2)
};
ProductHypotheses mixed_product_hypotheses(double s1, double s2, double p1, double p2, int dims);

/// ‖uv‖_{FḂ^{s1+s2-n(1-1/p2)}_{p1,1}} / (‖u‖_{FḂ^{s1}_{p1,1}} ‖v‖_{FḂ^{s2}_{p2,1}}).
/// Throws DomainError when s1 + s2 > max{0, n(1 - 1/p1 - 1/p2)} fails; the
/// upper bounds on s1, s2 are reported as checks but do not stop the sweep.
EstimateReport verify_mixed_product(double s1, double s2, double p1, double p2,
                                  const TrialPlan& plan);

/// ‖fg‖_{p(·)} / (‖f‖_{p1(·)}‖g‖_{p2(·)}) with 1/p = 1/p1 + 1/p2 over random
/// real fields; besides the holdout protocol the max ratio must stay ≤ bound.
EstimateReport verify_holder(const ExponentRecipe& p1, const ExponentRecipe& p2, double bound,
                             const TrialPlan& plan);

}  // namespace fbl
