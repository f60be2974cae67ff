#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fbl/grid.hpp"

namespace fbl {

enum class ExponentKind { constant, smooth, piecewise };

/// Built-in shapes with range exactly [-1, 1] on every supported grid.
///   bump: 2·exp(1 - 1/(1 - (r/R)^2)) - 1 around the cell center, R = 0.9π
///   trig: Π cos(x_k)
///   step: +1 on x_0 < π, -1 elsewhere (a jump, not log-Hölder under refinement)
enum class Profile { bump, trig, step };

/// Generating recipe; authoritative when the field is needed on another grid.
struct ExponentRecipe {
  ExponentKind kind = ExponentKind::constant;
  double base = 2.0;
  double amplitude = 0.0;
  Profile profile = Profile::bump;

  double lowest() const noexcept;   // base - |amplitude|
  double highest() const noexcept;  // base + |amplitude|
  std::string describe() const;
};

/// Integrability exponents p(·), r(·) must exceed 1; regularity exponents s(·)
/// may take any finite value.
enum class ExponentRole { integrability, regularity };

std::string to_string(ExponentKind k);
std::string to_string(Profile p);
std::optional<ExponentKind> parse_exponent_kind(const std::string& s);
std::optional<Profile> parse_profile(const std::string& s);

/// Profile value at a physical point of the torus.
double profile_value(Profile profile, const std::array<double, 3>& x, int dims);

/// Variable exponent sampled on a grid.
class ExponentField {
 public:
  /// Validates the samples; p_minus/p_plus are taken from a scan.
  ExponentField(GridSpec grid, std::vector<double> values, double p_infinity, std::string descriptor,
                ExponentRole role = ExponentRole::integrability,
                std::optional<ExponentRecipe> recipe = std::nullopt);

  static ExponentField from_recipe(const ExponentRecipe& recipe, const GridSpec& grid,
                                   ExponentRole role = ExponentRole::integrability);

  const GridSpec& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double p_minus() const noexcept { return p_minus_; }
  double p_plus() const noexcept { return p_plus_; }
  double p_infinity() const noexcept { return p_infinity_; }
  const std::string& descriptor() const noexcept { return descriptor_; }
  ExponentRole role() const noexcept { return role_; }
  const std::optional<ExponentRecipe>& recipe() const noexcept { return recipe_; }
  bool is_constant() const noexcept { return p_minus_ == p_plus_; }

  /// Sample at a physical grid point.
  double at(std::size_t flat) const noexcept { return values_[flat]; }
  /// Value used at a frequency lattice point: the sample at the physical index
  /// shifted by n/2 per axis, so ξ = 0 reads the cell center.
  double at_frequency(std::size_t spectral_flat) const noexcept {
    return values_[frequency_map_[spectral_flat]];
  }

  /// Same recipe evaluated on another grid.
  ExponentField on_grid(const GridSpec& grid) const;

  /// Pointwise image under g; the declared limit value is mapped as well.
  ExponentField map(const std::function<double(double)>& g, std::string descriptor,
                    ExponentRole role) const;

 private:
  GridSpec grid_;
  std::vector<double> values_;
  double p_minus_ = 0.0;
  double p_plus_ = 0.0;
  double p_infinity_ = 0.0;
  std::string descriptor_;
  ExponentRole role_;
  std::optional<ExponentRecipe> recipe_;
  std::vector<std::size_t> frequency_map_;
};

/// Constant exponent p > 1.
ExponentField make_constant_exponent(double p, const GridSpec& grid);
/// base + amplitude·profile(x), with base - |amplitude| > 1.
ExponentField make_smooth_exponent(double base, double amplitude, Profile profile,
                                   const GridSpec& grid);
/// Two-level exponent base ± amplitude split by the step profile.
ExponentField make_piecewise_exponent(double base, double amplitude, const GridSpec& grid);
/// Constant regularity index s.
ExponentField make_constant_regularity(double s, const GridSpec& grid);

/// q with 1/q = 1/p1 + 1/p2, pointwise. Requires the result to stay above 1.
ExponentField harmonic_combination(const ExponentField& p1, const ExponentField& p2);

struct LogHolderReport {
  double local_constant = 0.0;
  double decay_constant = 0.0;
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
  bool passes = true;
  bool exhaustive = false;
  std::uint64_t pairs_examined = 0;
  double budget = 0.0;
  /// Always set: on the torus the decay condition is close to vacuous.
  std::string note;
};

struct LogHolderOptions {
  std::uint64_t seed = 0;
  /// A field passes when its local constant does not exceed this.
  double constant_budget = 1.0;
};

/// Empirical log-Hölder constants of 1/p:
///   local = max |1/p(x) - 1/p(y)|·log(e + 1/d(x,y)),
///   decay = max |1/p(x) - 1/p_∞|·log(e + d(x, center)),
/// with torus distances. All pairs are scanned when they fit in the budget;
/// otherwise half the budget goes to nearest-neighbour pairs and half to
/// uniform random pairs, both drawn from `seed`.
LogHolderReport check_log_holder(const ExponentField& p, std::uint64_t sample_budget,
                                 const LogHolderOptions& options = {});

/// Distance on the 2π-periodic torus.
double torus_distance(const std::array<double, 3>& x, const std::array<double, 3>& y, int dims);

}  // namespace fbl
