#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fbl {

/// Outcome of an empirical inequality check LHS ≤ C·RHS.
///
/// Trials with a zero right-hand side are dropped and counted in `discarded`.
/// With the calibration protocol the first `calibration` kept trials fix
/// `fitted_constant` (their max ratio) and the rest give `holdout_max`.
struct EstimateReport {
  std::string estimate_id;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t calibration = 0;
  std::size_t discarded = 0;
  std::vector<double> lhs;
  std::vector<double> rhs;
  std::vector<double> ratios;
  double fitted_constant = 0.0;
  double holdout_max = 0.0;
  double safety_factor = 2.0;
  bool passes = false;
  /// Ordered (name, value) pairs describing the instance.
  std::vector<std::pair<std::string, double>> parameters;
  /// Extra named verdicts (e.g. an absolute bound that must also hold).
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> notes;

  /// Appends one trial; a zero or non-finite denominator is counted as discarded.
  void add_trial(double lhs_value, double rhs_value);
  /// Fills fitted_constant/holdout_max/passes from the ratios.
  void finalize(std::size_t calibration_trials, double safety);
  /// Single-trial form: passes when the ratio stays below `bound`.
  void finalize_bound(double bound);

  double max_ratio() const noexcept;
  bool all_checks() const noexcept;
};

}  // namespace fbl
