#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fbl/estimates.hpp"
#include "fbl/exponents.hpp"
#include "fbl/heat.hpp"
#include "fbl/random_fields.hpp"
#include "fbl/solvers.hpp"

namespace fbl {

enum class Command { norm, decompose, verify, heat, solve_ns, solve_ks, sweep };
std::string to_string(Command c);
std::optional<Command> parse_command(const std::string& s);

enum class NormKind { fourier_besov, variable_lebesgue, fourier_lebesgue };
std::string to_string(NormKind k);

/// Estimate ids accepted by `verify`.
const std::vector<std::string>& estimate_ids();

struct OutputSpec {
  std::string dir = ".";
  std::string stem;
  /// Solver snapshot times; each is written at the nearest time node.
  std::vector<double> snapshot_times;
};

/// A fully resolved run. Built only by parse_config, which fills defaults and
/// keeps the effective key/value list for echoing and hashing.
struct RunConfig {
  Command command = Command::norm;
  std::uint64_t seed = 1;
  GridSpec grid{32, 3};
  int partition_order = 4;

  // norm, decompose
  std::string snapshot;
  RandomFieldSpec field;
  NormKind norm_kind = NormKind::fourier_besov;
  ExponentRecipe p;
  ExponentRecipe s;
  double r = 1.0;

  // verify
  std::string estimate;
  std::vector<std::pair<std::string, double>> estimate_parameters;
  ExponentRecipe holder_p1;
  ExponentRecipe holder_p2;
  TrialPlan plan;

  // heat
  HeatSweep heat;

  // solve-ns, solve-ks, sweep
  SolverConfig solver;
  InitialSpec initial;
  std::optional<ForcingSpec> forcing;
  /// When positive, data and forcing are scaled together so that ‖y‖ equals it.
  double target_norm = 0.0;
  int sweep_trials = 6;

  OutputSpec output;

  /// Effective settings, sorted by key; output.dir is left out so reports
  /// and the hash do not depend on where they are written.
  std::vector<std::pair<std::string, std::string>> entries;

  double estimate_parameter(const std::string& name) const;
  /// One `key = value` line per entry.
  std::string canonical() const;
  /// FNV-1a 64 of canonical(), as 16 hex digits.
  std::string hash() const;
};

/// Parses `key = value` lines; `#` starts a comment. Every problem found is
/// collected and thrown together as a ConfigError. `overrides` come from the
/// command line; one that contradicts a value in the text is an error.
RunConfig parse_config(std::string_view text,
                       const std::vector<std::pair<std::string, std::string>>& overrides = {});

/// Documented keys with their defaults, for help output.
std::vector<std::pair<std::string, std::string>> config_keys();

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace fbl
