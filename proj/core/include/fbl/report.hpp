#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "fbl/config.hpp"
#include "fbl/estimate_report.hpp"
#include "fbl/littlewood_paley.hpp"
#include "fbl/norms.hpp"
#include "fbl/solvers.hpp"

namespace fbl {

/// Library version, recorded in every output.
std::string version();

/// Reminder that every result lives on the periodic box and only inside the
/// resolved dyadic range.
std::string domain_disclaimer();

/// Header material shared by every report.
struct ReportContext {
  std::string command;
  std::string config_hash;
  std::vector<std::pair<std::string, std::string>> config;
  bool has_range = false;
  int j_min = 0;
  int j_max = 0;

  static ReportContext from(const RunConfig& config);
};

struct DecompositionSummary {
  std::vector<int> j;
  /// l2 norm of each block.
  std::vector<double> block_norms;
  double source_norm = 0.0;
  /// max |Σ_j Δ_j f - f| relative to max |f|.
  double reconstruction_error = 0.0;
};
DecompositionSummary summarize(const DyadicDecomposition& d);

// JSON documents use a fixed key order and print numbers with 17 significant
// digits; non-finite values become the strings "inf", "-inf" and "nan". CSV
// outputs start with '#' comment lines carrying the same header material,
// followed by a column header row.

std::string estimate_json(const EstimateReport& report, const ReportContext& ctx);
/// One row per trial: trial, set (calibration/holdout), lhs, rhs, ratio.
std::string estimate_csv(const EstimateReport& report, const ReportContext& ctx);

std::string run_json(const RunRecord& record, const ReportContext& ctx);
/// One row per iterate: iteration, norm, variable, integrable, bounded, increment, rate.
std::string run_csv(const RunRecord& record, const ReportContext& ctx);

std::string norm_json(const NormValue& value, const std::string& norm_kind,
                      const ReportContext& ctx);

std::string decomposition_json(const DecompositionSummary& summary, const ReportContext& ctx);
/// One row per block: j, norm.
std::string decomposition_csv(const DecompositionSummary& summary, const ReportContext& ctx);

std::string smallness_json(const SmallnessThreshold& threshold, System system,
                           const ReportContext& ctx);

/// Record of a run that stopped contracting.
std::string divergence_json(const NumericDivergence& error, const ReportContext& ctx);

/// Writes `contents` to dir/name atomically, creating dir if needed.
std::filesystem::path write_output(const std::filesystem::path& dir, const std::string& name,
                                   const std::string& contents);

}  // namespace fbl
