#include "fbl/report.hpp"

#include <algorithm>
#include <cmath>

#include "fbl/snapshot.hpp"
#include "format.hpp"

#ifndef FBL_VERSION
#define FBL_VERSION "0.0.0"
#endif

namespace fbl {
namespace {

constexpr const char* kSchema = "fbl-report/1";

std::string number(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  return detail::format_double(v);
}

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return detail::format_double(v);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out + "\"";
}

/// Streaming writer for pretty-printed JSON with caller-defined key order.
class Json {
 public:
  Json& open_object(const std::string& key = {}) { return open(key, '{'); }
  Json& open_array(const std::string& key = {}) { return open(key, '['); }
  Json& close() {
    const char kind = stack_.back().kind;
    const bool empty = stack_.back().empty;
    stack_.pop_back();
    if (!empty) newline();
    out_ += kind == '{' ? '}' : ']';
    return *this;
  }
  Json& value(const std::string& key, double v) { return raw(key, number(v)); }
  Json& value(const std::string& key, int v) { return raw(key, std::to_string(v)); }
  Json& value(const std::string& key, std::size_t v) { return raw(key, std::to_string(v)); }
  Json& value(const std::string& key, std::uint64_t v, bool) { return raw(key, std::to_string(v)); }
  Json& value(const std::string& key, bool v) { return raw(key, v ? "true" : "false"); }
  Json& value(const std::string& key, const std::string& v) { return raw(key, quoted(v)); }
  Json& value(const std::string& key, const char* v) { return raw(key, quoted(v)); }
  Json& numbers(const std::string& key, const std::vector<double>& v) {
    open_array(key);
    for (double x : v) raw({}, number(x));
    return close();
  }
  Json& strings(const std::string& key, const std::vector<std::string>& v) {
    open_array(key);
    for (const auto& x : v) raw({}, quoted(x));
    return close();
  }
  std::string str() const { return out_ + "\n"; }

 private:
  struct Level {
    char kind;
    bool empty;
  };

  void newline() {
    out_ += '\n';
    out_.append(2 * stack_.size(), ' ');
  }
  void prefix(const std::string& key) {
    if (!stack_.empty()) {
      if (!stack_.back().empty) out_ += ',';
      stack_.back().empty = false;
      newline();
      if (stack_.back().kind == '{') out_ += quoted(key) + ": ";
    }
  }
  Json& open(const std::string& key, char kind) {
    prefix(key);
    out_ += kind;
    stack_.push_back({kind, true});
    return *this;
  }
  Json& raw(const std::string& key, const std::string& text) {
    prefix(key);
    out_ += text;
    return *this;
  }

  std::string out_;
  std::vector<Level> stack_;
};

Json begin(const std::string& kind, const ReportContext& ctx) {
  Json j;
  j.open_object();
  j.value("schema", kSchema);
  j.value("kind", kind);
  j.value("version", version());
  j.value("command", ctx.command);
  j.value("config_hash", ctx.config_hash);
  j.open_object("config");
  for (const auto& [k, v] : ctx.config) j.value(k, v);
  j.close();
  if (ctx.has_range) {
    j.open_object("dyadic_range");
    j.value("j_min", ctx.j_min);
    j.value("j_max", ctx.j_max);
    j.close();
  }
  j.value("domain", domain_disclaimer());
  return j;
}

std::string csv_header(const ReportContext& ctx) {
  std::string out = "# fbl " + version() + " " + ctx.command + " config " + ctx.config_hash + "\n";
  if (ctx.has_range)
    out += "# dyadic range j = " + std::to_string(ctx.j_min) + ".." + std::to_string(ctx.j_max) +
           "\n";
  out += "# " + domain_disclaimer() + "\n";
  return out;
}

void pairs(Json& j, const std::string& key, const std::vector<std::pair<std::string, double>>& v) {
  j.open_object(key);
  for (const auto& [k, x] : v) j.value(k, x);
  j.close();
}

void checks(Json& j, const std::string& key, const std::vector<std::pair<std::string, bool>>& v) {
  j.open_object(key);
  for (const auto& [k, x] : v) j.value(k, x);
  j.close();
}

void space_norms(Json& j, const std::string& key, const SpaceNorms& n) {
  j.open_object(key);
  j.value("variable", n.variable);
  j.value("integrable", n.integrable);
  j.value("bounded", n.bounded);
  j.value("max", n.max());
  j.close();
}

}  // namespace

std::string version() { return FBL_VERSION; }

std::string domain_disclaimer() {
  return "periodic box [0,2pi)^d sampled on an n^d lattice; dyadic blocks outside the reported "
         "range and the zero mode are not represented, so whole-space statements are checked on "
         "their torus counterparts only";
}

ReportContext ReportContext::from(const RunConfig& config) {
  ReportContext ctx;
  ctx.command = to_string(config.command);
  ctx.config_hash = config.hash();
  ctx.config = config.entries;
  const DyadicPartition part = build_partition(config.grid, config.partition_order);
  ctx.has_range = true;
  ctx.j_min = part.j_min();
  ctx.j_max = part.j_max();
  return ctx;
}

DecompositionSummary summarize(const DyadicDecomposition& d) {
  DecompositionSummary s;
  for (const auto& [j, block] : d.blocks) {
    s.j.push_back(j);
    s.block_norms.push_back(std::sqrt(block.sum_squares()));
  }
  s.source_norm = std::sqrt(d.source.sum_squares());
  const double scale = d.source.max_abs();
  s.reconstruction_error = scale > 0.0 ? (d.reconstruct() - d.source).max_abs() / scale : 0.0;
  return s;
}

std::string estimate_json(const EstimateReport& r, const ReportContext& ctx) {
  Json j = begin("estimate", ctx);
  j.value("estimate_id", r.estimate_id);
  j.value("seed", r.seed, true);
  j.value("trials", r.trials);
  j.value("calibration", r.calibration);
  j.value("discarded", r.discarded);
  pairs(j, "parameters", r.parameters);
  j.value("fitted_constant", r.fitted_constant);
  j.value("holdout_max", r.holdout_max);
  j.value("safety_factor", r.safety_factor);
  j.value("passes", r.passes);
  checks(j, "checks", r.checks);
  j.numbers("lhs", r.lhs);
  j.numbers("rhs", r.rhs);
  j.numbers("ratios", r.ratios);
  j.strings("notes", r.notes);
  j.close();
  return j.str();
}

std::string estimate_csv(const EstimateReport& r, const ReportContext& ctx) {
  std::string out = csv_header(ctx);
  out += "# estimate " + r.estimate_id + ", first " + std::to_string(r.calibration) +
         " trials calibrate\n";
  out += "trial,set,lhs,rhs,ratio\n";
  for (std::size_t i = 0; i < r.ratios.size(); ++i) {
    out += std::to_string(i) + "," + (i < r.calibration ? "calibration" : "holdout") + "," +
           csv_number(r.lhs[i]) + "," + csv_number(r.rhs[i]) + "," + csv_number(r.ratios[i]) +
           "\n";
  }
  return out;
}

std::string run_json(const RunRecord& r, const ReportContext& ctx) {
  Json j = begin("run", ctx);
  j.value("system", to_string(r.system));
  j.strings("solution_space", r.space);
  j.numbers("iterate_norms", r.iterate_norms);
  j.numbers("increments", r.increments);
  j.numbers("contraction_rates", r.contraction_rates);
  space_norms(j, "final_norms", r.final_norms);
  j.value("iterations", r.iterations);
  j.value("converged", r.converged);
  j.value("residual", r.residual);
  j.value("y_norm", r.y_norm);
  j.value("data_norm", r.data_norm);
  j.value("eta", r.eta);
  j.value("c_fit", r.c_fit);
  j.value("contraction_bound", r.contraction_bound);
  j.value("certified", r.certified);
  j.value("tail_bound", r.tail_bound);
  checks(j, "verdicts", r.verdicts);
  j.value("passes", r.passes());
  pairs(j, "diagnostics", r.diagnostics);
  j.strings("notes", r.notes);
  j.close();
  return j.str();
}

std::string run_csv(const RunRecord& r, const ReportContext& ctx) {
  std::string out = csv_header(ctx);
  out += "# rate[n] = increment[n] / increment[n-1]; iterate 0 is the free evolution\n";
  out += "iteration,norm,variable,integrable,bounded,increment,rate\n";
  for (std::size_t n = 0; n < r.iterate_components.size(); ++n) {
    const auto& c = r.iterate_components[n];
    const std::string inc = n >= 1 && n - 1 < r.increments.size()
                                ? csv_number(r.increments[n - 1])
                                : std::string();
    const std::string rate = n >= 2 && n - 2 < r.contraction_rates.size()
                                 ? csv_number(r.contraction_rates[n - 2])
                                 : std::string();
    out += std::to_string(n) + "," + csv_number(c.max()) + "," + csv_number(c.variable) + "," +
           csv_number(c.integrable) + "," + csv_number(c.bounded) + "," + inc + "," + rate + "\n";
  }
  return out;
}

std::string norm_json(const NormValue& v, const std::string& norm_kind, const ReportContext& ctx) {
  Json j = begin("norm", ctx);
  j.value("norm", norm_kind);
  j.value("value", v.value);
  j.value("method", to_string(v.method));
  j.value("tolerance", v.tolerance);
  j.value("measure", v.measure);
  if (v.has_range) {
    j.open_object("j_range");
    j.value("j_min", v.j_min);
    j.value("j_max", v.j_max);
    j.close();
  }
  j.strings("exponent_descriptors", v.exponents);
  if (!v.time_grid.empty()) j.value("time_grid", v.time_grid);
  j.close();
  return j.str();
}

std::string decomposition_json(const DecompositionSummary& s, const ReportContext& ctx) {
  Json j = begin("decomposition", ctx);
  j.value("source_norm", s.source_norm);
  j.value("reconstruction_error", s.reconstruction_error);
  j.open_array("blocks");
  for (std::size_t i = 0; i < s.j.size(); ++i) {
    j.open_object();
    j.value("j", s.j[i]);
    j.value("norm", s.block_norms[i]);
    j.close();
  }
  j.close();
  j.close();
  return j.str();
}

std::string decomposition_csv(const DecompositionSummary& s, const ReportContext& ctx) {
  std::string out = csv_header(ctx);
  out += "j,norm\n";
  for (std::size_t i = 0; i < s.j.size(); ++i)
    out += std::to_string(s.j[i]) + "," + csv_number(s.block_norms[i]) + "\n";
  return out;
}

std::string smallness_json(const SmallnessThreshold& t, System system, const ReportContext& ctx) {
  Json j = begin("smallness", ctx);
  j.value("system", to_string(system));
  j.value("linear_constant", t.linear_constant);
  j.value("bilinear_constant", t.bilinear_constant);
  j.value("epsilon", t.epsilon);
  j.numbers("linear_ratios", t.linear_ratios);
  j.numbers("bilinear_ratios", t.bilinear_ratios);
  j.close();
  return j.str();
}

std::string divergence_json(const NumericDivergence& e, const ReportContext& ctx) {
  Json j = begin("divergence", ctx);
  j.value("error", std::string(e.what()));
  j.numbers("iterate_norms", e.iterate_norms());
  j.numbers("contraction_rates", e.rates());
  j.value("passes", false);
  j.close();
  return j.str();
}

std::filesystem::path write_output(const std::filesystem::path& dir, const std::string& name,
                                   const std::string& contents) {
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  write_file_atomic(path, contents);
  return path;
}

}  // namespace fbl
