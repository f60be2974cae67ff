#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>

#include "fbl/errors.hpp"
#include "fbl/heat.hpp"
#include "fbl/report.hpp"
#include "fbl/snapshot.hpp"
#include "fbl/spectral.hpp"

namespace fbl::cli {
namespace {

void announce(const std::filesystem::path& path) { std::cout << "wrote " << path.string() << "\n"; }

void emit(const RunConfig& cfg, const std::string& suffix, const std::string& contents) {
  announce(write_output(cfg.output.dir, cfg.output.stem + suffix, contents));
}

SpectralField input_field(const RunConfig& cfg) {
  if (!cfg.snapshot.empty()) {
    const Snapshot snap = load_snapshot(cfg.snapshot);
    if (!(snap.grid == cfg.grid))
      throw DomainError("snapshot grid (n = " + std::to_string(snap.grid.n()) + ", dims = " +
                        std::to_string(snap.grid.dims()) + ") differs from the configured grid");
    return snap.spectral();
  }
  RandomFieldSpec spec = cfg.field;
  spec.slope = cfg.field.slope;
  return random_field(cfg.grid, spec, cfg.seed, 0);
}

int run_norm(const RunConfig& cfg) {
  const SpectralField f = input_field(cfg);
  const ExponentField p = ExponentField::from_recipe(cfg.p, cfg.grid);
  NormValue value;
  switch (cfg.norm_kind) {
    case NormKind::fourier_besov: {
      const auto part = build_partition(cfg.grid, cfg.partition_order);
      const auto s = ExponentField::from_recipe(cfg.s, cfg.grid, ExponentRole::regularity);
      value = variable_fourier_besov_norm(f, s, p, cfg.r, part);
      break;
    }
    case NormKind::variable_lebesgue:
      value = variable_lebesgue_norm(inverse_transform(f), p);
      break;
    case NormKind::fourier_lebesgue:
      if (!p.is_constant())
        throw DomainError("fourier-lebesgue norm needs a constant exponent.p");
      value.value = fourier_lebesgue_norm(f, p.p_minus());
      value.method = NormMethod::closed_form;
      value.measure = "frequency lattice, weight (2pi/n)^d";
      value.exponents = {p.descriptor()};
      break;
  }
  emit(cfg, ".json", norm_json(value, to_string(cfg.norm_kind), ReportContext::from(cfg)));
  std::printf("%s norm = %.17g\n", to_string(cfg.norm_kind).c_str(), value.value);
  return kPass;
}

int run_decompose(const RunConfig& cfg) {
  const auto part = build_partition(cfg.grid, cfg.partition_order);
  const auto summary = summarize(decompose(input_field(cfg), part));
  const auto ctx = ReportContext::from(cfg);
  emit(cfg, ".json", decomposition_json(summary, ctx));
  emit(cfg, ".csv", decomposition_csv(summary, ctx));
  std::printf("reconstruction error %.3e over %zu blocks\n", summary.reconstruction_error,
              summary.j.size());
  return summary.reconstruction_error <= 1e-12 ? kPass : kFail;
}

EstimateReport run_estimate(const RunConfig& cfg) {
  const std::string& id = cfg.estimate;
  auto q = [&](const char* name) { return cfg.estimate_parameter(name); };
  if (id == "bernstein-i" || id == "bernstein-ii" || id == "bernstein-iii") {
    const int item = id == "bernstein-i" ? 1 : id == "bernstein-ii" ? 2 : 3;
    return verify_bernstein(item, static_cast<int>(q("k")), q("p"), q("q"), q("lambda"), cfg.plan);
  }
  if (id == "embedding") return verify_embedding(q("s"), q("p1"), q("p2"), q("r1"), q("r2"), cfg.plan);
  if (id == "gradient-equivalence") return verify_gradient_equivalence(q("s"), q("p"), q("r"), cfg.plan);
  if (id == "interpolation")
    return verify_interpolation(q("s1"), q("s2"), q("theta"), q("p"), q("r"), cfg.plan);
  if (id == "product-2.9") return verify_tame_product(q("s"), q("p"), q("p1"), q("p2"), cfg.plan);
  if (id == "product-2.10") return verify_mixed_product(q("s1"), q("s2"), q("p1"), q("p2"), cfg.plan);
  if (id == "holder") return verify_holder(cfg.holder_p1, cfg.holder_p2, q("bound"), cfg.plan);
  if (id == "heat-3.2") return sweep_heat_estimate(cfg.heat, cfg.plan);
  throw DomainError("unknown estimate id '" + id + "'");
}

int report_estimate(const RunConfig& cfg, const EstimateReport& r) {
  const auto ctx = ReportContext::from(cfg);
  emit(cfg, ".json", estimate_json(r, ctx));
  emit(cfg, ".csv", estimate_csv(r, ctx));
  const bool ok = r.passes && r.all_checks();
  std::printf("%s: fitted %.6g, holdout max %.6g, safety %.3g -> %s\n", r.estimate_id.c_str(),
              r.fitted_constant, r.holdout_max, r.safety_factor, ok ? "PASS" : "FAIL");
  for (const auto& [name, passed] : r.checks)
    std::printf("  %s: %s\n", name.c_str(), passed ? "pass" : "fail");
  return ok ? kPass : kFail;
}

int run_solver(const RunConfig& cfg) {
  const SolverConfig& sc = cfg.solver;
  const auto times = sc.time.nodes();
  SpectralField u0 = make_initial(sc.system, cfg.grid, cfg.initial);
  std::optional<TimeSeriesField> f;
  if (cfg.forcing) f = make_forcing(sc.system, cfg.grid, *cfg.forcing, times);
  if (cfg.target_norm > 0.0) scale_data(sc, u0, f, cfg.target_norm);
  const auto ctx = ReportContext::from(cfg);
  try {
    const RunRecord rec = solve(sc, u0, f);
    emit(cfg, ".json", run_json(rec, ctx));
    emit(cfg, ".csv", run_csv(rec, ctx));
    for (double t : cfg.output.snapshot_times) {
      std::size_t k = 0;
      for (std::size_t i = 1; i < times.size(); ++i)
        if (std::abs(times[i] - t) < std::abs(times[k] - t)) k = i;
      const auto path = std::filesystem::path(cfg.output.dir) /
                        (cfg.output.stem + "-node" + std::to_string(k) + ".fblb");
      save_snapshot(path, (*rec.solution)[k]);
      announce(path);
    }
    std::printf("%s: %d iterations, ||y|| = %.6g, ||u|| = %.6g, 4*eta*C_fit = %.6g -> %s\n",
                to_string(rec.system).c_str(), rec.iterations, rec.y_norm, rec.final_norms.max(),
                rec.contraction_bound, rec.passes() ? "PASS" : "FAIL");
    for (const auto& [name, passed] : rec.verdicts)
      std::printf("  %s: %s\n", name.c_str(), passed ? "pass" : "fail");
    return rec.passes() ? kPass : kFail;
  } catch (const NumericDivergence& e) {
    emit(cfg, ".json", divergence_json(e, ctx));
    std::fprintf(stderr, "numeric divergence: %s\n", e.what());
    return kDivergence;
  }
}

int run_sweep(const RunConfig& cfg) {
  const auto t = smallness_threshold(cfg.solver, cfg.sweep_trials);
  emit(cfg, ".json", smallness_json(t, cfg.solver.system, ReportContext::from(cfg)));
  std::printf("C1 = %.6g, C2 = %.6g, epsilon = %.6g\n", t.linear_constant, t.bilinear_constant,
              t.epsilon);
  return std::isfinite(t.epsilon) && t.epsilon > 0.0 ? kPass : kFail;
}

}  // namespace

int run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::norm: return run_norm(cfg);
    case Command::decompose: return run_decompose(cfg);
    case Command::verify: return report_estimate(cfg, run_estimate(cfg));
    case Command::heat: return report_estimate(cfg, sweep_heat_estimate(cfg.heat, cfg.plan));
    case Command::solve_ns:
    case Command::solve_ks: return run_solver(cfg);
    case Command::sweep: return run_sweep(cfg);
  }
  return kFail;
}

}  // namespace fbl::cli
