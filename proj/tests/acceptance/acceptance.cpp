// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Estimate sweeps run at N = 32; solver runs and oracle comparisons at N = 16.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fbl/config.hpp"
#include "fbl/errors.hpp"
#include "fbl/estimates.hpp"
#include "fbl/heat.hpp"
#include "fbl/littlewood_paley.hpp"
#include "fbl/norms.hpp"
#include "fbl/random_fields.hpp"
#include "fbl/snapshot.hpp"
#include "fbl/solvers.hpp"
#include "fbl/spectral.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace fbl;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double l2(const SpectralField& f) { return std::sqrt(f.sum_squares()); }

SpectralField unit_random(const GridSpec& g, int comps, double inner, double outer, std::uint64_t seed,
                          std::uint64_t index = 0) {
  auto f = random_field(g, {comps, inner, outer, index % 2 ? 2.0 : 0.0, true, false}, seed, index);
  f *= 1.0 / l2(f);
  return f;
}

// ---------------------------------------------------------------------------

Outcome partition_of_unity() {
  Outcome out;
  for (int n : {16, 32}) {
    const auto part = build_partition(GridSpec(n, 3));
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> u(std::log2(part.covered_low()), std::log2(part.covered_high()));
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
      const double r = std::exp2(u(rng));
      double s = 0.0;
      for (int j = part.j_min(); j <= part.j_max(); ++j) s += part.phi(std::ldexp(r, -j));
      worst = std::max(worst, std::abs(s - 1.0));
    }
    out.require(worst <= 1e-12, "n=" + std::to_string(n) + " deviation " + sci(worst));
    out.note("n=" + std::to_string(n) + " max deviation " + sci(worst) + " over 1e4 radii");
  }
  return out;
}

Outcome quasi_orthogonality() {
  Outcome out;
  {
    const GridSpec g(16, 3);
    const auto part = build_partition(g);
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 50; ++t) {
      const auto f = unit_random(g, 1, 0.0, 14.0, 31, t);
      std::vector<SpectralField> blocks;
      for (int j = part.j_min(); j <= part.j_max(); ++j) blocks.push_back(dyadic_block(f, j, part));
      for (int i = part.j_min(); i <= part.j_max(); ++i)
        for (int j = part.j_min(); j <= part.j_max(); ++j)
          if (std::abs(i - j) >= 2)
            worst = std::max(worst, l2(dyadic_block(blocks[j - part.j_min()], i, part)));
    }
    out.require(worst <= 1e-13, "block overlap " + sci(worst));
    out.note("max ||D_i D_j f|| " + sci(worst) + " (|i-j|>=2, 50 fields)");
  }
  {
    const GridSpec g(32, 3);
    const auto part = build_partition(g);
    double worst = 0.0;
    int pairs = 0;
    for (std::uint64_t t = 0; t < 20; ++t) {
      const auto f = unit_random(g, 1, 0.0, 24.0, 32, 2 * t);
      const auto h = unit_random(g, 1, 0.0, 24.0, 32, 2 * t + 1);
      for (int j = part.j_min(); j <= part.j_max(); ++j) {
        const auto prod = multiply(low_freq_cutoff(f, j - 1, part), dyadic_block(h, j, part));
        for (int i = part.j_min(); i <= part.j_max(); ++i)
          if (std::abs(i - j) >= 5) {
            worst = std::max(worst, l2(dyadic_block(prod, i, part)));
            ++pairs;
          }
      }
    }
    out.require(pairs > 0, "no block pairs five apart");
    out.require(worst <= 1e-10, "paraproduct leakage " + sci(worst));
    out.note("max ||D_i(S_{j-1}f D_j g)|| " + sci(worst) + " over " + std::to_string(pairs) + " cases");
  }
  return out;
}

Outcome constant_exponent_reduction() {
  Outcome out;
  const GridSpec g(16, 3);
  const auto part = build_partition(g);
  const double cell = std::pow(2 * kPi / 16, 3);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> up(1.1, 6.0), us(-1.0, 2.0);
  double worst = 0.0;
  int cases = 0;
  for (std::uint64_t t = 0; t < 20; ++t, ++cases) {
    const double p = up(rng);
    const auto f = inverse_transform(unit_random(g, t % 3 == 0 ? 3 : 1, 0.0, 8.0, 33, t));
    double acc = 0.0;
    for (double v : f.magnitude()) acc += cell * std::pow(v, p);
    worst = std::max(worst, rel(variable_lebesgue_norm(f, make_constant_exponent(p, g)).value, std::pow(acc, 1 / p)));
  }
  for (std::uint64_t t = 0; t < 20; ++t, ++cases) {
    const double p = up(rng), s = us(rng);
    const double r = t % 3 == 0 ? 1.0 : t % 3 == 1 ? 2.0 : INFINITY;
    const auto f = unit_random(g, 1, 0.0, 12.0, 34, t);
    const double classical = fourier_besov_norm(f, s, p, r, part).value;
    const double variable =
        variable_fourier_besov_norm(f, make_constant_regularity(s, g), make_constant_exponent(p, g), r, part).value;
    worst = std::max(worst, rel(variable, classical));
  }
  // Indicator of one level set of a two-level exponent: ‖1_A‖ = |A|^{1/p_A}.
  for (int t = 0; t < 10; ++t, ++cases) {
    const double base = 2.0 + 0.3 * t, amp = 0.5 + 0.1 * t;
    const auto p = make_piecewise_exponent(base, amp, g);
    const double level = t % 2 ? p.p_plus() : p.p_minus();
    PhysicalField ind(g, 1);
    std::size_t count = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (p.at(i) == level) {
        ind.at(0, i) = 1.0;
        ++count;
      }
    const double expect = std::pow(count * cell, 1.0 / level);
    worst = std::max(worst, rel(variable_lebesgue_norm(ind, p).value, expect));
  }
  out.require(worst <= 1e-8, "relative gap " + sci(worst));
  out.note(std::to_string(cases) + " cases, max relative gap " + sci(worst));
  return out;
}

Outcome luxemburg_axioms() {
  Outcome out;
  const GridSpec g(16, 3);
  const auto part = build_partition(g);
  const std::vector<std::pair<std::string, ExponentField>> families{
      {"bump", make_smooth_exponent(3.0, 1.0, Profile::bump, g)},
      {"trig", make_smooth_exponent(3.0, 1.0, Profile::trig, g)},
      {"step", make_piecewise_exponent(3.0, 1.0, g)}};
  const auto s = make_constant_regularity(0.5, g);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ua(-5.0, 5.0);
  double hom = 0.0, tri = 0.0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const auto& p = families[t % 3].second;
    const auto f = unit_random(g, 1, 0.0, 10.0, 40, 2 * t);
    const auto h = unit_random(g, 1, 0.0, 10.0, 40, 2 * t + 1);
    const double a = ua(rng);
    const auto pf = inverse_transform(f), ph = inverse_transform(h);
    const double nf = variable_lebesgue_norm(pf, p).value, nh = variable_lebesgue_norm(ph, p).value;
    hom = std::max(hom, rel(variable_lebesgue_norm(a * pf, p).value, std::abs(a) * nf));
    tri = std::max(tri, (variable_lebesgue_norm(pf + ph, p).value - nf - nh) / (nf + nh));
    const double bf = variable_fourier_besov_norm(f, s, p, 1.0, part).value;
    const double bh = variable_fourier_besov_norm(h, s, p, 1.0, part).value;
    hom = std::max(hom, rel(variable_fourier_besov_norm(a * f, s, p, 1.0, part).value, std::abs(a) * bf));
    tri = std::max(tri, (variable_fourier_besov_norm(f + h, s, p, 1.0, part).value - bf - bh) / (bf + bh));
  }
  out.require(hom <= 1e-8, "homogeneity " + sci(hom));
  out.require(tri <= 1e-8, "triangle slack " + sci(tri));
  out.note("50 pairs (bump/trig/step), homogeneity error " + sci(hom) + ", worst triangle slack " + sci(tri));
  return out;
}

Outcome holder() {
  Outcome out;
  const ExponentRecipe p1{ExponentKind::smooth, 4.0, 1.0, Profile::bump};
  const ExponentRecipe p2{ExponentKind::smooth, 4.0, 1.0, Profile::trig};
  const auto rep = verify_holder(p1, p2, 4.0, TrialPlan{});
  out.require(rep.ratios.size() == 100, "trial count " + std::to_string(rep.ratios.size()));
  out.require(rep.max_ratio() <= 4.0, "max ratio " + sci(rep.max_ratio()));
  out.require(rep.passes, "holdout");
  out.note("100 trials, max ratio " + sci(rep.max_ratio()));
  return out;
}

Outcome bernstein() {
  Outcome out;
  const TrialPlan plan;
  for (int item : {1, 2, 3}) {
    for (int k : {1, 2}) {
      if (item == 3 && k == 2) continue;
      const auto rep = verify_bernstein(item, k, 4.0, 2.0, 4.0, plan);
      const std::string tag = "item " + std::to_string(item) + " k=" + std::to_string(k);
      out.require(rep.passes && rep.all_checks(), tag);
      out.note(tag + " fitted " + sci(rep.fitted_constant) + " holdout " + sci(rep.holdout_max));
    }
  }
  return out;
}

Outcome embedding_interpolation() {
  Outcome out;
  const TrialPlan plan;
  const auto grad = verify_gradient_equivalence(1.0, 2.0, 1.0, plan);
  double implied = 0.0;
  for (double r : grad.ratios) implied = std::max({implied, r, 1.0 / r});
  out.require(grad.all_checks() && implied <= 8.0 / 3.0 * 1.05, "gradient constant " + sci(implied));
  out.note("gradient two-sided constant " + sci(implied));
  const auto emb = verify_embedding(1.0, 2.0, 4.0, 1.0, 2.0, plan);
  out.require(emb.passes, "embedding holdout");
  out.note("embedding fitted " + sci(emb.fitted_constant) + " holdout " + sci(emb.holdout_max));
  double worst = 0.0;
  for (double theta : {0.25, 0.5, 0.75}) {
    const auto rep = verify_interpolation(0.5, 1.5, theta, 2.0, 1.0, plan);
    out.require(rep.all_checks(), "interpolation theta=" + sci(theta));
    worst = std::max(worst, rep.max_ratio());
  }
  out.note("interpolation max ratio " + sci(worst));
  return out;
}

Outcome products() {
  Outcome out;
  const TrialPlan plan;
  const auto p29 = verify_tame_product(2.5, 6.0, 2.0, 1.5, plan);
  out.require(p29.passes, "first product law");
  out.note("(s,p,p1,p2)=(5/2,6,2,3/2) holdout/fitted " + sci(p29.holdout_max / p29.fitted_constant));
  for (const auto& inst : std::vector<std::array<double, 4>>{{2.5, 0.5, 2.0, 2.0}, {1.5, 0.5, 2.0, 2.0}}) {
    const auto rep = verify_mixed_product(inst[0], inst[1], inst[2], inst[3], plan);
    const std::string tag = "(s1,s2)=(" + sci(inst[0]) + "," + sci(inst[1]) + ")";
    out.require(rep.passes, tag);
    out.note(tag + " holdout/fitted " + sci(rep.holdout_max / rep.fitted_constant));
  }
  return out;
}

Outcome heat() {
  Outcome out;
  const GridSpec g(32, 3);
  const auto part = build_partition(g);
  const auto s = make_constant_regularity(0.5, g);
  const auto p = make_smooth_exponent(4.0, 1.0, Profile::bump, g);
  const auto times = TimeGridSpec{1.0, 64}.nodes();
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 5; ++t) {
    const auto rep = verify_heat_estimate(unit_random(g, 1, 0.0, 20.0, 90, t), std::nullopt, s, p, 1.0, 1.0,
                                          INFINITY, times, part);
    worst = std::max(worst, rep.max_ratio());
  }
  out.require(worst <= 1.0 + 1e-10, "semigroup ratio " + sci(worst));
  out.note("free semigroup max ratio " + sci(worst));
  const auto sweep = sweep_heat_estimate(HeatSweep{}, TrialPlan{});
  out.require(sweep.passes && sweep.all_checks(), "sweep");
  out.note("forced sweep holdout/fitted " + sci(sweep.holdout_max / sweep.fitted_constant));
  for (int n : {16, 32}) {
    const auto pp = build_partition(GridSpec(n, 3));
    const auto& table = lattice(pp.grid());
    for (int j = pp.j_min(); j <= pp.j_max(); ++j) {
      double kappa = INFINITY;
      for (std::size_t i = 0; i < table.radius.size(); ++i)
        if (pp.phi(std::ldexp(table.radius[i], -j)) != 0.0) kappa = std::min(kappa, table.radius2[i] / std::ldexp(1.0, 2 * j));
      out.require(kappa >= 9.0 / 16.0 - 1e-12, "kappa shell j=" + std::to_string(j) + " " + sci(kappa));
    }
    out.note("kappa n=" + std::to_string(n) + " " + sci(kappa_lattice_bound(pp)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Solver runs shared by the Picard, structure and residual criteria.

struct SolverCase {
  std::string name;
  SolverConfig config;
  SpectralField u0;
  std::optional<TimeSeriesField> forcing;
  RunRecord record;
};

SolverConfig base_solver(System system) {
  SolverConfig cfg;
  cfg.system = system;
  cfg.grid = GridSpec(16, 3);
  cfg.time = TimeGridSpec{1.0, 64};
  return cfg;
}

// η = 1/(8 C_fit) and ‖y‖ = η/2, so the certified contraction factor 4ηC is 1/2.
SolverCase certified_case(const std::string& name, System system, InitialSpec initial,
                          std::optional<ForcingSpec> forcing) {
  SolverCase c{name, base_solver(system), SpectralField(GridSpec(16, 3), 1), std::nullopt, {}};
  auto& cfg = c.config;
  const auto times = cfg.time.nodes();
  const SolutionSpace space(system, ExponentField::from_recipe(cfg.p, cfg.grid), cfg.rho,
                            build_partition(cfg.grid));
  cfg.c_fit = calibrate_bilinear(space, times, cfg.bilinear, cfg.calibration_trials, cfg.seed).constant;
  cfg.picard.eta = 1.0 / (8.0 * cfg.c_fit);
  c.u0 = make_initial(system, cfg.grid, initial);
  if (forcing) c.forcing = make_forcing(system, cfg.grid, *forcing, times);
  scale_data(cfg, c.u0, c.forcing, 0.5 * cfg.picard.eta);
  c.record = solve(cfg, c.u0, c.forcing);
  return c;
}

const std::vector<SolverCase>& solver_cases() {
  static const std::vector<SolverCase> cases = [] {
    std::vector<SolverCase> out;
    InitialSpec shell;
    InitialSpec tg;
    tg.kind = InitialKind::taylor_green;
    InitialSpec pair;
    pair.kind = InitialKind::bump_pair;
    ForcingSpec decay;
    decay.envelope = Envelope::exp_decay;
    out.push_back(certified_case("ns-shell", System::navier_stokes, shell, std::nullopt));
    out.push_back(certified_case("ns-taylor-green-forced", System::navier_stokes, tg, decay));
    out.push_back(certified_case("ks-bump-pair", System::keller_segel, pair, std::nullopt));
    out.push_back(certified_case("ks-shell-forced", System::keller_segel, shell, decay));
    return out;
  }();
  return cases;
}

double diagnostic(const RunRecord& rec, const std::string& name) {
  for (const auto& [k, v] : rec.diagnostics)
    if (k == name) return v;
  return NAN;
}

bool verdict(const RunRecord& rec, const std::string& name) {
  for (const auto& [k, v] : rec.verdicts)
    if (k == name) return v;
  return false;
}

Outcome picard() {
  Outcome out;
  PicardOptions opt;
  opt.tolerance = 1e-14;
  const auto toy = picard_solve(
      0.1, [](double u, double v) { return u * v; }, [](double u) { return std::abs(u); }, opt);
  const double root = oracle::quadratic_fixed_point(0.1, 1.0);
  out.require(std::abs(toy.solution - root) <= 1e-8, "toy fixed point");
  out.note("toy " + std::to_string(toy.solution));
  for (const auto& c : solver_cases()) {
    const auto& r = c.record;
    const double rate = diagnostic(r, "max_contraction_rate");
    out.require(r.certified, c.name + " not certified");
    out.require(r.final_norms.max() <= 2 * r.eta + 1e-6, c.name + " final norm");
    out.require(rate <= r.contraction_bound + 0.05, c.name + " contraction rate " + sci(rate));
    out.note(c.name + ": ||u||/eta " + sci(r.final_norms.max() / r.eta) + ", rate " + sci(rate) + " vs 4etaC " +
             sci(r.contraction_bound));
  }
  for (std::size_t i : {std::size_t{0}, std::size_t{2}}) {
    const auto& c = solver_cases()[i];
    InitialSpec other;
    other.seed = 17;
    auto delta = make_initial(c.config.system, c.config.grid, other);
    delta *= 1e-2 * c.u0.max_abs() / delta.max_abs();
    const auto cont = continuity_check(c.config, c.u0, delta, c.forcing);
    out.require(cont.passes, c.name + " continuity");
    out.note(c.name + " continuity " + sci(cont.solution_distance / cont.bound) + " of bound");
  }
  return out;
}

Outcome ns_structure() {
  Outcome out;
  double worst = 0.0;
  for (const auto& c : solver_cases())
    if (c.config.system == System::navier_stokes) {
      out.require(verdict(c.record, "divergence_free"), c.name);
      worst = std::max(worst, diagnostic(c.record, "max_divergence_defect"));
    }
  out.require(worst <= 1e-10, "divergence " + sci(worst));
  const GridSpec g(32, 3);
  double idem = 0.0, grad = 0.0;
  for (std::uint64_t t = 0; t < 10; ++t) {
    const auto u = unit_random(g, 3, 0.0, 20.0, 70, t);
    const auto pu = leray_project(u);
    idem = std::max(idem, (leray_project(pu) - pu).max_abs() / u.max_abs());
    const auto gphi = gradient(unit_random(g, 1, 0.0, 20.0, 71, t));
    grad = std::max(grad, leray_project(gphi).max_abs() / gphi.max_abs());
  }
  out.require(idem <= 1e-13, "idempotence " + sci(idem));
  out.require(grad <= 1e-13, "gradients " + sci(grad));
  out.note("max divergence " + sci(worst) + ", P^2-P " + sci(idem) + ", P grad " + sci(grad));
  return out;
}

Outcome ks_structure() {
  Outcome out;
  for (const auto& c : solver_cases())
    if (c.config.system == System::keller_segel) {
      out.require(!c.config.bilinear.dealias, c.name + " dealiased");
      out.require(verdict(c.record, "symmetric_form_agrees"), c.name + " symmetric form");
      out.require(verdict(c.record, "zero_mode_preserved"), c.name + " zero mode");
      out.note(c.name + " form defect " + sci(diagnostic(c.record, "symmetric_form_defect")) + ", zero mode " +
               sci(diagnostic(c.record, "max_zero_mode")));
    }
  return out;
}

Outcome residual() {
  Outcome out;
  for (const auto& c : solver_cases()) {
    const auto& r = c.record;
    out.require(r.converged, c.name + " did not converge");
    out.require(r.residual <= 10 * c.config.picard.tolerance, c.name + " residual " + sci(r.residual));
    out.note(c.name + " residual " + sci(r.residual) + " after " + std::to_string(r.iterations) + " iterations");
  }
  return out;
}

Outcome scaling() {
  Outcome out;
  const GridSpec g(32, 3);
  const auto part = build_partition(g);
  double worst = 0.0;
  for (System sys : {System::navier_stokes, System::keller_segel}) {
    const auto f = random_field(g, {1, 2.0, 3.0, 0.0, true, false}, 80, 0);
    for (int lambda : {2, 4})
      for (double p : {2.0, 3.0, 6.0}) {
        const auto rep = scaling_check(sys, f, lambda, p, part);
        out.require(rep.relative_error <= 1e-10,
                    to_string(sys) + " lambda=" + std::to_string(lambda) + " p=" + sci(p));
        worst = std::max(worst, rep.relative_error);
      }
  }
  out.note("12 cases, max relative change " + sci(worst));
  return out;
}

// ---------------------------------------------------------------------------
// Replay: every CLI command run twice from one config into two directories.

std::map<std::string, std::string> directory_contents(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) out[fs::relative(e.path(), dir).string()] = read_file(e.path());
  return out;
}

Outcome replay(const std::string& cli) {
  Outcome out;
  if (cli.empty() || !fs::exists(cli)) {
    out.require(false, "command-line tool not built");
    return out;
  }
  const fs::path root = fs::temp_directory_path() / "fbl-acceptance-replay";
  fs::remove_all(root);
  fs::create_directories(root);
  const std::string common = "grid.n = 16\nseed = 5\ntrials.calibration = 10\ntrials.holdout = 10\n";
  const std::vector<std::pair<std::string, std::string>> runs{
      {"norm", common + "exponent.p.kind = smooth\n"},
      {"decompose", common},
      {"verify", common + "estimate.id = holder\n"},
      {"verify", common + "estimate.id = product-2.10\nestimate.s1 = 1.5\n"},
      {"heat", common + "time.intervals = 16\n"},
      {"solve-ns", common + "time.intervals = 32\ninitial.target = 0.05\noutput.snapshot_times = 0.5\n"},
      {"solve-ks", common + "time.intervals = 32\ninitial.kind = bump-pair\ninitial.target = 0.05\n"},
      {"sweep", common + "time.intervals = 16\nsweep.trials = 2\n"}};
  int files = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& [command, text] = runs[i];
    const fs::path cfg = root / ("run" + std::to_string(i) + ".cfg");
    write_file_atomic(cfg, text + "output.stem = run" + std::to_string(i) + "\n");
    for (const char* side : {"a", "b"}) {
      const fs::path dir = root / side;
      const std::string cmd = "\"" + cli + "\" " + command + " -c \"" + cfg.string() + "\" -o \"" + dir.string() +
                              "\" > /dev/null 2>&1";
      const int status = std::system(cmd.c_str());
      out.require(status == 0, command + " exited with status " + std::to_string(status));
    }
  }
  const auto a = directory_contents(root / "a");
  const auto b = directory_contents(root / "b");
  out.require(a.size() == b.size(), "different file sets");
  for (const auto& [name, bytes] : a) {
    const auto it = b.find(name);
    out.require(it != b.end() && it->second == bytes, name + " differs");
    ++files;
  }
  out.require(files >= static_cast<int>(runs.size()), "too few reports");
  out.note(std::to_string(runs.size()) + " commands, " + std::to_string(files) + " files byte-identical");
  fs::remove_all(root);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
#ifdef FBL_CLI_PATH
  if (cli.empty()) cli = FBL_CLI_PATH;
#endif
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"partition of unity", partition_of_unity},
      {"quasi-orthogonality", quasi_orthogonality},
      {"constant-exponent reduction", constant_exponent_reduction},
      {"Luxemburg norm axioms", luxemburg_axioms},
      {"variable Hölder inequality", holder},
      {"Bernstein inequalities", bernstein},
      {"gradient equivalence, embedding, interpolation", embedding_interpolation},
      {"product estimates", products},
      {"heat estimate", heat},
      {"Picard engine", picard},
      {"Navier-Stokes structure", ns_structure},
      {"Keller-Segel structure", ks_structure},
      {"fixed-point residual", residual},
      {"critical scaling", scaling},
      {"replay determinism", [&cli] { return replay(cli); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s %2zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
