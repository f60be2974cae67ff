#include "fbl/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fbl/errors.hpp"
#include "format.hpp"
#include "rng.hpp"

namespace fbl {
namespace {

constexpr double kBumpRadius = 0.9 * std::numbers::pi;

std::vector<double> sample_profile(Profile profile, const GridSpec& grid) {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    out[i] = profile_value(profile, grid.position(i), grid.dims());
  return out;
}

std::array<double, 3> cell_center() {
  return {std::numbers::pi, std::numbers::pi, std::numbers::pi};
}

}  // namespace

double ExponentRecipe::lowest() const noexcept {
  return kind == ExponentKind::constant ? base : base - std::abs(amplitude);
}

double ExponentRecipe::highest() const noexcept {
  return kind == ExponentKind::constant ? base : base + std::abs(amplitude);
}

std::string ExponentRecipe::describe() const {
  std::string out = "{kind=" + to_string(kind) + ", base=" + detail::format_double(base);
  if (kind != ExponentKind::constant)
    out += ", amplitude=" + detail::format_double(amplitude) + ", profile=" + to_string(profile);
  return out + "}";
}

std::string to_string(ExponentKind k) {
  switch (k) {
    case ExponentKind::constant: return "constant";
    case ExponentKind::smooth: return "smooth";
    case ExponentKind::piecewise: return "piecewise";
  }
  return "?";
}

std::string to_string(Profile p) {
  switch (p) {
    case Profile::bump: return "bump";
    case Profile::trig: return "trig";
    case Profile::step: return "step";
  }
  return "?";
}

std::optional<ExponentKind> parse_exponent_kind(const std::string& s) {
  if (s == "constant") return ExponentKind::constant;
  if (s == "smooth") return ExponentKind::smooth;
  if (s == "piecewise") return ExponentKind::piecewise;
  return std::nullopt;
}

std::optional<Profile> parse_profile(const std::string& s) {
  if (s == "bump") return Profile::bump;
  if (s == "trig") return Profile::trig;
  if (s == "step") return Profile::step;
  return std::nullopt;
}

double profile_value(Profile profile, const std::array<double, 3>& x, int dims) {
  switch (profile) {
    case Profile::bump: {
      double r2 = 0.0;
      for (int d = 0; d < dims; ++d) r2 += (x[d] - std::numbers::pi) * (x[d] - std::numbers::pi);
      const double q = r2 / (kBumpRadius * kBumpRadius);
      if (q >= 1.0) return -1.0;
      return 2.0 * std::exp(1.0 - 1.0 / (1.0 - q)) - 1.0;
    }
    case Profile::trig: {
      double v = 1.0;
      for (int d = 0; d < dims; ++d) v *= std::cos(x[d]);
      return v;
    }
    case Profile::step:
      return x[0] < std::numbers::pi ? 1.0 : -1.0;
  }
  return 0.0;
}

ExponentField::ExponentField(GridSpec grid, std::vector<double> values, double p_infinity,
                             std::string descriptor, ExponentRole role,
                             std::optional<ExponentRecipe> recipe)
    : grid_(grid),
      values_(std::move(values)),
      p_infinity_(p_infinity),
      descriptor_(std::move(descriptor)),
      role_(role),
      recipe_(std::move(recipe)) {
  if (values_.size() != grid_.size()) throw DomainError("exponent samples do not match the grid");
  const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
  p_minus_ = *lo;
  p_plus_ = *hi;
  if (!std::isfinite(p_minus_) || !std::isfinite(p_plus_) || !std::isfinite(p_infinity_))
    throw DomainError("exponent samples must be finite");
  if (role_ == ExponentRole::integrability && (p_minus_ <= 1.0 || p_infinity_ <= 1.0))
    throw DomainError("exponent must exceed 1 (lowest sample " + detail::format_double(p_minus_) +
                      ")");
  frequency_map_.resize(grid_.size());
  const int n = grid_.n();
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    const Freq xi = grid_.frequency(i);
    std::array<int, 3> m{0, 0, 0};
    for (int d = 0; d < grid_.dims(); ++d) m[d] = (xi[d] + n / 2 + n) % n;
    frequency_map_[i] = grid_.flat_from_multi(m);
  }
}

ExponentField ExponentField::from_recipe(const ExponentRecipe& recipe, const GridSpec& grid,
                                         ExponentRole role) {
  if (role == ExponentRole::integrability && recipe.lowest() <= 1.0)
    throw DomainError("exponent must exceed 1: " + recipe.describe() + " reaches " +
                      detail::format_double(recipe.lowest()));
  std::vector<double> values(grid.size(), recipe.base);
  if (recipe.kind != ExponentKind::constant && recipe.amplitude != 0.0) {
    const Profile profile = recipe.kind == ExponentKind::piecewise ? Profile::step : recipe.profile;
    const auto shape = sample_profile(profile, grid);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += recipe.amplitude * shape[i];
  }
  const double limit = values[0];
  return ExponentField(grid, std::move(values), limit, recipe.describe(), role, recipe);
}

ExponentField ExponentField::on_grid(const GridSpec& grid) const {
  if (!recipe_) throw DomainError("exponent field has no recipe to regenerate from");
  return from_recipe(*recipe_, grid, role_);
}

ExponentField ExponentField::map(const std::function<double(double)>& g, std::string descriptor,
                                 ExponentRole role) const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), g);
  return ExponentField(grid_, std::move(out), g(p_infinity_), std::move(descriptor), role);
}

ExponentField make_constant_exponent(double p, const GridSpec& grid) {
  return ExponentField::from_recipe({ExponentKind::constant, p, 0.0, Profile::bump}, grid);
}

ExponentField make_smooth_exponent(double base, double amplitude, Profile profile,
                                   const GridSpec& grid) {
  return ExponentField::from_recipe({ExponentKind::smooth, base, amplitude, profile}, grid);
}

ExponentField make_piecewise_exponent(double base, double amplitude, const GridSpec& grid) {
  return ExponentField::from_recipe({ExponentKind::piecewise, base, amplitude, Profile::step},
                                    grid);
}

ExponentField make_constant_regularity(double s, const GridSpec& grid) {
  return ExponentField::from_recipe({ExponentKind::constant, s, 0.0, Profile::bump}, grid,
                                    ExponentRole::regularity);
}

ExponentField harmonic_combination(const ExponentField& p1, const ExponentField& p2) {
  if (p1.grid() != p2.grid()) throw DomainError("exponents live on different grids");
  std::vector<double> values(p1.values().size());
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = 1.0 / (1.0 / p1.at(i) + 1.0 / p2.at(i));
  const double limit = 1.0 / (1.0 / p1.p_infinity() + 1.0 / p2.p_infinity());
  auto lowest = *std::min_element(values.begin(), values.end());
  if (lowest <= 1.0) throw DomainError("harmonic combination of exponents drops to 1 or below");
  return ExponentField(p1.grid(), std::move(values), limit,
                       "harmonic(" + p1.descriptor() + ", " + p2.descriptor() + ")");
}

double torus_distance(const std::array<double, 3>& x, const std::array<double, 3>& y, int dims) {
  double acc = 0.0;
  for (int d = 0; d < dims; ++d) {
    double delta = std::fmod(std::abs(x[d] - y[d]), kTwoPi);
    delta = std::min(delta, kTwoPi - delta);
    acc += delta * delta;
  }
  return std::sqrt(acc);
}

LogHolderReport check_log_holder(const ExponentField& p, std::uint64_t sample_budget,
                                 const LogHolderOptions& options) {
  if (sample_budget < 2) throw DomainError("log-Hölder sample budget must be at least 2");
  const auto& grid = p.grid();
  const int dims = grid.dims();
  const std::size_t size = grid.size();
  LogHolderReport report;
  report.budget = options.constant_budget;
  report.note =
      "decay measured against p_infinity with torus distance to the cell center; on a compact "
      "torus this condition is nearly vacuous";

  std::vector<double> inv(size);
  std::vector<std::array<double, 3>> pos(size);
  for (std::size_t i = 0; i < size; ++i) {
    inv[i] = 1.0 / p.at(i);
    pos[i] = grid.position(i);
  }

  auto visit = [&](std::size_t a, std::size_t b) {
    ++report.pairs_examined;
    const double diff = std::abs(inv[a] - inv[b]);
    if (diff == 0.0) return;
    const double d = torus_distance(pos[a], pos[b], dims);
    const double value = diff * std::log(std::numbers::e + 1.0 / d);
    if (value > report.local_constant) {
      report.local_constant = value;
      report.worst_pair = {std::min(a, b), std::max(a, b)};
    }
  };

  const std::uint64_t all_pairs = static_cast<std::uint64_t>(size) * (size - 1) / 2;
  if (all_pairs <= sample_budget) {
    report.exhaustive = true;
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = a + 1; b < size; ++b) visit(a, b);
  } else {
    auto engine = detail::trial_engine(options.seed, 0);
    std::uniform_int_distribution<std::size_t> point(0, size - 1);
    std::uniform_int_distribution<int> axis(0, dims - 1);
    const std::uint64_t neighbours = sample_budget / 2;
    for (std::uint64_t k = 0; k < neighbours; ++k) {
      const std::size_t a = point(engine);
      auto m = grid.multi_index(a);
      const int ax = axis(engine);
      m[ax] = (m[ax] + 1) % grid.n();
      visit(a, grid.flat_from_multi(m));
    }
    for (std::uint64_t k = neighbours; k < sample_budget; ++k) {
      const std::size_t a = point(engine);
      const std::size_t b = point(engine);
      if (a != b) visit(a, b);
    }
  }

  const double inv_limit = 1.0 / p.p_infinity();
  const auto center = cell_center();
  for (std::size_t i = 0; i < size; ++i) {
    const double diff = std::abs(inv[i] - inv_limit);
    if (diff == 0.0) continue;
    const double d = torus_distance(pos[i], center, dims);
    report.decay_constant = std::max(report.decay_constant, diff * std::log(std::numbers::e + d));
  }
  report.passes = report.local_constant <= options.constant_budget;
  return report;
}

}  // namespace fbl
