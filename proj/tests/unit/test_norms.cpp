#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fbl/norms.hpp"
#include "fbl/random_fields.hpp"
#include "fbl/spectral.hpp"
#include "oracles.hpp"

using namespace fbl;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

PhysicalField random_physical(const GridSpec& g, int comps, std::uint64_t seed) {
  return inverse_transform(random_field(g, {comps, 0.0, 6.0, 0.0, true, false}, seed, 0));
}

// Block value computed straight from the coefficients.
double block_oracle(const SpectralField& f, const DyadicPartition& part, int j, double s, double p) {
  const auto& g = f.grid();
  const double w = std::pow(2 * kPi / g.n(), g.dims());
  const auto& table = lattice(g);
  const auto mag = f.magnitude();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double v = part.phi(std::ldexp(table.radius[i], -j)) * mag[i];
    if (v > 0.0) acc += w * std::pow(v, p);
  }
  return std::pow(2.0, j * s) * std::pow(acc, 1.0 / p);
}

}  // namespace

TEST_CASE("constant exponent Luxemburg norm has the closed form") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (double q : {1.0, 1.5, 2.0, 4.0, 7.0}) {
    std::vector<double> a(40), qs(40, q);
    for (auto& v : a) v = u(rng);
    double s = 0.0;
    for (double v : a) s += 0.3 * std::pow(v, q);
    const auto n = luxemburg_norm(a, qs, 0.3);
    CHECK(n.method == NormMethod::closed_form);
    CHECK(rel(n.value, std::pow(s, 1.0 / q)) <= 1e-13);
  }
}

TEST_CASE("variable Luxemburg norm matches bisection") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ua(0.0, 5.0), uq(1.0, 6.0), uw(1e-3, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 5 + trial * 7;
    std::vector<double> a(m), q(m);
    for (auto& v : a) v = ua(rng);
    for (auto& v : q) v = uq(rng);
    const double w = uw(rng);
    const auto n = luxemburg_norm(a, q, w);
    CHECK(n.method == NormMethod::bisection);
    CHECK(rel(n.value, oracle::luxemburg(a, q, w)) <= kNormTolerance);
  }
}

TEST_CASE("two-level exponent matches the scalar root") {
  // Half the mass at exponent 2, half at exponent 5, all amplitudes c.
  const int m = 64;
  const double c = 1.7, w = 1.0 / m;
  std::vector<double> a(m, c), q(m);
  for (int i = 0; i < m; ++i) q[i] = i < m / 2 ? 2.0 : 5.0;
  const double root = oracle::bisect(
      [&](double lam) { return 0.5 * std::pow(c / lam, 2.0) + 0.5 * std::pow(c / lam, 5.0) - 1.0; }, 1e-3,
      1e3);
  CHECK(rel(luxemburg_norm(a, q, w).value, root) <= kNormTolerance);
  // Equal amplitudes make any mixture of exponents give λ = c·(Σ w)^{...} = c when Σ w = 1.
  CHECK(rel(root, c) <= 1e-12);
}

TEST_CASE("variable Lebesgue norm is a norm") {
  const GridSpec g(16, 3);
  const auto p = make_smooth_exponent(3.0, 1.0, Profile::bump, g);
  const auto f = random_physical(g, 1, 1);
  const auto h = random_physical(g, 1, 2);
  const double nf = variable_lebesgue_norm(f, p).value;
  const double nh = variable_lebesgue_norm(h, p).value;
  CHECK(nf > 0.0);
  CHECK(variable_lebesgue_norm(PhysicalField(g, 1), p).value == 0.0);
  for (double alpha : {-3.0, 0.25, 10.0})
    CHECK(rel(variable_lebesgue_norm(alpha * f, p).value, std::abs(alpha) * nf) <= 1e-8);
  CHECK(variable_lebesgue_norm(f + h, p).value <= (nf + nh) * (1 + 1e-8));
  // Unit ball: modular at the norm equals one.
  CHECK(modular((1.0 / nf) * f, p) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("constant exponent reduces to classical Lebesgue norms") {
  const GridSpec g(16, 3);
  const auto f = random_physical(g, 3, 7);
  const double cell = std::pow(2 * kPi / 16, 3);
  for (double p : {1.0, 2.0, 3.5, 6.0}) {
    double acc = 0.0;
    for (double v : f.magnitude()) acc += cell * std::pow(v, p);
    CHECK(rel(lebesgue_norm(f, p).value, std::pow(acc, 1 / p)) <= 1e-13);
    if (p > 1.0)
      CHECK(rel(variable_lebesgue_norm(f, make_constant_exponent(p, g)).value, std::pow(acc, 1 / p)) <= 1e-12);
  }
  double mx = 0.0;
  for (double v : f.magnitude()) mx = std::max(mx, v);
  CHECK(lebesgue_norm(f, INFINITY).value == mx);
}

TEST_CASE("Fourier-Lebesgue L2 norm is the physical L2 norm times the lattice weight") {
  const GridSpec g(16, 3);
  const auto f = random_field(g, {2, 0.0, 7.0, 0.0, true, false}, 3, 0);
  const double weight = std::pow(2 * kPi / 16, 1.5);
  CHECK(rel(fourier_lebesgue_norm(f, 2.0), weight * lebesgue_norm(inverse_transform(f), 2.0).value) <= 1e-12);
}

TEST_CASE("Besov blocks match direct summation") {
  const GridSpec g(16, 3);
  const auto part = build_partition(g);
  const auto f = random_field(g, {1, 0.0, 12.0, 0.0, true, false}, 8, 0);
  for (double s : {-1.0, 0.5, 2.0})
    for (double p : {1.0, 2.0, 5.0}) {
      const auto b = besov_blocks(f, s, p, part);
      for (int j = part.j_min(); j <= part.j_max(); ++j)
        CHECK(rel(b[j - part.j_min()], block_oracle(f, part, j, s, p)) <= 1e-12);
    }
}

TEST_CASE("sequence norms") {
  const std::vector<double> b{3.0, 4.0, 0.0, 1.0};
  CHECK(sequence_norm(b, 1.0) == 8.0);
  CHECK(sequence_norm(b, 2.0) == doctest::Approx(std::sqrt(26.0)).epsilon(1e-15));
  CHECK(sequence_norm(b, INFINITY) == 4.0);
}

TEST_CASE("variable Besov norm with constant exponents reduces to the constant norm") {
  const GridSpec g(16, 3);
  const auto part = build_partition(g);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> us(-1.0, 2.0), up(1.0, 6.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_field(g, {1, 0.0, 12.0, 1.0, true, false}, 100 + trial, 0);
    const double s = us(rng), p = up(rng);
    const double r = trial % 3 == 0 ? 1.0 : trial % 3 == 1 ? 2.0 : INFINITY;
    const double a = fourier_besov_norm(f, s, p, r, part).value;
    const double b = variable_fourier_besov_norm(f, make_constant_regularity(s, g), make_constant_exponent(p, g),
                                                 r, part)
                         .value;
    CHECK(rel(b, a) <= 1e-8);
  }
}

TEST_CASE("variable Besov norm is homogeneous and subadditive") {
  const GridSpec g(16, 3);
  const auto part = build_partition(g);
  const auto s = make_constant_regularity(0.5, g);
  const auto p = make_smooth_exponent(3.0, 1.0, Profile::bump, g);
  const auto f = random_field(g, {1, 0.0, 12.0, 0.0, true, false}, 1, 0);
  const auto h = random_field(g, {1, 0.0, 12.0, 0.0, true, false}, 2, 0);
  const double nf = variable_fourier_besov_norm(f, s, p, 1.0, part).value;
  const double nh = variable_fourier_besov_norm(h, s, p, 1.0, part).value;
  CHECK(rel(variable_fourier_besov_norm(2.5 * f, s, p, 1.0, part).value, 2.5 * nf) <= 1e-8);
  CHECK(variable_fourier_besov_norm(f + h, s, p, 1.0, part).value <= (nf + nh) * (1 + 1e-8));
}

TEST_CASE("variable sequence index with constant values agrees") {
  const GridSpec g(16, 3);
  const auto part = build_partition(g);
  const auto s = make_constant_regularity(0.5, g);
  const auto p = make_constant_exponent(2.0, g);
  const auto f = random_field(g, {1, 0.0, 12.0, 0.0, true, false}, 5, 0);
  const double fixed = variable_fourier_besov_norm(f, s, p, 1.5, part).value;
  const double mixed = variable_fourier_besov_norm(f, s, p, make_constant_exponent(1.5, g), part).value;
  CHECK(rel(mixed, fixed) <= 1e-7);
}

TEST_CASE("time integrals") {
  const std::vector<double> t{0.0, 0.5, 1.0, 2.0};
  const std::vector<double> one(4, 1.0);
  CHECK(time_lebesgue(t, one, 1.0, Quadrature::trapezoid) == doctest::Approx(2.0));
  CHECK(time_lebesgue(t, one, 3.0, Quadrature::trapezoid) == doctest::Approx(std::cbrt(2.0)));
  // Linear values are integrated exactly by the trapezoid rule.
  CHECK(time_lebesgue(t, t, 1.0, Quadrature::trapezoid) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(time_lebesgue(t, t, 1.0, Quadrature::left_endpoint) == doctest::Approx(0.5 * 0.5 + 1.0));
  CHECK(time_lebesgue(t, t, INFINITY, Quadrature::trapezoid) == 2.0);
}

TEST_CASE("geometric time grid") {
  const TimeGridSpec spec{2.0, 16, TimeSpacing::geometric, 8.0};
  const auto t = spec.nodes();
  REQUIRE(t.size() == 17);
  CHECK(t.front() == 0.0);
  CHECK(t.back() == doctest::Approx(2.0).epsilon(1e-15));
  for (std::size_t k = 1; k < t.size(); ++k) {
    CHECK(t[k] > t[k - 1]);
    CHECK(t[k] == doctest::Approx(2.0 * std::expm1(8.0 * k / 16) / std::expm1(8.0)));
  }
  const auto uni = TimeGridSpec{1.0, 4, TimeSpacing::uniform, 8.0}.nodes();
  CHECK(uni[2] == 0.5);
}

TEST_CASE("Chemin-Lerner norm of a constant series") {
  const GridSpec g(16, 3);
  const auto part = build_partition(g);
  const auto f = random_field(g, {1, 0.0, 12.0, 0.0, true, false}, 2, 0);
  const auto series = TimeSeriesField::constant(f, TimeGridSpec{3.0, 8}.nodes());
  const double besov = fourier_besov_norm(f, 0.5, 2.0, 1.0, part).value;
  CHECK(rel(chemin_lerner_norm(series, 1.0, 0.5, 2.0, 1.0, part).value, 3.0 * besov) <= 1e-12);
  CHECK(rel(chemin_lerner_norm(series, 2.0, 0.5, 2.0, 1.0, part).value, std::sqrt(3.0) * besov) <= 1e-12);
  CHECK(rel(chemin_lerner_norm(series, INFINITY, 0.5, 2.0, 1.0, part).value, besov) <= 1e-12);
}

TEST_CASE("Hölder check on random pairs") {
  const GridSpec g(16, 3);
  const auto p1 = make_smooth_exponent(4.0, 1.0, Profile::bump, g);
  const auto p2 = make_smooth_exponent(4.0, 1.0, Profile::trig, g);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto rep = holder_check(random_physical(g, 1, seed), random_physical(g, 1, seed + 50), p1, p2);
    CHECK(rep.passes);
  }
}

TEST_CASE("root-found norms bracket the unit modular") {
  const GridSpec g(16, 3);
  for (Profile profile : {Profile::bump, Profile::trig, Profile::step}) {
    const auto p = make_smooth_exponent(3.0, 1.5, profile, g);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const auto f = random_physical(g, 1, seed);
      const auto n = variable_lebesgue_norm(f, p);
      CHECK(n.method == NormMethod::bisection);
      CHECK(n.tolerance == kNormTolerance);
      CHECK(modular((1.0 / (n.value * (1 + n.tolerance))) * f, p) <= 1.0);
      CHECK(modular((1.0 / (n.value * (1 - n.tolerance))) * f, p) >= 1.0);
    }
  }
}
