#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "fbl/errors.hpp"
#include "fbl/exponents.hpp"
#include "oracles.hpp"

using namespace fbl;

TEST_CASE("constant exponent has equal bounds and limit") {
  const auto p = make_constant_exponent(2.0, GridSpec(32, 3));
  CHECK(p.p_minus() == 2.0);
  CHECK(p.p_plus() == 2.0);
  CHECK(p.p_infinity() == 2.0);
  CHECK(p.is_constant());
}

TEST_CASE("exponents at or below 1 are rejected") {
  CHECK_THROWS_WITH_AS(make_constant_exponent(1.0, GridSpec(16, 3)),
                       doctest::Contains("exponent must exceed 1"), DomainError);
  CHECK_THROWS_AS(make_smooth_exponent(2.0, 1.5, Profile::bump, GridSpec(16, 3)), DomainError);
}

TEST_CASE("smooth bump exponent reaches the profile extrema on the grid") {
  const GridSpec g(16, 3);
  const auto p = make_smooth_exponent(4.0, 1.0, Profile::bump, g);
  double lo = 1e300, hi = -1e300;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double v = 4.0 + profile_value(Profile::bump, g.position(i), 3);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(p.p_minus() == lo);
  CHECK(p.p_plus() == hi);
  CHECK(hi == doctest::Approx(5.0).epsilon(1e-14));  // the cell center is a grid point
  CHECK(lo == 3.0);
}

TEST_CASE("bounds recomputed from samples match the stored ones exactly") {
  for (auto profile : {Profile::bump, Profile::trig, Profile::step}) {
    const auto p = make_smooth_exponent(3.5, 0.75, profile, GridSpec(16, 3));
    const auto [lo, hi] = std::minmax_element(p.values().begin(), p.values().end());
    CHECK(*lo == p.p_minus());
    CHECK(*hi == p.p_plus());
  }
}

TEST_CASE("zero amplitude gives the constant exponent") {
  const GridSpec g(16, 3);
  const auto a = make_smooth_exponent(4.0, 0.0, Profile::bump, g);
  const auto b = make_constant_exponent(4.0, g);
  CHECK(a.values() == b.values());
  CHECK(a.p_infinity() == b.p_infinity());
}

TEST_CASE("reflecting the amplitude swaps the extrema") {
  const GridSpec g(16, 3);
  const auto up = make_smooth_exponent(4.0, 1.0, Profile::trig, g);
  const auto down = make_smooth_exponent(4.0, -1.0, Profile::trig, g);
  CHECK(up.p_plus() - 4.0 == doctest::Approx(4.0 - down.p_minus()).epsilon(1e-15));
  CHECK(up.p_minus() - 4.0 == doctest::Approx(4.0 - down.p_plus()).epsilon(1e-15));
}

TEST_CASE("the recipe regenerates the field on another grid") {
  const auto p16 = make_smooth_exponent(4.0, 1.0, Profile::bump, GridSpec(16, 3));
  const auto p32 = p16.on_grid(GridSpec(32, 3));
  CHECK(p32.grid() == GridSpec(32, 3));
  CHECK(p32.p_plus() == doctest::Approx(p16.p_plus()).epsilon(1e-14));
  const auto direct = make_smooth_exponent(4.0, 1.0, Profile::bump, GridSpec(32, 3));
  CHECK(p32.values() == direct.values());
}

TEST_CASE("frequency lookup reads the cell center at zero frequency") {
  const GridSpec g(16, 3);
  const auto p = make_smooth_exponent(4.0, 1.0, Profile::bump, g);
  CHECK(p.at_frequency(0) == p.p_plus());
}

TEST_CASE("harmonic combination adds reciprocals pointwise") {
  const GridSpec g(16, 3);
  const auto p1 = make_smooth_exponent(4.0, 1.0, Profile::bump, g);
  const auto p2 = make_constant_exponent(6.0, g);
  const auto q = harmonic_combination(p1, p2);
  for (std::size_t i = 0; i < g.size(); i += 97)
    CHECK(1.0 / q.at(i) == doctest::Approx(1.0 / p1.at(i) + 1.0 / 6.0).epsilon(1e-15));
  CHECK_THROWS_AS(harmonic_combination(make_constant_exponent(1.5, g), make_constant_exponent(2.0, g)),
                  DomainError);
}

TEST_CASE("log-Hölder constants vanish for constant exponents") {
  const auto r = check_log_holder(make_constant_exponent(3.0, GridSpec(16, 3)), 10000, {});
  CHECK(r.local_constant == 0.0);
  CHECK(r.decay_constant == 0.0);
  CHECK(r.passes);
  CHECK_FALSE(r.note.empty());
}

TEST_CASE("exhaustive log-Hölder scan matches a brute-force pair scan at n = 8") {
  // n = 8 is below the dyadic minimum but exponents have no such restriction.
  const GridSpec g(8, 3);
  const auto p = make_smooth_exponent(4.0, 1.0, Profile::trig, g);
  const auto r = check_log_holder(p, 1u << 20, {});
  CHECK(r.exhaustive);
  CHECK(r.pairs_examined == 512u * 511u / 2u);
  CHECK(r.local_constant == doctest::Approx(oracle::log_holder_exhaustive(p.values(), 8, 3)).epsilon(1e-14));
}

TEST_CASE("sampled log-Hölder scan stays below the exhaustive value and is seed-deterministic") {
  const GridSpec g(8, 3);
  const auto p = make_smooth_exponent(4.0, 1.0, Profile::bump, g);
  const double full = oracle::log_holder_exhaustive(p.values(), 8, 3);
  const auto a = check_log_holder(p, 10000, {7, 1.0});
  const auto b = check_log_holder(p, 10000, {7, 1.0});
  CHECK_FALSE(a.exhaustive);
  CHECK(a.local_constant <= full * (1 + 1e-14));
  CHECK(a.local_constant == b.local_constant);
  CHECK(a.worst_pair == b.worst_pair);
  CHECK(a.passes);
}

TEST_CASE("a jump grows the local constant under refinement and fails a tight budget") {
  const auto coarse = make_piecewise_exponent(3.0, 1.0, GridSpec(16, 3));
  const auto fine = make_piecewise_exponent(3.0, 1.0, GridSpec(32, 3));
  const LogHolderOptions tight{3, 0.2};
  const auto rc = check_log_holder(coarse, 200000, tight);
  const auto rf = check_log_holder(fine, 200000, tight);
  CHECK(rf.local_constant > rc.local_constant);
  CHECK_FALSE(rf.passes);
  // Across the jump at spacing h the constant is |1/2 - 1/4|·log(e + 1/h).
  const double h = 2 * oracle::kPi / 32;
  CHECK(rf.local_constant >= 0.25 * std::log(std::exp(1.0) + 1.0 / h) * (1 - 1e-12));
}

TEST_CASE("sample budget below two is rejected") {
  CHECK_THROWS_AS(check_log_holder(make_constant_exponent(2.0, GridSpec(16, 3)), 1, {}), DomainError);
}

TEST_CASE("recipe strings round-trip") {
  for (auto k : {ExponentKind::constant, ExponentKind::smooth, ExponentKind::piecewise})
    CHECK(parse_exponent_kind(to_string(k)) == k);
  for (auto p : {Profile::bump, Profile::trig, Profile::step}) CHECK(parse_profile(to_string(p)) == p);
  CHECK_FALSE(parse_profile("wiggle").has_value());
}
