#include <cmath>

#include "doctest.h"
#include "fbl/errors.hpp"
#include "fbl/estimates.hpp"

using namespace fbl;

namespace {

TrialPlan small_plan() {
  TrialPlan plan;
  plan.grid = GridSpec(16, 3);
  plan.calibration = 10;
  plan.holdout = 10;
  return plan;
}

}  // namespace

TEST_CASE("calibration protocol") {
  EstimateReport rep;
  for (double r : {1.0, 2.0, 1.5, 3.0, 3.9}) rep.add_trial(r, 1.0);
  rep.add_trial(1.0, 0.0);
  rep.finalize(3, 2.0);
  CHECK(rep.discarded == 1);
  CHECK(rep.fitted_constant == 2.0);
  CHECK(rep.holdout_max == 3.9);
  CHECK(rep.passes);
  rep.add_trial(4.5, 1.0);
  rep.finalize(3, 2.0);
  CHECK_FALSE(rep.passes);
}

TEST_CASE("single-trial bound") {
  EstimateReport rep;
  rep.add_trial(3.0, 1.0);
  rep.finalize_bound(4.0);
  CHECK(rep.passes);
  rep.finalize_bound(2.0);
  CHECK_FALSE(rep.passes);
}

TEST_CASE("Bernstein inequalities hold") {
  for (int item : {1, 2, 3}) {
    const auto rep = verify_bernstein(item, 1, 4.0, 2.0, 2.0, small_plan());
    CHECK(rep.passes);
    CHECK(rep.all_checks());
  }
}

TEST_CASE("embedding, gradient equivalence and interpolation hold") {
  CHECK(verify_embedding(1.0, 2.0, 4.0, 1.0, 2.0, small_plan()).passes);
  const auto grad = verify_gradient_equivalence(1.0, 2.0, 1.0, small_plan());
  CHECK(grad.passes);
  CHECK(grad.all_checks());
  const auto interp = verify_interpolation(0.5, 1.5, 0.5, 2.0, 1.0, small_plan());
  CHECK(interp.passes);
  CHECK(interp.max_ratio() <= 1.0 + 1e-12);
}

TEST_CASE("product laws hold") {
  CHECK(verify_tame_product(2.5, 6.0, 2.0, 1.5, small_plan()).passes);
  CHECK(verify_mixed_product(2.5, 0.5, 2.0, 2.0, small_plan()).passes);
}

TEST_CASE("product law hypotheses") {
  const auto h = mixed_product_hypotheses(2.5, 0.5, 2.0, 2.0, 3);
  CHECK(h.sum_positive);
  CHECK(h.s2_bounded);
  CHECK_FALSE(h.s1_bounded);  // 2.5 > 3/2
  CHECK_THROWS_AS(verify_mixed_product(-1.0, 0.5, 2.0, 2.0, small_plan()), DomainError);
}

TEST_CASE("variable Hölder inequality holds with constant four") {
  const ExponentRecipe p1{ExponentKind::smooth, 4.0, 1.0, Profile::bump};
  const ExponentRecipe p2{ExponentKind::smooth, 4.0, 1.0, Profile::trig};
  const auto rep = verify_holder(p1, p2, 4.0, small_plan());
  CHECK(rep.passes);
  CHECK(rep.max_ratio() <= 4.0);
}

TEST_CASE("reports are reproducible") {
  const auto a = verify_embedding(1.0, 2.0, 4.0, 1.0, 2.0, small_plan());
  const auto b = verify_embedding(1.0, 2.0, 4.0, 1.0, 2.0, small_plan());
  CHECK(a.ratios == b.ratios);
}
