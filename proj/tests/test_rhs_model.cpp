// Copyright 2026 The region-ode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "region_ode/models.hpp"
#include "support.hpp"
#include "region_ode/rhs_model.hpp"

namespace region_ode {
namespace {

using test_support::vec;

TEST(EvalRhs, BallExampleAtTheOrigin) {
  const RhsModel model = models::ball_example(10.0);
  const StateVec f = eval_rhs(model, 0.0, vec({0.0, 0.0}));
  EXPECT_EQ(f[0], 0.3);
  EXPECT_EQ(f[1], 0.0);
}

TEST(EvalRhs, BandExampleAtTheOrigin) {
  const StateVec f = eval_rhs(models::band_example(), 0.0, vec({0.0}));
  EXPECT_EQ(f[0], 1.0);
}

TEST(EvalRhs, PhiIsRightContinuousWithTwoValues) {
  EXPECT_EQ(models::ball_phi(0.0, 10), 0.3);
  EXPECT_EQ(models::ball_phi(0.05, 10), 0.3);
  EXPECT_EQ(models::ball_phi(0.1, 10), 0.7);
  EXPECT_EQ(models::ball_phi(std::nextafter(0.1, 0.0), 10), 0.3);
  EXPECT_EQ(models::ball_phi(0.2, 10), 0.3);
  EXPECT_EQ(models::ball_phi(-0.05, 10), 0.7);
}

TEST(EvalRhs, RejectsBadArguments) {
  const RhsModel model = models::ball_example(10.0);
  EXPECT_THROW(eval_rhs(model, 0.0, vec({0.0})), UsageError);
  EXPECT_THROW(eval_rhs(model, 0.0, vec({0.0, NAN})), UsageError);
  EXPECT_THROW(eval_rhs(model, 1.5, vec({0.0, 0.0})), UsageError);
  EXPECT_THROW(eval_rhs(model, -0.1, vec({0.0, 0.0})), UsageError);
}

TEST(EvalRhs, NonFiniteOutputNamesTheComponent) {
  const RhsModel model = RhsModel::direct("blowup", 2, 1.0, [](double, const StateVec& x) {
    return vec({x[0], 1.0 / x[1]});
  });
  try {
    eval_rhs(model, 0.0, vec({1.0, 0.0}));
    FAIL() << "expected EvaluationError";
  } catch (const EvaluationError& e) {
    EXPECT_NE(std::string(e.what()).find("component 1"), std::string::npos) << e.what();
  }
}

TEST(EvalRhs, IsDeterministic) {
  const RhsModel model = models::ball_example(10.0862);
  const StateVec x = vec({0.3, -0.41});
  const StateVec a = eval_rhs(model, 0.37, x);
  const StateVec b = eval_rhs(model, 0.37, x);
  EXPECT_EQ(a, b);
}

TEST(SurfaceDistance, LatticeExamples) {
  const RhsModel model = models::ball_example(0.0);
  // tau = x^2 + y^2 at t = 0
  EXPECT_NEAR(surface_distance(model, 0.0, vec({std::sqrt(0.13), 0.0})), 0.03, 1e-12);
  // tau = 0.2 t at the origin, exactly 0.2 at t = 1
  EXPECT_EQ(surface_distance(models::ball_example(0.2), 1.0, vec({0.0, 0.0})), 0.0);
  EXPECT_TRUE(std::isinf(surface_distance(models::band_example(), 0.5, vec({0.2}))));
}

TEST(SurfaceDistance, ExactLevelGivesZero) {
  const RhsModel model = models::sign_model();
  EXPECT_EQ(surface_distance(model, 0.0, vec({0.0})), 0.0);
  EXPECT_EQ(surface_distance(model, 0.0, vec({-0.25})), 0.25);
}

TEST(EmpiricalBound, TrivialFields) {
  const Box box = Box::cube(0.0, 1.0, 1, 2.0);
  const Domain domain{box, {}};
  const PointSampler sampler(box, 0);
  EXPECT_EQ(empirical_bound(models::constant_model(vec({0.0})), sampler, 100, domain), 0.0);
  EXPECT_EQ(empirical_bound(models::constant_model(vec({1.0})), sampler, 100, domain), 1.0);
  EXPECT_THROW(empirical_bound(models::constant_model(vec({1.0})), sampler, 0, domain),
               UsageError);
}

TEST(EmpiricalBound, RejectsPointsOutsideTheCompactSet) {
  const Box box = Box::cube(0.0, 1.0, 2, 1.0);
  const Domain ball{box, [](const TimePoint& p) { return p.x.norm() <= 1.0; }};
  const PointSampler unfiltered(box, 0);
  EXPECT_THROW(empirical_bound(models::ball_example(1.0), unfiltered, 500, ball), UsageError);
}

TEST(EmpiricalBound, MonotoneInNestedSampleCount) {
  const Box box = Box::cube(0.0, 1.0, 2, 1.0);
  const auto in_ball = [](const TimePoint& p) { return p.x.norm() <= 1.0; };
  const Domain ball{box, in_ball};
  const PointSampler sampler(box, 4, in_ball);
  const RhsModel model = models::ball_example(10.0);
  const DirectionFn radial = [](double, const StateVec& x) { return x; };
  double prev = 0.0;
  for (std::size_t m : {10, 100, 1000, 5000}) {
    const double b = empirical_bound(model, sampler, m, ball, radial);
    EXPECT_GE(b, prev);
    prev = b;
  }
}

TEST(EmpiricalBound, SerialAndParallelAgree) {
  const Box box = Box::cube(0.0, 1.0, 2, 1.0);
  const Domain domain{box, {}};
  const PointSampler sampler(box, 9);
  const RhsModel model = models::ball_example(3.0);
  EXPECT_EQ(empirical_bound(model, sampler, 4000, domain, {}, Exec::serial),
            empirical_bound(model, sampler, 4000, domain, {}, Exec::parallel));
}

TEST(RhsModel, FactoredAndDirectAgreeEverywhere) {
  const RhsModel factored = models::ball_example(10.0862);
  const RhsModel direct = models::ball_example_direct(10.0862);
  const PointSampler sampler(Box::cube(0.0, 1.0, 2, 3.0), 21);
  for (const auto& p : sampler.draw(2000)) {
    EXPECT_EQ(eval_rhs(factored, p.t, p.x), eval_rhs(direct, p.t, p.x));
  }
  // Exactly on a level as well.
  const StateVec on = vec({std::sqrt(0.3), 0.0});
  EXPECT_EQ(eval_rhs(factored, 0.0, on), eval_rhs(direct, 0.0, on));
}

TEST(RhsModel, ContinuousOffTheSurfaces) {
  const RhsModel model = models::ball_example(10.0862);
  const PointSampler sampler(Box::cube(0.0, 1.0, 2, 1.0), 5);
  const double lipschitz = estimate_lipschitz(model, sampler, 1000, 1e-3, 17);
  ASSERT_GT(lipschitz, 0.0);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  int tested = 0;
  for (const auto& p : sampler.draw(400)) {
    if (surface_distance(model, p.t, p.x) <= 1e-3) continue;
    StateVec d(2);
    d << normal(rng), normal(rng);
    d *= 1e-8 / d.norm();
    const double jump = (eval_rhs(model, p.t, p.x + d) - eval_rhs(model, p.t, p.x)).norm();
    EXPECT_LE(jump, lipschitz * 1e-8);
    if (++tested == 100) break;
  }
  EXPECT_EQ(tested, 100);
}

TEST(RhsModel, FactoredRejectsUndeclaredSurface) {
  FactoredForm form;
  form.outer = [](double, const Eigen::VectorXd& g, const StateVec&) { return StateVec(g); };
  form.inner.push_back(InnerTerm{[](double s, const StateVec&) { return s; }, 2});
  EXPECT_THROW(RhsModel::factored("bad", 1, 1.0, form, {}), UsageError);
}

TEST(RhsModel, BranchKeysChangeOnlyAcrossLevels) {
  const RhsModel model = models::sign_model();
  EXPECT_EQ(branch_keys(model, 0.0, vec({-1e-12})), std::vector<std::int64_t>{0});
  EXPECT_EQ(branch_keys(model, 0.0, vec({0.0})), std::vector<std::int64_t>{1});
  EXPECT_EQ(branch_keys(model, 0.0, vec({4.0})), std::vector<std::int64_t>{1});
  EXPECT_EQ(eval_rhs(model, 0.0, vec({0.0}))[0], 1.0);
}

}  // namespace
}  // namespace region_ode
