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

#include "region_ode/krasovskij.hpp"
#include "region_ode/models.hpp"
#include "support.hpp"

namespace region_ode {
namespace {

using test_support::vec;

EnvelopeOptions sampled() {
  EnvelopeOptions o;
  o.collapse_continuous = false;
  return o;
}

TEST(EnvelopeSamples, ConstantFieldGivesConstantPoints) {
  const RhsModel model = models::constant_model(vec({2.0, -1.0}));
  const auto s = envelope_samples(model, 0.3, vec({0.5, 0.5}), 0.1, 32);
  ASSERT_EQ(s.points.size(), 32u);
  for (const auto& p : s.points) EXPECT_EQ(p, vec({2.0, -1.0}));
}

TEST(EnvelopeSamples, SignModelSamplesBothBranches) {
  const auto s = envelope_samples(models::sign_model(), 0.0, vec({0.0}), 0.1, 3);
  bool minus = false;
  bool plus = false;
  for (const auto& p : s.points) {
    minus = minus || p[0] == -1.0;
    plus = plus || p[0] == 1.0;
  }
  EXPECT_TRUE(minus);
  EXPECT_TRUE(plus);
}

TEST(EnvelopeSamples, SpreadShrinksForContinuousField) {
  const RhsModel model = models::band_example();
  double prev = INFINITY;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const auto s = envelope_samples(model, 0.4, vec({0.7}), eps, 64);
    double spread = 0.0;
    for (const auto& a : s.points) {
      for (const auto& b : s.points) spread = std::max(spread, (a - b).norm());
    }
    EXPECT_LT(spread, prev);
    prev = spread;
  }
  EXPECT_LT(prev, 1e-3);
}

TEST(EnvelopeSamples, CenterIsSampledAndPointsStayInTheBall) {
  const auto offsets = envelope_offsets(3, 64, 5);
  ASSERT_EQ(offsets.size(), 64u);
  EXPECT_EQ(offsets[0].norm(), 0.0);
  for (const auto& o : offsets) EXPECT_LE(o.norm(), 1.0);
  EXPECT_THROW(envelope_samples(models::sign_model(), 0.0, vec({0.0}), 0.1, 0), UsageError);
  EXPECT_THROW(envelope_samples(models::sign_model(), 0.0, vec({0.0}), 0.0, 4), UsageError);
}

TEST(SupportInterval, SignFunctionAtZero) {
  const RhsModel model = models::sign_model();
  const auto a = support_interval(model, 0.0, vec({0.0}), vec({1.0}));
  EXPECT_EQ(a.lower, -1.0);
  EXPECT_EQ(a.upper, 1.0);
  const auto b = support_interval(model, 0.0, vec({0.0}), vec({-2.0}));
  EXPECT_EQ(b.lower, -2.0);
  EXPECT_EQ(b.upper, 2.0);
}

TEST(SupportInterval, TimeSlotPairsWithOne) {
  const RhsModel model = models::constant_model(vec({3.0}));
  const auto s = support_interval(model, 0.0, vec({0.0}), vec({0.5, 2.0}));
  EXPECT_EQ(s.upper, 6.5);
  EXPECT_THROW(support_interval(model, 0.0, vec({0.0}), vec({1.0, 1.0, 1.0})), UsageError);
}

TEST(SupportInterval, ContainsTheBranchValue) {
  const RhsModel model = models::ball_example(10.0862);
  const PointSampler sampler(Box::cube(0.0, 1.0, 2, 1.5), 2);
  const StateVec v = vec({0.3, -1.7});
  for (const auto& p : sampler.draw(200)) {
    const auto s = support_interval(model, p.t, p.x, v);
    const double c = v.dot(eval_rhs(model, p.t, p.x));
    EXPECT_LE(s.lower, c);
    EXPECT_GE(s.upper, c);
    EXPECT_LE(s.lower, s.upper);
  }
}

TEST(SupportInterval, MonotoneAcrossTheSchedule) {
  const RhsModel model = models::ball_example(10.0862);
  const PointSampler sampler(Box::cube(0.0, 1.0, 2, 1.0), 8);
  for (const auto& p : sampler.draw(100)) {
    const auto s = support_interval(model, p.t, p.x, vec({1.0, 0.5}));
    for (std::size_t j = 1; j < s.level_upper.size(); ++j) {
      EXPECT_LE(s.level_upper[j], s.level_upper[j - 1]);
      EXPECT_GE(s.level_lower[j], s.level_lower[j - 1]);
    }
    EXPECT_EQ(s.upper, s.level_upper.back());
    EXPECT_EQ(s.lower, s.level_lower.back());
  }
}

TEST(SupportUpper, TrivialCases) {
  const RhsModel zero = models::constant_model(vec({0.0, 0.0}));
  EXPECT_EQ(support_upper(zero, 0.2, vec({0.1, 0.1}), vec({4.0, -3.0}), sampled()), 0.0);
  const RhsModel model = models::ball_example(10.0862);
  EXPECT_EQ(support_upper(model, 0.2, vec({0.1, 0.1}), vec({0.0, 0.0})), 0.0);
}

TEST(SupportUpper, BallBoundaryPointIsInward) {
  const RhsModel model = models::ball_example(10.0862);
  EXPECT_LE(support_upper(model, 0.5, vec({1.0, 0.0}), vec({1.0, 0.0})), 0.0);
}

TEST(SupportUpper, AgreesWithIntervalUpper) {
  const RhsModel model = models::ball_example(4.0);
  const PointSampler sampler(Box::cube(0.0, 1.0, 2, 1.0), 12);
  for (const auto& p : sampler.draw(50)) {
    const StateVec v = vec({-0.2, 0.9});
    EXPECT_EQ(support_upper(model, p.t, p.x, v), support_interval(model, p.t, p.x, v).upper);
  }
}

TEST(SupportUpper, PositiveHomogeneityWithPowersOfTwo) {
  const RhsModel model = models::ball_example(10.0862);
  const PointSampler sampler(Box::cube(0.0, 1.0, 2, 1.0), 13);
  const StateVec v = vec({0.7, -0.4});
  for (const auto& p : sampler.draw(100)) {
    const double base = support_upper(model, p.t, p.x, v);
    for (double lambda : {0.25, 0.5, 2.0, 8.0}) {
      EXPECT_EQ(support_upper(model, p.t, p.x, lambda * v), lambda * base);
    }
  }
}

TEST(SupportUpper, SubadditiveOnAFixedSample) {
  const RhsModel model = models::ball_example(10.0862);
  const PointSampler sampler(Box::cube(0.0, 1.0, 2, 1.0), 14);
  const StateVec v = vec({0.7, -0.4});
  const StateVec w = vec({-1.1, 0.3});
  for (const auto& p : sampler.draw(100)) {
    const double lhs = support_upper(model, p.t, p.x, v + w);
    const double rhs = support_upper(model, p.t, p.x, v) + support_upper(model, p.t, p.x, w);
    EXPECT_LE(lhs, rhs + 1e-15 * (1.0 + std::abs(rhs)));
  }
}

TEST(SupportInterval, SingletonCollapseForContinuousModels) {
  const RhsModel model = models::band_example();
  const PointSampler sampler(Box::cube(0.0, 1.0, 1, 3.0), 15);
  const double lipschitz = estimate_lipschitz(model, sampler, 1000, 1e-3, 1);
  const StateVec v = vec({1.0});
  for (const auto& p : sampler.draw(100)) {
    const auto s = support_interval(model, p.t, p.x, v, sampled());
    EXPECT_LE(s.upper - s.lower, 2.0 * lipschitz * s.eps);
    EnvelopeOptions collapse;
    collapse.collapse_continuous = true;
    const auto c = support_interval(model, p.t, p.x, v, collapse);
    EXPECT_EQ(c.upper, c.lower);
  }
}

TEST(SupportInterval, WidthShrinksLinearlyInEps) {
  const RhsModel model = models::band_example();
  const StateVec x = vec({0.8});
  EnvelopeOptions a = sampled();
  a.schedule.depth = 1;
  EnvelopeOptions b = a;
  b.schedule.eps0 = a.schedule.eps0 / 2.0;
  const auto wa = support_interval(model, 0.5, x, vec({1.0}), a);
  const auto wb = support_interval(model, 0.5, x, vec({1.0}), b);
  const double ratio = (wa.upper - wa.lower) / (wb.upper - wb.lower);
  EXPECT_NEAR(ratio, 2.0, 0.05);
}

TEST(EpsSchedule, Validation) {
  EXPECT_NO_THROW((EpsSchedule{1e-2, 0.5, 6}.validate()));
  EXPECT_THROW((EpsSchedule{0.0, 0.5, 6}.validate()), UsageError);
  EXPECT_THROW((EpsSchedule{1e-2, 1.0, 6}.validate()), UsageError);
  EXPECT_THROW((EpsSchedule{1e-2, 0.5, 0}.validate()), UsageError);
  EXPECT_DOUBLE_EQ((EpsSchedule{1e-2, 0.5, 6}.deepest()), 1e-2 / 32.0);
}

}  // namespace
}  // namespace region_ode
