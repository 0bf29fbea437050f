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

#include "region_ode/integrator.hpp"
#include "region_ode/models.hpp"
#include "support.hpp"

namespace region_ode {
namespace {

using test_support::vec;

IntegratorConfig config_with_step(double step) {
  IntegratorConfig c;
  c.step = step;
  c.event_tol = 1e-12;
  return c;
}

TEST(IntegrateModified, ZeroFieldKeepsTheState) {
  const auto traj = integrate_modified(models::constant_model(vec({0.0, 0.0})), ball_pair(1.0),
                                       vec({0.3, -0.2}), config_with_step(1e-2));
  ASSERT_EQ(traj.size(), 101u);
  for (const auto& x : traj.states) EXPECT_EQ(x, vec({0.3, -0.2}));
  EXPECT_TRUE(traj.events.empty());
  EXPECT_DOUBLE_EQ(traj.times.back(), 1.0);
}

TEST(IntegrateModified, UnitFieldReachesOne) {
  const ViablePair pair = band_pair(PiecewiseFn::constant(-5.0), PiecewiseFn::constant(5.0));
  const auto traj =
      integrate_modified(models::constant_model(vec({1.0})), pair, vec({0.0}), config_with_step(1e-3));
  EXPECT_NEAR(traj.states.back()[0], 1.0, 1e-12);
  EXPECT_EQ(traj.derivs.size(), traj.size());
}

TEST(IntegrateModified, GridIsMonotoneAndLandsOnTheHorizon) {
  const auto traj = integrate_modified(models::ball_example(10.0862), ball_pair(1.0),
                                       vec({0.0, 0.0}), config_with_step(1e-3));
  EXPECT_EQ(traj.times.front(), 0.0);
  EXPECT_EQ(traj.times.back(), 1.0);
  for (std::size_t i = 1; i < traj.size(); ++i) EXPECT_LT(traj.times[i - 1], traj.times[i]);
  EXPECT_LE(traj.max_step(), 1e-3 * (1.0 + 1e-12));
}

TEST(IntegrateModified, BandExampleStaysInTheBand) {
  const ViablePair pair = example_band45_pair();
  const auto traj = integrate_modified(models::band_example(), pair, vec({0.0}),
                                       config_with_step(1e-4));
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double t = traj.times[i];
    const double x = traj.states[i][0];
    EXPECT_GE(x, t - 1e-9) << t;
    EXPECT_LE(x, (t < 0.5 ? 1.0 : 2.0) + 1e-9) << t;
  }
  EXPECT_EQ(traj.projections_outside_region, 0u);
}

TEST(IntegrateModified, EventLogMatchesTheStates) {
  const RhsModel model = models::ball_example(10.0862);
  const auto traj =
      integrate_modified(model, ball_pair(1.0), vec({0.0, 0.0}), config_with_step(1e-4));
  ASSERT_FALSE(traj.events.empty());
  const auto& surface = model.surfaces().front();
  for (const auto& e : traj.events) {
    EXPECT_EQ(e.surface, 0u);
    EXPECT_TRUE(e.direction == 1 || e.direction == -1);
    // The recorded time brackets the crossing: tau on the grid just before
    // and at the event time lies on opposite sides of the level.
    std::size_t i = 0;
    while (i + 1 < traj.size() && traj.times[i + 1] < e.t) ++i;
    ASSERT_LT(i + 1, traj.size());
    const double before = surface.tau(traj.times[i], traj.states[i]) - e.level;
    const double after = surface.tau(traj.times[i + 1], traj.states[i + 1]) - e.level;
    EXPECT_LE(before * e.direction, 0.0) << e.t;
    EXPECT_GE(after * e.direction, 0.0) << e.t;
  }
  for (std::size_t i = 1; i < traj.events.size(); ++i) {
    EXPECT_LE(traj.events[i - 1].t, traj.events[i].t);
  }
}

TEST(IntegrateModified, EventsCountLevelCrossings) {
  // Net signed crossings equal the change in branch count.
  const RhsModel base = models::ball_example(10.0862);
  const auto traj =
      integrate_modified(base, ball_pair(1.0), vec({0.0, 0.0}), config_with_step(1e-4));
  const auto& surface = base.surfaces().front();
  const double tau0 = surface.tau(0.0, traj.states.front());
  const double tau1 = surface.tau(1.0, traj.states.back());
  int net = 0;
  for (const auto& e : traj.events) net += e.direction;
  const auto& levels = surface.levels;
  EXPECT_EQ(net, levels.count_at_or_below(tau1) - levels.count_at_or_below(tau0));
}

TEST(IntegrateModified, IsDeterministic) {
  const RhsModel model = models::ball_example(18.1724);
  const auto a = integrate_modified(model, ball_pair(1.0), vec({0.0, 0.0}), config_with_step(1e-3));
  const auto b = integrate_modified(model, ball_pair(1.0), vec({0.0, 0.0}), config_with_step(1e-3));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.times[i], b.times[i]);
    EXPECT_EQ(a.states[i], b.states[i]);
  }
  EXPECT_EQ(a.events.size(), b.events.size());
}

TEST(IntegrateModified, RejectsBadConfigurations) {
  const RhsModel model = models::constant_model(vec({0.0}));
  const ViablePair pair = ball_pair(1.0, 1);
  EXPECT_THROW(integrate_modified(model, pair, vec({0.0}), config_with_step(0.0)), UsageError);
  EXPECT_THROW(integrate_modified(model, pair, vec({0.0}), config_with_step(2.0)), UsageError);
  IntegratorConfig c = config_with_step(1e-2);
  c.event_tol = 1e-1;
  EXPECT_THROW(integrate_modified(model, pair, vec({0.0}), c), UsageError);
  c = config_with_step(1e-2);
  c.method = Method::setvalued_euler;
  EXPECT_THROW(integrate_modified(model, pair, vec({0.0}), c), UsageError);
  EXPECT_THROW(integrate_modified(model, pair, vec({0.0, 0.0}), config_with_step(1e-2)),
               UsageError);
}

TEST(IntegrateModified, OutsideStartIsNoted) {
  const auto traj = integrate_modified(models::constant_model(vec({0.0})), ball_pair(1.0, 1),
                                       vec({2.0}), config_with_step(1e-2));
  ASSERT_FALSE(traj.notes.empty());
  EXPECT_NE(traj.notes.front().find("outside"), std::string::npos);
}

TEST(InclusionEuler, MatchesEulerWithoutSurfaces) {
  const RhsModel model = models::band_example();
  IntegratorConfig plain = config_with_step(1e-3);
  plain.method = Method::euler;
  IntegratorConfig incl = plain;
  incl.method = Method::setvalued_euler;
  const auto a = integrate_euler(model, vec({0.0}), plain);
  const auto b = integrate_inclusion_euler(model, vec({0.0}), incl);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.states[i], b.states[i]);
}

TEST(InclusionEuler, SignFieldChattersNearZero) {
  const RhsModel model = models::sign_model(-1.0);
  IntegratorConfig c = config_with_step(1e-3);
  c.method = Method::setvalued_euler;
  const auto traj = integrate_inclusion_euler(model, vec({0.25}), c);
  for (std::size_t i = 0; i < traj.size(); ++i) {
    if (traj.times[i] > 0.25 + 2e-3) EXPECT_LE(std::abs(traj.states[i][0]), 1e-3 + 1e-12);
  }
  EXPECT_GT(traj.events.size(), 10u);
}

TEST(InclusionEuler, RandomSelectionRecordsItsSeed) {
  const RhsModel model = models::sign_model(-1.0);
  IntegratorConfig c = config_with_step(1e-3);
  c.method = Method::setvalued_euler;
  c.selection = Selection::random;
  c.seed = 42;
  c.event_tol = 1e-4;
  const auto a = integrate_inclusion_euler(model, vec({0.0}), c);
  const auto b = integrate_inclusion_euler(model, vec({0.0}), c);
  ASSERT_FALSE(a.notes.empty());
  EXPECT_NE(a.notes.front().find("seed=42"), std::string::npos);
  EXPECT_EQ(a.states.back(), b.states.back());
  c.method = Method::rk4_events;
  EXPECT_THROW(integrate_inclusion_euler(model, vec({0.0}), c), UsageError);
}

TEST(Reference, ExponentialAndQuadratic) {
  const auto e = reference_solution(models::linear_model(1, 1.0), vec({1.0}), 1.0, 1e-16, {1.0});
  EXPECT_NEAR(e.states.back()[0], std::exp(1.0), 4e-15);
  const RhsModel two_t = RhsModel::direct(
      "two_t", 1, 1.0, [](double t, const StateVec&) { return StateVec::Constant(1, 2.0 * t); });
  const auto q = reference_solution(two_t, vec({0.0}), 1.0, 1e-14, {0.5, 1.0});
  ASSERT_EQ(q.size(), 2u);
  EXPECT_EQ(q.times[0], 0.5);
  EXPECT_NEAR(q.states[0][0], 0.25, 1e-15);
  EXPECT_NEAR(q.states[1][0], 1.0, 1e-15);
}

// Taylor series of x' = -x^2 - x + 2t + 1 about t0, summed to order 30.
long double taylor_band(long double t_end, int pieces) {
  long double x = 0.0L;
  const long double h = t_end / pieces;
  for (int p = 0; p < pieces; ++p) {
    const long double t0 = h * p;
    long double c[32] = {};
    c[0] = x;
    for (int k = 0; k < 31; ++k) {
      long double sq = 0.0L;
      for (int i = 0; i <= k; ++i) sq += c[i] * c[k - i];
      long double forcing = k == 0 ? 2.0L * t0 + 1.0L : (k == 1 ? 2.0L : 0.0L);
      c[k + 1] = (-sq - c[k] + forcing) / (k + 1);
    }
    long double sum = 0.0L;
    for (int k = 31; k >= 0; --k) sum = sum * h + c[k];
    x = sum;
  }
  return x;
}

TEST(Reference, BandExampleValueAtOne) {
  const long double oracle = taylor_band(1.0L, 20);
  EXPECT_NEAR(static_cast<double>(oracle), 1.05435332272747944144, 1e-15);
  const auto r = reference_solution(models::band_example(), vec({0.0}), 1.0, 1e-16, {1.0});
  EXPECT_NEAR(r.states.back()[0], static_cast<double>(oracle), 1e-14);
}

TEST(Reference, RejectsDiscontinuousModels) {
  EXPECT_THROW(reference_solution(models::sign_model(), vec({0.0}), 1.0, 1e-12), UsageError);
}

TEST(Rk4, FourthOrderOnTheBandExample) {
  const double exact = static_cast<double>(taylor_band(1.0L, 20));
  const RhsModel model = models::band_example();
  const ViablePair pair = band_pair(PiecewiseFn::constant(-10.0), PiecewiseFn::constant(10.0));
  const double e1 =
      std::abs(integrate_modified(model, pair, vec({0.0}), config_with_step(0.1)).states.back()[0] -
               exact);
  const double e2 =
      std::abs(integrate_modified(model, pair, vec({0.0}), config_with_step(0.05)).states.back()[0] -
               exact);
  EXPECT_GE(e1 / e2, 8.0);
  EXPECT_LE(e1 / e2, 32.0);
}

}  // namespace
}  // namespace region_ode
