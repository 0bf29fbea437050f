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

#include "region_ode/models.hpp"
#include "region_ode/verify.hpp"
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

ViablePair wide_band() {
  return band_pair(PiecewiseFn::constant(-10.0), PiecewiseFn::constant(10.0));
}

Trajectory hand_trajectory(const std::vector<double>& times, const std::vector<StateVec>& states) {
  Trajectory traj;
  traj.times = times;
  traj.states = states;
  return traj;
}

TEST(CertifyRegion, ReportsTheLargestH) {
  const auto traj = hand_trajectory({0.0, 0.5, 1.0}, {vec({0.0, 0.0}), vec({2.0, 0.0}),
                                                      vec({0.5, 0.5})});
  const auto cert = certify_region(traj, ball_pair(1.0), 1e-6);
  EXPECT_DOUBLE_EQ(cert.max_h, 0.5);
  EXPECT_FALSE(cert.pass);
  ASSERT_EQ(cert.violations.size(), 1u);
  EXPECT_EQ(cert.violations.front(), 0.5);
  const auto inside = hand_trajectory({0.0, 1.0}, {vec({0.0, 0.0}), vec({1.0, 0.0})});
  EXPECT_TRUE(certify_region(inside, ball_pair(1.0), 1e-6).pass);
}

TEST(CertifyRegion, ViolationListIsCapped) {
  std::vector<double> times;
  std::vector<StateVec> states;
  for (int i = 0; i <= 300; ++i) {
    times.push_back(i / 300.0);
    states.push_back(vec({3.0, 0.0}));
  }
  const auto cert = certify_region(hand_trajectory(times, states), ball_pair(1.0), 0.0);
  EXPECT_EQ(cert.violations.size(), 100u);
}

TEST(CertifyResidual, ZeroAndUnitFields) {
  const auto zero = integrate_modified(models::constant_model(vec({0.0})), wide_band(), vec({0.0}),
                                       config_with_step(1e-3));
  const auto z = certify_residual(zero, models::constant_model(vec({0.0})), 1e-9);
  EXPECT_EQ(z.residual, 0.0);
  EXPECT_TRUE(z.pass);
  const RhsModel one = models::constant_model(vec({1.0}));
  const auto unit = integrate_modified(one, wide_band(), vec({0.0}), config_with_step(1e-3));
  const auto u = certify_residual(unit, one, 1e-9);
  EXPECT_EQ(u.pointwise, 0.0);
  EXPECT_LE(u.residual, u.tolerance);
  EXPECT_TRUE(u.pass);
}

TEST(CertifyResidual, RefinementInvariantForExactLines) {
  const RhsModel slope = models::constant_model(vec({-0.75}));
  for (double step : {1e-1, 1e-2, 1e-3}) {
    const auto traj = integrate_modified(slope, wide_band(), vec({0.5}), config_with_step(step));
    const auto cert = certify_residual(traj, slope, 1e-9);
    EXPECT_EQ(cert.pointwise, 0.0) << step;
    EXPECT_LE(cert.integral_defect, 1e-14) << step;
    EXPECT_TRUE(cert.pass) << step;
  }
}

TEST(CertifyResidual, DetectsAWrongTrajectory) {
  const RhsModel model = models::band_example();
  auto traj = integrate_modified(model, wide_band(), vec({0.0}), config_with_step(1e-3));
  for (auto& x : traj.states) x[0] += 1e-3 * x[0];
  EXPECT_FALSE(certify_residual(traj, model, 1e-9).pass);
}

TEST(CertifyResidual, RequiresDerivatives) {
  auto traj = hand_trajectory({0.0, 1.0}, {vec({0.0}), vec({0.0})});
  EXPECT_THROW(certify_residual(traj, models::band_example(), 1e-9), UsageError);
}

TEST(CertifyResidual, ShrinksAtFourthOrder) {
  const RhsModel model = models::band_example();
  const double steps[] = {0.1, 0.05, 0.025};
  double prev = 0.0;
  for (int i = 0; i < 3; ++i) {
    const auto traj = integrate_modified(model, wide_band(), vec({0.0}), config_with_step(steps[i]));
    const auto cert = certify_residual(traj, model, 1e-9);
    EXPECT_TRUE(cert.pass) << steps[i] << " residual " << cert.residual;
    if (i > 0) {
      EXPECT_GE(prev / cert.residual, 8.0);
      EXPECT_LE(prev / cert.residual, 64.0);
    }
    prev = cert.residual;
  }
}

TEST(CertifyResidual, IntervalsNearSurfacesAreExcluded) {
  SurfaceSpec half;
  half.name = "t";
  half.tau = [](double t, const StateVec&) { return t; };
  half.gradient = [](double, const StateVec& x) { return Gradient{1.0, StateVec::Zero(x.size())}; };
  half.levels = LevelSet::explicit_list({0.5});
  const RhsModel model = RhsModel::direct(
      "two_speeds", 1, 1.0,
      [](double t, const StateVec&) { return StateVec::Constant(1, t < 0.5 ? 1.0 : 2.0); }, {half});
  const auto traj = integrate_modified(model, wide_band(), vec({0.0}), config_with_step(1e-2));
  const auto cert = certify_residual(traj, model, 1e-6);
  EXPECT_GE(cert.excluded_intervals, 1u);
  EXPECT_TRUE(cert.pass) << cert.residual;
}

TEST(SurfaceTime, ZeroWithoutSurfaces) {
  const auto traj = integrate_modified(models::band_example(), wide_band(), vec({0.0}),
                                       config_with_step(1e-2));
  const auto cert = surface_time(traj, models::band_example(), 1e-3);
  EXPECT_EQ(cert.fraction, 0.0);
  EXPECT_TRUE(cert.pass);
}

TEST(SurfaceTime, GlidingHalfTheHorizon) {
  // x sits on the surface x = 0 for t <= 1/2 and then leaves at unit speed.
  std::vector<double> times;
  std::vector<StateVec> states;
  for (int i = 0; i <= 100; ++i) {
    const double t = i / 100.0;
    times.push_back(t);
    states.push_back(vec({std::max(0.0, t - 0.5)}));
  }
  const auto traj = hand_trajectory(times, states);
  const RhsModel model = models::sign_model();
  const auto small = surface_time(traj, model, 1e-6);
  EXPECT_NEAR(small.fraction, 0.5, 2e-6);
  EXPECT_FALSE(small.pass);
  const auto wide = surface_time(traj, model, 0.1);
  EXPECT_NEAR(wide.fraction, 0.6, 1e-12);
}

TEST(SurfaceTime, MonotoneInDelta) {
  const RhsModel model = models::ball_example(10.0862);
  const auto traj =
      integrate_modified(model, ball_pair(1.0), vec({0.0, 0.0}), config_with_step(1e-3));
  double prev = -1.0;
  for (double delta : {1e-8, 1e-6, 1e-4, 1e-2}) {
    const double f = surface_time(traj, model, delta).fraction;
    EXPECT_GE(f, prev);
    prev = f;
  }
}

TEST(Certify, BundlesTheThreeCertificates) {
  const RhsModel model = models::band_example();
  const auto traj =
      integrate_modified(model, example_band45_pair(), vec({0.0}), config_with_step(1e-3));
  const auto report = certify(traj, model, example_band45_pair());
  EXPECT_TRUE(report.pass());
  EXPECT_FALSE(report.notes.empty());
  EXPECT_EQ(report.surface.fraction, 0.0);
}

}  // namespace
}  // namespace region_ode
