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

#ifndef REGION_ODE_REGIONS_HPP_
#define REGION_ODE_REGIONS_HPP_

#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "region_ode/piecewise.hpp"
#include "region_ode/rhs_model.hpp"
#include "region_ode/sampling.hpp"

namespace region_ode {

using OptionalGradientFn = std::function<std::optional<Gradient>(double t, const StateVec& x)>;

// Scalar function of (t, x) with an almost-everywhere gradient. The gradient
// returns nullopt on nonsmooth seams.
struct ScalarField {
  ScalarFn value;
  OptionalGradientFn gradient;
};

// Pair (h, p) describing the region R = {h <= 0}: p is bounded and equals
// the identity on R. Built-in pairs use p(t, x) = (t, p2(t, x)).
class ViablePair {
 public:
  std::string name;
  int dimension = 1;
  // sup ||p2(t, x)|| over I x R^n.
  double bound = 0.0;
  ScalarField h;
  std::function<TimePoint(double t, const StateVec& x)> project;
  // Distance to the set where h is not differentiable; +inf if h is C^1.
  std::function<double(double t, const StateVec& x)> seam_distance;

  bool contains(double t, const StateVec& x) const { return h.value(t, x) <= 0.0; }
  double value(double t, const StateVec& x) const { return h.value(t, x); }
  std::optional<Gradient> gradient(double t, const StateVec& x) const {
    return h.gradient(t, x);
  }
  TimePoint p(double t, const StateVec& x) const { return project(t, x); }

  // [0, T] x [-B, B]^n with B = 2 * bound + 1: the part of R^c reachable
  // before the projection saturates.
  Box scenario_box(double horizon) const;
};

// Points closer than this to a seam have no gradient.
inline constexpr double kSeamTolerance = 1e-12;

// R = I x closed ball of radius r; h = |x - p_r(x)|^2 / 2, p = (t, p_r(x)).
ViablePair ball_pair(double r, int n = 2);

// Orthogonal projection onto the closed ball of radius r.
StateVec project_ball(const StateVec& x, double r);

// Band {alpha(t) <= x <= beta(t)} with h = max{x - beta, alpha - x, 0} and
// p = (t, clamp(x, alpha, beta)). Requires alpha <= beta on a grid of
// `grid_points` times in [0, horizon]; throws ConstructionError otherwise.
ViablePair band_pair(PiecewiseFn alpha, PiecewiseFn beta, double horizon = 1.0,
                     int grid_points = 1001);

// The band between alpha(t) = t and the two-step beta (1 on [0, 1/2), 2 on
// [1/2, 1]) with the continuous five-branch h and three-branch p that make
// it a solution region for x' = -x^2 - x + 2t + 1.
ViablePair example_band45_pair();

// Lower/upper candidate functions for the scalar band example.
namespace band_functions {
PiecewiseFn alpha_identity();  // t
PiecewiseFn beta_step();       // 1 on [0, 1/2), 2 on [1/2, 1]
PiecewiseFn beta_tilde();      // min{2t + 1, 2}
PiecewiseFn gamma_one();       // 1
// Lookup by name ("alpha_t", "beta_step", "beta_tilde", "gamma_one").
std::optional<PiecewiseFn> by_name(const std::string& name);
}  // namespace band_functions

}  // namespace region_ode

#endif  // REGION_ODE_REGIONS_HPP_
