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

#ifndef REGION_ODE_TESTS_SUPPORT_HPP_
#define REGION_ODE_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>

#include "region_ode/state.hpp"

namespace region_ode::test_support {

inline StateVec vec(std::initializer_list<double> v) {
  StateVec out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double c : v) out[i++] = c;
  return out;
}

// Central differences of a scalar function of (t, x) with step `step`.
inline Gradient central_difference(const std::function<double(double, const StateVec&)>& fn,
                                   double t, const StateVec& x, double step = 1e-6) {
  Gradient g;
  g.dt = (fn(t + step, x) - fn(t - step, x)) / (2.0 * step);
  g.dx.resize(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    StateVec up = x;
    StateVec down = x;
    up[i] += step;
    down[i] -= step;
    g.dx[i] = (fn(t, up) - fn(t, down)) / (2.0 * step);
  }
  return g;
}

// ||a - b|| / max(1, ||b||) over the full space-time gradient.
inline double gradient_error(const Gradient& a, const Gradient& b) {
  const double diff = std::sqrt((a.dt - b.dt) * (a.dt - b.dt) + (a.dx - b.dx).squaredNorm());
  const double scale = std::sqrt(b.dt * b.dt + b.dx.squaredNorm());
  return diff / std::max(1.0, scale);
}

}  // namespace region_ode::test_support

#endif  // REGION_ODE_TESTS_SUPPORT_HPP_
