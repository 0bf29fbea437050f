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

#include "region_ode/models.hpp"

#include <algorithm>
#include <cmath>

namespace region_ode::models {

double ball_phi(double s, int q) {
  const std::int64_t k = lattice_floor(s, 1.0 / q);
  const std::int64_t parity = ((k % 2) + 2) % 2;
  return 0.3 + 0.4 * static_cast<double>(parity);
}

SurfaceSpec ball_surface(double alpha, int q, double horizon, double half_width) {
  const double r2max = 2.0 * half_width * half_width;
  const double lo = std::min(0.0, alpha * horizon);
  const double hi = r2max + std::max(0.0, alpha * horizon);
  SurfaceSpec s;
  s.name = "x^2+y^2+alpha*t";
  s.tau = [alpha](double t, const StateVec& x) { return x.squaredNorm() + alpha * t; };
  s.gradient = [alpha](double, const StateVec& x) { return Gradient{alpha, 2.0 * x}; };
  s.levels = LevelSet::lattice(1.0 / q, lo, hi);
  return s;
}

namespace {

StateVec ball_outer(double phi_value, const StateVec& v) {
  const double x = v[0];
  const double y = v[1];
  StateVec out(2);
  out[0] = x * x * x + y - 3.0 * x + phi_value;
  out[1] = y * y * y - x - 3.0 * y * std::exp(std::abs(x));
  return out;
}

}  // namespace

RhsModel ball_example(double alpha, int q, double half_width) {
  FactoredForm form;
  form.outer = [](double, const Eigen::VectorXd& g, const StateVec& v) {
    return ball_outer(g[0], v);
  };
  form.inner.push_back(InnerTerm{[q](double s, const StateVec&) { return ball_phi(s, q); }, 0});
  return RhsModel::factored("ball_example", 2, 1.0, std::move(form),
                            {ball_surface(alpha, q, 1.0, half_width)});
}

RhsModel ball_example_direct(double alpha, int q, double half_width) {
  auto f = [alpha, q](double t, const StateVec& v) {
    return ball_outer(ball_phi(v.squaredNorm() + alpha * t, q), v);
  };
  return RhsModel::direct("ball_example_direct", 2, 1.0, f,
                          {ball_surface(alpha, q, 1.0, half_width)});
}

RhsModel band_example() {
  auto f = [](double t, const StateVec& v) {
    const double x = v[0];
    return StateVec::Constant(1, -x * x - x + 2.0 * t + 1.0);
  };
  return RhsModel::direct("band_example", 1, 1.0, f);
}

RhsModel sign_model(double gain, double horizon) {
  SurfaceSpec s;
  s.name = "x";
  s.tau = [](double, const StateVec& x) { return x[0]; };
  s.gradient = [](double, const StateVec&) { return Gradient{0.0, StateVec::Constant(1, 1.0)}; };
  s.levels = LevelSet::explicit_list({0.0});
  auto f = [gain](double, const StateVec& x) {
    return StateVec::Constant(1, x[0] >= 0.0 ? gain : -gain);
  };
  return RhsModel::direct("sign", 1, horizon, f, {std::move(s)});
}

RhsModel constant_model(const StateVec& value, double horizon) {
  return RhsModel::direct("constant", static_cast<int>(value.size()), horizon,
                          [value](double, const StateVec&) { return value; });
}

RhsModel linear_model(int n, double gain, double horizon) {
  return RhsModel::direct("linear", n, horizon,
                          [gain](double, const StateVec& x) { return StateVec(gain * x); });
}

}  // namespace region_ode::models
