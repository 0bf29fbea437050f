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

#ifndef REGION_ODE_MODELS_HPP_
#define REGION_ODE_MODELS_HPP_

#include "region_ode/rhs_model.hpp"

// Built-in right-hand sides. Closed-form gradients of every surface are
// supplied here; there is no symbolic differentiation.
namespace region_ode::models {

// Two-valued jump function with values in {0.3, 0.7}, jumping at every
// multiple of 1/q. Right-continuous: phi(k/q) takes the value of [k/q, (k+1)/q).
double ball_phi(double s, int q);

// tau(t, x, y) = x^2 + y^2 + alpha t with its lattice of jump levels k/q,
// truncated to the range tau attains on [0, T] x [-half_width, half_width]^2.
SurfaceSpec ball_surface(double alpha, int q, double horizon, double half_width);

// The planar example
//   x' = x^3 + y - 3x + phi(x^2 + y^2 + alpha t),
//   y' = y^3 - x - 3y exp(|x|),
// on [0, 1], in factored form F(t, g, x) with g_1(s, x) = phi(s).
RhsModel ball_example(double alpha, int q = 10, double half_width = 3.0);

// Same field written directly (phi evaluated inline). Agrees exactly with
// ball_example everywhere.
RhsModel ball_example_direct(double alpha, int q = 10, double half_width = 3.0);

// Scalar continuous example x' = -x^2 - x + 2t + 1 on [0, 1].
RhsModel band_example();

// Scalar gain * sgn(x) with sgn(0) = +1 and surface tau = x at level 0.
RhsModel sign_model(double gain = 1.0, double horizon = 1.0);

// f(t, x) = value, no surfaces.
RhsModel constant_model(const StateVec& value, double horizon = 1.0);

// f(t, x) = gain * x, no surfaces.
RhsModel linear_model(int n, double gain, double horizon = 1.0);

}  // namespace region_ode::models

#endif  // REGION_ODE_MODELS_HPP_
