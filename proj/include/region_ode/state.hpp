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

#ifndef REGION_ODE_STATE_HPP_
#define REGION_ODE_STATE_HPP_

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace region_ode {

// State vectors, envelope elements and directions all live in R^n.
using StateVec = Eigen::VectorXd;

// Bad arguments: dimension mismatch, non-finite input, empty sample request.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A right-hand side (or other user function) produced a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A region or piecewise function could not be built from its inputs.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Event bisection ran out of iterations before the bracket shrank.
class EventLocalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Full space-time gradient (d/dt, grad_x) of a scalar function of (t, x).
struct Gradient {
  double dt = 0.0;
  StateVec dx;
};

// A point of I x R^n.
struct TimePoint {
  double t = 0.0;
  StateVec x;
};

inline bool all_finite(const StateVec& v) { return v.allFinite(); }

// Throws UsageError unless v has dimension n and finite components.
void require_state(const StateVec& v, Eigen::Index n, const std::string& what);

std::string format_vec(const StateVec& v);

}  // namespace region_ode

#endif  // REGION_ODE_STATE_HPP_
