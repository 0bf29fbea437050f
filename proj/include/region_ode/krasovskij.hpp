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

#ifndef REGION_ODE_KRASOVSKIJ_HPP_
#define REGION_ODE_KRASOVSKIJ_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "region_ode/rhs_model.hpp"

namespace region_ode {

// Radii eps_j = eps0 * factor^j, j = 0 .. depth - 1.
struct EpsSchedule {
  double eps0 = 1e-2;
  double factor = 0.5;
  int depth = 6;

  double eps(int j) const;
  double deepest() const { return eps(depth - 1); }
  void validate() const;
};

struct EnvelopeOptions {
  EpsSchedule schedule;
  std::size_t samples = 64;
  std::uint64_t seed = 0;
  // When the model declares no surfaces, f(t, .) is continuous and the
  // envelope is the singleton {f(t, x)}; answer from the center alone.
  bool collapse_continuous = false;
};

// f evaluated at the center x and at m - 1 points of the closed eps-ball
// around x, all at the same t.
struct EnvelopeSample {
  double eps = 0.0;
  std::vector<StateVec> points;
};

// Bounds of <v, z> over the approximated envelope. `lower`/`upper` come from
// the deepest radius; level_lower/level_upper hold the whole sequence
// (largest radius first) and are monotone by construction.
struct SupportInterval {
  double lower = 0.0;
  double upper = 0.0;
  double eps = 0.0;
  std::size_t samples = 0;
  std::vector<double> level_lower;
  std::vector<double> level_upper;
};

// Offsets (relative to the center, for unit radius) shared by every radius
// level: offsets[0] is zero, offsets[k] = c_k * u_k with u_k in the unit
// ball and c_k cycling through {1, 1/2, 1/4}.
std::vector<StateVec> envelope_offsets(int n, std::size_t m, std::uint64_t seed);

EnvelopeSample envelope_samples(const RhsModel& model, double t, const StateVec& x, double eps,
                                std::size_t m, std::uint64_t seed = 0);
EnvelopeSample envelope_samples(const VectorField& field, int n, double t, const StateVec& x,
                                double eps, std::size_t m, std::uint64_t seed = 0);

// <v, z> for v of dimension n, or v0 + <v_x, z> for v of dimension n + 1
// (the leading slot pairs with the constant 1 of (1, z)).
double pair_with(const StateVec& v, const StateVec& z);

SupportInterval support_interval(const RhsModel& model, double t, const StateVec& x,
                                 const StateVec& v, const EnvelopeOptions& opts = {});
SupportInterval support_interval(const VectorField& field, int n, bool continuous, double t,
                                 const StateVec& x, const StateVec& v,
                                 const EnvelopeOptions& opts = {});

// Upper end of support_interval. Evaluates only the deepest radius.
double support_upper(const RhsModel& model, double t, const StateVec& x, const StateVec& v,
                     const EnvelopeOptions& opts = {});
double support_upper(const VectorField& field, int n, bool continuous, double t,
                     const StateVec& x, const StateVec& v, const EnvelopeOptions& opts = {});

}  // namespace region_ode

#endif  // REGION_ODE_KRASOVSKIJ_HPP_
