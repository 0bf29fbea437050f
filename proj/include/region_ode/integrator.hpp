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

#ifndef REGION_ODE_INTEGRATOR_HPP_
#define REGION_ODE_INTEGRATOR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "region_ode/krasovskij.hpp"
#include "region_ode/regions.hpp"

namespace region_ode {

enum class Method { rk4_events, euler, setvalued_euler, reference_adaptive };
enum class Selection { center, random };

const char* to_string(Method m);
const char* to_string(Selection s);

struct IntegratorConfig {
  Method method = Method::rk4_events;
  double step = 1e-5;
  double event_tol = 1e-10;
  int max_event_bisections = 60;
  Selection selection = Selection::center;
  std::uint64_t seed = 0;
  // Envelope used by the set-valued Euler mode.
  EnvelopeOptions envelope;

  // step = T / 1e5, event_tol = 1e-10 T.
  static IntegratorConfig defaults_for(double horizon);
  void validate(double horizon) const;
};

// A crossing of surface `surface` through `level` at time t; direction is
// +1 when tau increases through the level.
struct Event {
  double t = 0.0;
  std::size_t surface = 0;
  double level = 0.0;
  int direction = 0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<StateVec> states;
  // Derivative sample at each time: the first stage value of the step that
  // starts there (the field on the branch actually used), or the field at
  // the final time.
  std::vector<StateVec> derivs;
  std::vector<Event> events;
  std::vector<std::string> notes;
  // Stage points whose projection p(t, x) fell outside the region.
  std::size_t projections_outside_region = 0;

  std::size_t size() const { return times.size(); }
  double max_step() const;
};

// Fixed-step RK4 (or Euler, when config.method == euler) on the modified
// field f~(t, x) = f(p(t, x)), with every crossing of a surface level
// localized by bisection to event_tol and the step split there.
Trajectory integrate_modified(const RhsModel& model, const ViablePair& pair, const StateVec& x0,
                              const IntegratorConfig& config);

// Explicit Euler on the branch value of f.
Trajectory integrate_euler(const RhsModel& model, const StateVec& x0,
                           const IntegratorConfig& config);

// Explicit Euler realizing one selection of x' in Kf(t, x): within event_tol
// of a surface the step direction is taken from the envelope sample (center
// or a seeded random element) instead of the branch value.
Trajectory integrate_inclusion_euler(const RhsModel& model, const StateVec& x0,
                                     const IntegratorConfig& config);

// Adaptive Dormand-Prince 5(4) in extended precision to local relative
// tolerance rel_tol; steps land exactly on each requested output time. With
// no output times every accepted step is recorded. Continuous models only.
Trajectory reference_solution(const RhsModel& model, const StateVec& x0, double horizon,
                              double rel_tol, const std::vector<double>& output_times = {});

}  // namespace region_ode

#endif  // REGION_ODE_INTEGRATOR_HPP_
