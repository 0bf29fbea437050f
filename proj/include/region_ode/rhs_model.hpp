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

#ifndef REGION_ODE_RHS_MODEL_HPP_
#define REGION_ODE_RHS_MODEL_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "region_ode/exec.hpp"
#include "region_ode/level_set.hpp"
#include "region_ode/sampling.hpp"
#include "region_ode/state.hpp"

namespace region_ode {

using ScalarFn = std::function<double(double t, const StateVec& x)>;
using GradientFn = std::function<Gradient(double t, const StateVec& x)>;
using VectorField = std::function<StateVec(double t, const StateVec& x)>;

// A C^1 function tau(t, x) together with the levels where the right-hand
// side may jump: f can be discontinuous only on {tau = c}, c in levels.
struct SurfaceSpec {
  std::string name;
  ScalarFn tau;
  GradientFn gradient;
  LevelSet levels;
};

// f(t, x) evaluated directly; the discontinuities are declared separately.
struct DirectForm {
  VectorField f;
};

// One inner term g(s, x) of the factored form; s = tau(t, x) of the surface
// with index `surface`. g may jump only where s crosses that surface's levels.
struct InnerTerm {
  std::function<double(double s, const StateVec& x)> g;
  std::size_t surface = 0;
};

// f(t, x) = F(t, g_1(tau_1(t, x), x), ..., g_N(tau_N(t, x), x)) with F
// continuous in the g slot.
struct FactoredForm {
  std::function<StateVec(double t, const Eigen::VectorXd& g, const StateVec& x)> outer;
  std::vector<InnerTerm> inner;
};

// Right-hand side f : [0, T] x R^n -> R^n, possibly discontinuous across the
// declared surfaces. Immutable after construction.
class RhsModel {
 public:
  static RhsModel direct(std::string name, int dimension, double horizon, VectorField f,
                         std::vector<SurfaceSpec> surfaces = {});
  static RhsModel factored(std::string name, int dimension, double horizon, FactoredForm form,
                           std::vector<SurfaceSpec> surfaces);

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }
  double horizon() const { return horizon_; }
  const std::vector<SurfaceSpec>& surfaces() const { return surfaces_; }
  bool has_surfaces() const { return !surfaces_.empty(); }
  bool is_factored() const { return factored_.has_value(); }

  // Analytic sup-norm bound of f on the scenario's compact set, if known.
  std::optional<double> sup_bound() const { return sup_bound_; }
  RhsModel with_sup_bound(double bound) const;

  // Raw evaluation without argument validation. Used by hot loops that have
  // already validated their inputs.
  StateVec evaluate(double t, const StateVec& x) const;

 private:
  RhsModel() = default;

  std::string name_;
  int dimension_ = 0;
  double horizon_ = 0.0;
  std::optional<DirectForm> direct_;
  std::optional<FactoredForm> factored_;
  std::vector<SurfaceSpec> surfaces_;
  std::optional<double> sup_bound_;
};

// Branch value of f(t, x). Throws UsageError on bad arguments and
// EvaluationError naming the first non-finite component of the output.
StateVec eval_rhs(const RhsModel& model, double t, const StateVec& x);

// min over surfaces n and levels c of |tau_n(t, x) - c|; +inf without surfaces.
double surface_distance(const RhsModel& model, double t, const StateVec& x);

// Per-surface branch keys (count of levels at or below tau_n(t, x)). Two
// points with equal keys evaluate f on the same branch.
std::vector<std::int64_t> branch_keys(const RhsModel& model, double t, const StateVec& x);

// Optional direction functional for empirical_bound: the bound becomes
// max |<v(t, x), f(t, x)>| instead of max ||f(t, x)||.
using DirectionFn = std::function<StateVec(double t, const StateVec& x)>;

// Max of ||f|| (or |<v, f>|) over the first m points of the sampler.
// Nested prefixes of the same sampler give a nondecreasing sequence in m.
// Throws UsageError if m == 0 or a drawn point lies outside `domain`.
double empirical_bound(const RhsModel& model, const PointSampler& sampler, std::size_t m,
                       const Domain& domain, const DirectionFn& direction = {},
                       Exec exec = Exec::parallel);

// Max secant slope ||f(t, x) - f(t, y)|| / ||x - y|| over `count` random
// off-surface pairs at distance <= radius, times `safety`.
double estimate_lipschitz(const RhsModel& model, const PointSampler& sampler, std::size_t count,
                          double radius, std::uint64_t seed, double safety = 10.0);

}  // namespace region_ode

#endif  // REGION_ODE_RHS_MODEL_HPP_
