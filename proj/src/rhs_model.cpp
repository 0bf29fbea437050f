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

#include "region_ode/rhs_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace region_ode {

RhsModel RhsModel::direct(std::string name, int dimension, double horizon, VectorField f,
                          std::vector<SurfaceSpec> surfaces) {
  if (dimension < 1) throw UsageError("RhsModel: dimension must be >= 1");
  if (!(horizon > 0.0)) throw UsageError("RhsModel: horizon must be positive");
  if (!f) throw UsageError("RhsModel: empty field");
  RhsModel m;
  m.name_ = std::move(name);
  m.dimension_ = dimension;
  m.horizon_ = horizon;
  m.direct_ = DirectForm{std::move(f)};
  m.surfaces_ = std::move(surfaces);
  return m;
}

RhsModel RhsModel::factored(std::string name, int dimension, double horizon, FactoredForm form,
                            std::vector<SurfaceSpec> surfaces) {
  if (dimension < 1) throw UsageError("RhsModel: dimension must be >= 1");
  if (!(horizon > 0.0)) throw UsageError("RhsModel: horizon must be positive");
  if (!form.outer) throw UsageError("RhsModel: empty outer function");
  for (const auto& term : form.inner) {
    if (term.surface >= surfaces.size()) {
      throw UsageError("RhsModel: inner term refers to an undeclared surface");
    }
  }
  RhsModel m;
  m.name_ = std::move(name);
  m.dimension_ = dimension;
  m.horizon_ = horizon;
  m.factored_ = std::move(form);
  m.surfaces_ = std::move(surfaces);
  return m;
}

RhsModel RhsModel::with_sup_bound(double bound) const {
  RhsModel m = *this;
  m.sup_bound_ = bound;
  return m;
}

StateVec RhsModel::evaluate(double t, const StateVec& x) const {
  if (direct_) return direct_->f(t, x);
  const auto& inner = factored_->inner;
  Eigen::VectorXd g(static_cast<Eigen::Index>(inner.size()));
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const double s = surfaces_[inner[i].surface].tau(t, x);
    g[static_cast<Eigen::Index>(i)] = inner[i].g(s, x);
  }
  return factored_->outer(t, g, x);
}

StateVec eval_rhs(const RhsModel& model, double t, const StateVec& x) {
  if (!std::isfinite(t) || t < 0.0 || t > model.horizon()) {
    std::ostringstream os;
    os << "eval_rhs(" << model.name() << "): time " << t << " outside [0, " << model.horizon()
       << "]";
    throw UsageError(os.str());
  }
  require_state(x, model.dimension(), "eval_rhs(" + model.name() + ")");
  StateVec out = model.evaluate(t, x);
  if (out.size() != model.dimension()) {
    throw EvaluationError("eval_rhs(" + model.name() + "): field returned wrong dimension");
  }
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (!std::isfinite(out[i])) {
      std::ostringstream os;
      os.precision(17);
      os << "eval_rhs(" << model.name() << "): component " << i << " is not finite at t=" << t
         << ", x=" << format_vec(x);
      throw EvaluationError(os.str());
    }
  }
  return out;
}

double surface_distance(const RhsModel& model, double t, const StateVec& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : model.surfaces()) best = std::min(best, s.levels.distance(s.tau(t, x)));
  return best;
}

std::vector<std::int64_t> branch_keys(const RhsModel& model, double t, const StateVec& x) {
  std::vector<std::int64_t> keys;
  keys.reserve(model.surfaces().size());
  for (const auto& s : model.surfaces()) keys.push_back(s.levels.count_at_or_below(s.tau(t, x)));
  return keys;
}

double empirical_bound(const RhsModel& model, const PointSampler& sampler, std::size_t m,
                       const Domain& domain, const DirectionFn& direction, Exec exec) {
  if (m == 0) throw UsageError("empirical_bound: need at least one sample");
  const auto points = sampler.draw(m);
  if (points.size() < m) throw UsageError("empirical_bound: sampler exhausted before m points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!domain.contains(points[i])) {
      std::ostringstream os;
      os << "empirical_bound: sample " << i << " at t=" << points[i].t
         << ", x=" << format_vec(points[i].x) << " lies outside the compact set";
      throw UsageError(os.str());
    }
  }
  std::vector<double> values(points.size());
  for_each_index(exec, points.size(), [&](std::size_t i) {
    const auto& p = points[i];
    const StateVec f = eval_rhs(model, p.t, p.x);
    values[i] = direction ? std::abs(direction(p.t, p.x).dot(f)) : f.norm();
  });
  return *std::max_element(values.begin(), values.end());
}

double estimate_lipschitz(const RhsModel& model, const PointSampler& sampler, std::size_t count,
                          double radius, std::uint64_t seed, double safety) {
  const auto points = sampler.draw(count);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double slope = 0.0;
  for (const auto& p : points) {
    StateVec d(model.dimension());
    for (Eigen::Index i = 0; i < d.size(); ++i) d[i] = normal(rng);
    d *= radius * unit(rng) / std::max(d.norm(), 1e-300);
    const StateVec y = p.x + d;
    // Only pairs on one branch measure continuity.
    if (branch_keys(model, p.t, p.x) != branch_keys(model, p.t, y)) continue;
    if (d.norm() == 0.0) continue;
    const double s = (model.evaluate(p.t, y) - model.evaluate(p.t, p.x)).norm() / d.norm();
    slope = std::max(slope, s);
  }
  return safety * slope;
}

}  // namespace region_ode
