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

#include "region_ode/krasovskij.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "region_ode/sampling.hpp"

namespace region_ode {

double EpsSchedule::eps(int j) const { return eps0 * std::pow(factor, j); }

void EpsSchedule::validate() const {
  if (!(eps0 > 0.0) || !std::isfinite(eps0)) throw UsageError("EpsSchedule: eps0 must be > 0");
  if (!(factor > 0.0 && factor < 1.0)) throw UsageError("EpsSchedule: factor must be in (0, 1)");
  if (depth < 1) throw UsageError("EpsSchedule: depth must be >= 1");
}

std::vector<StateVec> envelope_offsets(int n, std::size_t m, std::uint64_t seed) {
  static constexpr double kRadius[3] = {1.0, 0.5, 0.25};
  std::vector<StateVec> offsets;
  offsets.reserve(m);
  offsets.push_back(StateVec::Zero(n));
  if (m > 1) {
    auto dirs = unit_ball_points(n, m - 1, mix_seed(seed, 0xE7));
    for (std::size_t k = 0; k < dirs.size(); ++k) offsets.push_back(kRadius[k % 3] * dirs[k]);
  }
  return offsets;
}

namespace {

void require_query(int n, double eps, std::size_t m, const StateVec& x) {
  if (m == 0) throw UsageError("envelope: sample count must be >= 1");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw UsageError("envelope: eps must be > 0");
  require_state(x, n, "envelope center");
}

std::vector<StateVec> sample_level(const VectorField& field, double t, const StateVec& x,
                                   double eps, const std::vector<StateVec>& offsets) {
  std::vector<StateVec> pts;
  pts.reserve(offsets.size());
  for (const auto& o : offsets) pts.push_back(field(t, x + eps * o));
  return pts;
}

VectorField checked_field(const RhsModel& model) {
  return [&model](double t, const StateVec& x) { return eval_rhs(model, t, x); };
}

}  // namespace

EnvelopeSample envelope_samples(const VectorField& field, int n, double t, const StateVec& x,
                                double eps, std::size_t m, std::uint64_t seed) {
  require_query(n, eps, m, x);
  return EnvelopeSample{eps, sample_level(field, t, x, eps, envelope_offsets(n, m, seed))};
}

EnvelopeSample envelope_samples(const RhsModel& model, double t, const StateVec& x, double eps,
                                std::size_t m, std::uint64_t seed) {
  return envelope_samples(checked_field(model), model.dimension(), t, x, eps, m, seed);
}

double pair_with(const StateVec& v, const StateVec& z) {
  if (v.size() == z.size()) return v.dot(z);
  if (v.size() == z.size() + 1) return v[0] + v.tail(z.size()).dot(z);
  std::ostringstream os;
  os << "support query: direction of dimension " << v.size() << " for state dimension "
     << z.size();
  throw UsageError(os.str());
}

SupportInterval support_interval(const VectorField& field, int n, bool continuous, double t,
                                 const StateVec& x, const StateVec& v,
                                 const EnvelopeOptions& opts) {
  opts.schedule.validate();
  require_query(n, opts.schedule.eps0, opts.samples, x);
  if (!v.allFinite()) throw UsageError("support query: non-finite direction");
  const int depth = opts.schedule.depth;
  SupportInterval out;
  out.eps = opts.schedule.deepest();
  out.level_lower.assign(static_cast<std::size_t>(depth), 0.0);
  out.level_upper.assign(static_cast<std::size_t>(depth), 0.0);

  if (continuous && opts.collapse_continuous) {
    const double c = pair_with(v, field(t, x));
    out.lower = out.upper = c;
    std::fill(out.level_lower.begin(), out.level_lower.end(), c);
    std::fill(out.level_upper.begin(), out.level_upper.end(), c);
    out.samples = 1;
    return out;
  }

  const auto offsets = envelope_offsets(n, opts.samples, opts.seed);
  out.samples = offsets.size();
  // Sample set at level j is the union of fresh points at levels >= j, so
  // the sets are nested and the bounds tighten monotonically with j.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int j = depth - 1; j >= 0; --j) {
    for (const auto& o : offsets) {
      const double c = pair_with(v, field(t, x + opts.schedule.eps(j) * o));
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    out.level_lower[static_cast<std::size_t>(j)] = lo;
    out.level_upper[static_cast<std::size_t>(j)] = hi;
    if (j == depth - 1) {
      out.lower = lo;
      out.upper = hi;
    }
  }
  return out;
}

SupportInterval support_interval(const RhsModel& model, double t, const StateVec& x,
                                 const StateVec& v, const EnvelopeOptions& opts) {
  return support_interval(checked_field(model), model.dimension(), !model.has_surfaces(), t, x, v,
                          opts);
}

double support_upper(const VectorField& field, int n, bool continuous, double t,
                     const StateVec& x, const StateVec& v, const EnvelopeOptions& opts) {
  opts.schedule.validate();
  require_query(n, opts.schedule.eps0, opts.samples, x);
  if (!v.allFinite()) throw UsageError("support query: non-finite direction");
  if (continuous && opts.collapse_continuous) return pair_with(v, field(t, x));
  const double eps = opts.schedule.deepest();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& o : envelope_offsets(n, opts.samples, opts.seed)) {
    hi = std::max(hi, pair_with(v, field(t, x + eps * o)));
  }
  return hi;
}

double support_upper(const RhsModel& model, double t, const StateVec& x, const StateVec& v,
                     const EnvelopeOptions& opts) {
  return support_upper(checked_field(model), model.dimension(), !model.has_surfaces(), t, x, v,
                       opts);
}

}  // namespace region_ode
