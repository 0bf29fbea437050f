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

#include "region_ode/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace region_ode {

RegionCertificate certify_region(const Trajectory& traj, const ViablePair& pair, double tol) {
  if (traj.size() == 0) throw UsageError("certify_region: empty trajectory");
  RegionCertificate cert;
  cert.tolerance = tol;
  cert.max_h = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double h = pair.value(traj.times[i], traj.states[i]);
    cert.max_h = std::max(cert.max_h, h);
    if (h > tol && cert.violations.size() < 100) cert.violations.push_back(traj.times[i]);
  }
  cert.pass = cert.max_h <= tol;
  return cert;
}

ResidualCertificate certify_residual(const Trajectory& traj, const RhsModel& model,
                                     double delta_surface, double residual_constant) {
  if (traj.derivs.size() != traj.size() || traj.size() == 0) {
    throw UsageError("certify_residual: trajectory has no derivative samples");
  }
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  ResidualCertificate cert;
  double floor = 0.0;
  for (std::size_t i = 0; i + 1 < traj.size(); ++i) {
    const double t0 = traj.times[i];
    const double t1 = traj.times[i + 1];
    const double dt = t1 - t0;
    const StateVec& x0 = traj.states[i];
    const StateVec& x1 = traj.states[i + 1];
    const StateVec& d0 = traj.derivs[i];
    const StateVec& d1 = traj.derivs[i + 1];
    const double tm = t0 + 0.5 * dt;
    const StateVec xm = 0.5 * (x0 + x1) + (dt / 8.0) * (d0 - d1);
    if (surface_distance(model, t0, x0) <= delta_surface ||
        surface_distance(model, t1, x1) <= delta_surface ||
        surface_distance(model, tm, xm) <= delta_surface) {
      ++cert.excluded_intervals;
      continue;
    }
    const StateVec f0 = eval_rhs(model, t0, x0);
    const StateVec f1 = eval_rhs(model, t1, x1);
    const StateVec fm = eval_rhs(model, tm, xm);
    cert.pointwise += (d0 - f0).norm() * dt;
    cert.integral_defect += (x1 - x0 - (dt / 6.0) * (f0 + 4.0 * fm + f1)).norm();
    floor += 16.0 * kEps * (x0.norm() + x1.norm() + dt * (f0.norm() + 4.0 * fm.norm() + f1.norm()));
  }
  cert.residual = cert.pointwise + cert.integral_defect;
  const double horizon = traj.times.back() - traj.times.front();
  const double h = traj.max_step();
  cert.tolerance = residual_constant * std::pow(h, 4) * horizon + floor;
  cert.pass = cert.residual <= cert.tolerance;
  return cert;
}

namespace {

// Measure of the union of sub-intervals of [0, 1].
double union_length(std::vector<std::pair<double, double>>& parts) {
  std::sort(parts.begin(), parts.end());
  double total = 0.0;
  double cur_lo = 0.0;
  double cur_hi = -1.0;
  for (const auto& [lo, hi] : parts) {
    if (lo > cur_hi) {
      if (cur_hi > cur_lo) total += cur_hi - cur_lo;
      cur_lo = lo;
      cur_hi = hi;
    } else {
      cur_hi = std::max(cur_hi, hi);
    }
  }
  if (cur_hi > cur_lo) total += cur_hi - cur_lo;
  return total;
}

}  // namespace

SurfaceTimeCertificate surface_time(const Trajectory& traj, const RhsModel& model, double delta,
                                    double tol) {
  SurfaceTimeCertificate cert;
  cert.tolerance = tol;
  if (!model.has_surfaces() || traj.size() < 2) {
    cert.pass = true;
    return cert;
  }
  const auto& surfaces = model.surfaces();
  std::vector<double> prev(surfaces.size());
  for (std::size_t s = 0; s < surfaces.size(); ++s) {
    prev[s] = surfaces[s].tau(traj.times[0], traj.states[0]);
  }
  double near = 0.0;
  std::vector<std::pair<double, double>> parts;
  for (std::size_t i = 0; i + 1 < traj.size(); ++i) {
    parts.clear();
    for (std::size_t s = 0; s < surfaces.size(); ++s) {
      const double a = prev[s];
      const double b = surfaces[s].tau(traj.times[i + 1], traj.states[i + 1]);
      prev[s] = b;
      const auto& levels = surfaces[s].levels;
      const double lo = std::min(a, b) - delta;
      const double hi = std::max(a, b) + delta;
      const auto first = levels.count_at_or_below(lo);
      const auto last = levels.count_at_or_below(hi);
      for (auto k = first; k < last; ++k) {
        const double c = levels.level(k);
        if (a == b) {
          if (std::abs(a - c) < delta) parts.emplace_back(0.0, 1.0);
          continue;
        }
        double s0 = (c - delta - a) / (b - a);
        double s1 = (c + delta - a) / (b - a);
        if (s0 > s1) std::swap(s0, s1);
        s0 = std::max(s0, 0.0);
        s1 = std::min(s1, 1.0);
        if (s1 > s0) parts.emplace_back(s0, s1);
      }
    }
    near += union_length(parts) * (traj.times[i + 1] - traj.times[i]);
  }
  const double horizon = traj.times.back() - traj.times.front();
  cert.fraction = horizon > 0.0 ? std::clamp(near / horizon, 0.0, 1.0) : 0.0;
  cert.pass = cert.fraction <= tol;
  return cert;
}

CertReport certify(const Trajectory& traj, const RhsModel& model, const ViablePair& pair,
                   const CertOptions& opts) {
  CertReport report;
  const double delta_surface = opts.delta_surface > 0.0 ? opts.delta_surface : 10.0 * opts.event_tol;
  report.region = certify_region(traj, pair, opts.region_tol);
  report.residual = certify_residual(traj, model, delta_surface, opts.residual_constant);
  report.surface = surface_time(traj, model, opts.surface_delta, opts.surface_time_tol);
  report.notes.push_back(
      "grid certificate: bounds the computed grid and its interpolant, not the exact solution");
  return report;
}

}  // namespace region_ode
