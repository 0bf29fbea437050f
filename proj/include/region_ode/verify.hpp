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

#ifndef REGION_ODE_VERIFY_HPP_
#define REGION_ODE_VERIFY_HPP_

#include <string>
#include <vector>

#include "region_ode/integrator.hpp"

namespace region_ode {

// A-posteriori certificates of a computed trajectory. They bound grid
// behavior only; they do not prove that an absolutely continuous solution
// exists near the grid.

struct RegionCertificate {
  double max_h = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  // Times with h(t, x(t)) > tolerance (first 100).
  std::vector<double> violations;
};

RegionCertificate certify_region(const Trajectory& traj, const ViablePair& pair, double tol);

// Error constant C of the residual tolerance C * h^4 * T + rounding floor,
// fitted on the continuous scalar band example with a safety factor.
inline constexpr double kResidualConstant = 1.0;

struct ResidualCertificate {
  // pointwise + integral_defect
  double residual = 0.0;
  // sum ||deriv_i - f(t_i, x_i)|| dt_i
  double pointwise = 0.0;
  // sum ||x_{i+1} - x_i - Simpson integral of f along the Hermite interpolant||
  double integral_defect = 0.0;
  double tolerance = 0.0;
  std::size_t excluded_intervals = 0;
  bool pass = false;
};

// Residual over intervals whose endpoints and midpoint keep surface distance
// above delta_surface. Throws UsageError if derivative samples are missing.
ResidualCertificate certify_residual(const Trajectory& traj, const RhsModel& model,
                                     double delta_surface,
                                     double residual_constant = kResidualConstant);

struct SurfaceTimeCertificate {
  double fraction = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Fraction of [t_0, t_K] spent within delta of a surface level, with each
// tau(t, x(t)) interpolated linearly between grid points.
SurfaceTimeCertificate surface_time(const Trajectory& traj, const RhsModel& model, double delta,
                                    double tol = 1e-3);

struct CertOptions {
  double region_tol = 1e-6;
  // <= 0 selects 10 * event_tol.
  double delta_surface = 0.0;
  double surface_delta = 1e-6;
  // Fraction of the horizon.
  double surface_time_tol = 1e-3;
  double event_tol = 1e-10;
  double residual_constant = kResidualConstant;
};

struct CertReport {
  RegionCertificate region;
  ResidualCertificate residual;
  SurfaceTimeCertificate surface;
  std::vector<std::string> notes;

  bool pass() const { return region.pass && residual.pass && surface.pass; }
};

CertReport certify(const Trajectory& traj, const RhsModel& model, const ViablePair& pair,
                   const CertOptions& opts = {});

}  // namespace region_ode

#endif  // REGION_ODE_VERIFY_HPP_
