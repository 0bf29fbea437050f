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

#ifndef REGION_ODE_CHECKS_HPP_
#define REGION_ODE_CHECKS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "region_ode/exec.hpp"
#include "region_ode/krasovskij.hpp"
#include "region_ode/regions.hpp"

namespace region_ode {

// How a report's worst value is compared against its threshold.
enum class Comparison {
  at_most,       // pass iff worst <= threshold
  greater_than,  // pass iff worst > threshold
};

enum class Classification { admissible, weak_admissible, viable_only };

const char* to_string(Classification c);

// Outcome of one sampled condition. The witness reproduces `worst` when the
// condition is re-evaluated there.
struct CheckReport {
  std::string condition;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double worst = 0.0;
  Comparison comparison = Comparison::at_most;
  double threshold = 0.0;
  std::optional<TimePoint> witness;
  std::string witness_detail;
  bool pass = false;

  std::size_t seam_resamples = 0;
  bool sampler_flagged = false;
  std::size_t levels_checked = 0;
  std::size_t levels_unreachable = 0;
  std::optional<Classification> classification;
  std::vector<std::string> notes;

  // Recomputes the verdict from worst/comparison/threshold.
  bool verdict() const;
};

// Slack added to non-strict "<= 0" checks to absorb rounding.
inline constexpr double kRegionSlack = 1e-10;

enum class RegionMode {
  projected,  // z in Kf(p(t, x))
  modified,   // z in K f~(t, x), f~ = f o p
};

struct RegionCheckOptions {
  std::size_t samples = 10000;
  double tol = 0.0;
  std::uint64_t seed = 0;
  RegionMode mode = RegionMode::projected;
  EnvelopeOptions envelope{EpsSchedule{}, 64, 0, true};
  Exec exec = Exec::parallel;
};

// h(0, x0) <= 0 and, at sampled points of R^c, the upper support of
// <grad h(t, x), (1, z)> over the envelope is <= tol (plus kRegionSlack).
CheckReport check_solution_region(const ViablePair& pair, const RhsModel& model,
                                  const StateVec& x0, const RegionCheckOptions& opts = {});

// <x, z> <= tol for z in Kf(t, x), ||x|| = r.
CheckReport check_ball_boundary(const RhsModel& model, double r,
                                const RegionCheckOptions& opts = {});

// <grad h(lambda x), z> <= tol for z in Kf(t, x), ||x|| = r, lambda in the
// grid. Throws ConstructionError when h is not <= 0 exactly on the ball.
CheckReport check_lambda_condition(const ScalarField& h, const RhsModel& model, double r,
                                   const std::vector<double>& lambda_grid,
                                   const RegionCheckOptions& opts = {});

struct TransversalityOptions {
  std::size_t samples_per_level = 64;
  double margin = 1e-6;
  std::uint64_t seed = 0;
  int ray_attempts = 8;
  int bisection_iterations = 50;
  int projection_iterations = 200;
  EnvelopeOptions envelope{EpsSchedule{}, 64, 0, true};
  Exec exec = Exec::parallel;
};

// For each surface and level, points of {tau = c} inside R: the interval of
// <grad tau, (1, z)> over Kf must stay strictly on one side of zero by more
// than `margin`. Levels with no point in R are counted as unreachable.
CheckReport check_transversality(const RhsModel& model, const ViablePair& pair,
                                 double horizon, const TransversalityOptions& opts = {});

// Locates a point of {tau = level} inside R, or nullopt. Exposed for tests.
std::optional<TimePoint> locate_level_point(const SurfaceSpec& surface, double level,
                                            const ViablePair& pair, double horizon,
                                            const std::vector<TimePoint>& region_pool,
                                            std::uint64_t seed,
                                            const TransversalityOptions& opts = {});

struct ClassifyOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  double zero_tol = 1e-12;
  double horizon = 1.0;
  Exec exec = Exec::parallel;
};

// s(t, x) = <grad_x h, p2 - x> on R^c: admissible if all s < 0, weak
// admissible if all s <= 0 with some zero, viable-only otherwise. The report
// passes iff p is the identity at every sampled point of R.
CheckReport classify_pair(const ViablePair& pair, const ClassifyOptions& opts = {});

// Evenly spaced grid of `count` times on [0, horizon].
std::vector<double> uniform_grid(double horizon, std::size_t count);

// alpha(0) <= x0 and alpha'(t) - f(t, alpha(t)) <= tol off breakpoints.
CheckReport check_lower_solution(const RhsModel& model, const PiecewiseFn& alpha, double x0,
                                 const std::vector<double>& grid, double tol = 1e-12);
// beta(0) >= x0 and f(t, beta(t)) - beta'(t) <= tol off breakpoints.
CheckReport check_upper_solution(const RhsModel& model, const PiecewiseFn& beta, double x0,
                                 const std::vector<double>& grid, double tol = 1e-12);

// Draws m points of R^c inside the pair's scenario box where h has a
// gradient; counts rejected seam points.
struct ComplementSample {
  std::vector<TimePoint> points;
  std::size_t seam_rejections = 0;
};
ComplementSample sample_complement(const ViablePair& pair, double horizon, std::size_t m,
                                   std::uint64_t seed);

}  // namespace region_ode

#endif  // REGION_ODE_CHECKS_HPP_
