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

#include "region_ode/regions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace region_ode {

Box ViablePair::scenario_box(double horizon) const {
  return Box::cube(0.0, horizon, dimension, 2.0 * bound + 1.0);
}

StateVec project_ball(const StateVec& x, double r) {
  const double n = x.norm();
  if (n <= r) return x;
  return (r / n) * x;
}

ViablePair ball_pair(double r, int n) {
  if (!(r > 0.0)) throw ConstructionError("ball_pair: radius must be positive");
  ViablePair pair;
  pair.name = "ball";
  pair.dimension = n;
  pair.bound = r;
  pair.h.value = [r](double, const StateVec& x) {
    return 0.5 * (x - project_ball(x, r)).squaredNorm();
  };
  pair.h.gradient = [r](double, const StateVec& x) -> std::optional<Gradient> {
    return Gradient{0.0, x - project_ball(x, r)};
  };
  pair.project = [r](double t, const StateVec& x) { return TimePoint{t, project_ball(x, r)}; };
  pair.seam_distance = [](double, const StateVec&) {
    return std::numeric_limits<double>::infinity();
  };
  return pair;
}

ViablePair band_pair(PiecewiseFn alpha, PiecewiseFn beta, double horizon, int grid_points) {
  double bound = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double t = horizon * i / std::max(1, grid_points - 1);
    const double a = alpha(t);
    const double b = beta(t);
    if (a > b) {
      std::ostringstream os;
      os << "band_pair: alpha(" << t << ") = " << a << " exceeds beta(" << t << ") = " << b;
      throw ConstructionError(os.str());
    }
    bound = std::max({bound, std::abs(a), std::abs(b)});
  }
  ViablePair pair;
  pair.name = "band";
  pair.dimension = 1;
  pair.bound = bound;
  pair.h.value = [alpha, beta](double t, const StateVec& x) {
    return std::max({x[0] - beta(t), alpha(t) - x[0], 0.0});
  };
  pair.seam_distance = [alpha, beta](double t, const StateVec& x) {
    const double a = alpha(t);
    const double b = beta(t);
    return std::min({std::abs(x[0] - a), std::abs(x[0] - b), alpha.distance_to_breakpoint(t),
                     beta.distance_to_breakpoint(t)});
  };
  pair.h.gradient = [alpha, beta, seam = pair.seam_distance](
                        double t, const StateVec& x) -> std::optional<Gradient> {
    if (seam(t, x) <= kSeamTolerance) return std::nullopt;
    const double above = x[0] - beta(t);
    const double below = alpha(t) - x[0];
    if (above > 0.0) return Gradient{-*beta.derivative(t), StateVec::Constant(1, 1.0)};
    if (below > 0.0) return Gradient{*alpha.derivative(t), StateVec::Constant(1, -1.0)};
    return Gradient{0.0, StateVec::Zero(1)};
  };
  pair.project = [alpha, beta](double t, const StateVec& x) {
    return TimePoint{t, StateVec::Constant(1, std::max(std::min(x[0], beta(t)), alpha(t)))};
  };
  return pair;
}

ViablePair example_band45_pair() {
  ViablePair pair;
  pair.name = "example_band45";
  pair.dimension = 1;
  pair.bound = 2.0;
  pair.h.value = [](double t, const StateVec& v) {
    const double x = v[0];
    if (x < t) return t - x;
    if (t < 0.5) {
      if (x <= 1.0) return 0.0;
      if (x <= 2.0 * t + 1.0) return (x - 1.0) * (0.5 - t);
      return (x - 1.0) * (0.5 - t) + (x - 2.0 * t - 1.0) * (x - 2.0 * t - 1.0);
    }
    if (x <= 2.0) return 0.0;
    return (x - 2.0) * (x - 2.0);
  };
  pair.seam_distance = [](double t, const StateVec& v) {
    const double x = v[0];
    double d = std::min(std::abs(x - t), std::abs(t - 0.5));
    if (t < 0.5) {
      d = std::min({d, std::abs(x - 1.0), std::abs(x - 2.0 * t - 1.0)});
    } else {
      d = std::min(d, std::abs(x - 2.0));
    }
    return d;
  };
  pair.h.gradient = [seam = pair.seam_distance](double t,
                                                const StateVec& v) -> std::optional<Gradient> {
    if (seam(t, v) <= kSeamTolerance) return std::nullopt;
    const double x = v[0];
    auto grad = [](double dt, double dx) { return Gradient{dt, StateVec::Constant(1, dx)}; };
    if (x < t) return grad(1.0, -1.0);
    if (t < 0.5) {
      if (x <= 1.0) return grad(0.0, 0.0);
      if (x <= 2.0 * t + 1.0) return grad(-(x - 1.0), 0.5 - t);
      const double w = x - 2.0 * t - 1.0;
      return grad(-(x - 1.0) - 4.0 * w, (0.5 - t) + 2.0 * w);
    }
    if (x <= 2.0) return grad(0.0, 0.0);
    return grad(0.0, 2.0 * (x - 2.0));
  };
  pair.project = [](double t, const StateVec& v) {
    const double cap = std::min(2.0 * t + 1.0, 2.0);
    const double x = v[0];
    if (x < t) return TimePoint{t, StateVec::Constant(1, t)};
    if (x <= cap) return TimePoint{t, v};
    return TimePoint{t, StateVec::Constant(1, cap)};
  };
  return pair;
}

namespace band_functions {

PiecewiseFn alpha_identity() { return PiecewiseFn::affine(0.0, 1.0); }

PiecewiseFn beta_step() {
  return PiecewiseFn({0.5},
                     {Piece{[](double) { return 1.0; }, [](double) { return 0.0; }},
                      Piece{[](double) { return 2.0; }, [](double) { return 0.0; }}},
                     {true});
}

PiecewiseFn beta_tilde() {
  return PiecewiseFn({0.5},
                     {Piece{[](double t) { return 2.0 * t + 1.0; }, [](double) { return 2.0; }},
                      Piece{[](double) { return 2.0; }, [](double) { return 0.0; }}},
                     {true});
}

PiecewiseFn gamma_one() { return PiecewiseFn::constant(1.0); }

std::optional<PiecewiseFn> by_name(const std::string& name) {
  if (name == "alpha_t") return alpha_identity();
  if (name == "beta_step") return beta_step();
  if (name == "beta_tilde") return beta_tilde();
  if (name == "gamma_one") return gamma_one();
  return std::nullopt;
}

}  // namespace band_functions

}  // namespace region_ode
