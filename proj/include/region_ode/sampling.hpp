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

#ifndef REGION_ODE_SAMPLING_HPP_
#define REGION_ODE_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "region_ode/state.hpp"

namespace region_ode {

// Axis-aligned box [t_lo, t_hi] x prod [lo_i, hi_i].
struct Box {
  double t_lo = 0.0;
  double t_hi = 1.0;
  StateVec lo;
  StateVec hi;

  static Box cube(double t_lo, double t_hi, int n, double half_width);
  int dimension() const { return static_cast<int>(lo.size()); }
  bool contains(const TimePoint& p) const;
};

// A compact set K given as a box plus an optional membership predicate.
struct Domain {
  Box box;
  std::function<bool(const TimePoint&)> member;

  bool contains(const TimePoint& p) const { return box.contains(p) && (!member || member(p)); }
};

// Randomly shifted Halton sequence on [0, 1)^d. Deterministic per seed.
class HaltonSequence {
 public:
  HaltonSequence(int dimension, std::uint64_t seed);
  int dimension() const { return static_cast<int>(shift_.size()); }
  // index >= 0; the sequence skips the origin of the unshifted set.
  std::vector<double> point(std::uint64_t index) const;

 private:
  std::vector<double> shift_;
};

// Low-discrepancy sampler over a box with rejection by `accept`. draw(m)
// returns the first m accepted points; draw(m) is a prefix of draw(m') for
// m <= m'.
class PointSampler {
 public:
  PointSampler(Box box, std::uint64_t seed, std::function<bool(const TimePoint&)> accept = {});

  const Box& box() const { return box_; }
  std::uint64_t seed() const { return seed_; }

  std::vector<TimePoint> draw(std::size_t m, std::size_t max_tries = 0) const;
  // Raw (unfiltered) i-th box point.
  TimePoint raw(std::uint64_t index) const;

 private:
  Box box_;
  std::uint64_t seed_;
  HaltonSequence seq_;
  std::function<bool(const TimePoint&)> accept_;
};

// `count` low-discrepancy points of the closed unit ball in R^n.
std::vector<StateVec> unit_ball_points(int n, std::size_t count, std::uint64_t seed);

// `count` points on the unit sphere of R^n (n >= 1).
std::vector<StateVec> unit_sphere_points(int n, std::size_t count, std::uint64_t seed);

// Stateless 64-bit mixer for deriving per-item seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace region_ode

#endif  // REGION_ODE_SAMPLING_HPP_
