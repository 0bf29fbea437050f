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

#include "region_ode/sampling.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace region_ode {

namespace {

constexpr std::array<unsigned, 16> kPrimes = {2,  3,  5,  7,  11, 13, 17, 19,
                                              23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(std::uint64_t index, unsigned base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over a combined word
  std::uint64_t z = a * 0x9E3779B97F4A7C15ULL + b + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Box Box::cube(double t_lo, double t_hi, int n, double half_width) {
  return Box{t_lo, t_hi, StateVec::Constant(n, -half_width), StateVec::Constant(n, half_width)};
}

bool Box::contains(const TimePoint& p) const {
  if (p.t < t_lo || p.t > t_hi || p.x.size() != lo.size()) return false;
  return ((p.x.array() >= lo.array()) && (p.x.array() <= hi.array())).all();
}

HaltonSequence::HaltonSequence(int dimension, std::uint64_t seed) {
  if (dimension < 1 || dimension > static_cast<int>(kPrimes.size())) {
    throw std::invalid_argument("HaltonSequence: unsupported dimension");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  shift_.resize(static_cast<std::size_t>(dimension));
  for (auto& s : shift_) s = unit(rng);
}

std::vector<double> HaltonSequence::point(std::uint64_t index) const {
  std::vector<double> p(shift_.size());
  for (std::size_t d = 0; d < shift_.size(); ++d) {
    double v = radical_inverse(index + 1, kPrimes[d]) + shift_[d];
    p[d] = v - std::floor(v);
  }
  return p;
}

PointSampler::PointSampler(Box box, std::uint64_t seed, std::function<bool(const TimePoint&)> accept)
    : box_(std::move(box)),
      seed_(seed),
      seq_(box_.dimension() + 1, seed),
      accept_(std::move(accept)) {}

TimePoint PointSampler::raw(std::uint64_t index) const {
  const auto u = seq_.point(index);
  TimePoint p;
  p.t = box_.t_lo + u[0] * (box_.t_hi - box_.t_lo);
  p.x.resize(box_.dimension());
  for (int i = 0; i < box_.dimension(); ++i) {
    p.x[i] = box_.lo[i] + u[static_cast<std::size_t>(i) + 1] * (box_.hi[i] - box_.lo[i]);
  }
  return p;
}

std::vector<TimePoint> PointSampler::draw(std::size_t m, std::size_t max_tries) const {
  if (max_tries == 0) max_tries = 1000 * m + 1000;
  std::vector<TimePoint> out;
  out.reserve(m);
  for (std::uint64_t i = 0; out.size() < m && i < max_tries; ++i) {
    auto p = raw(i);
    if (!accept_ || accept_(p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<StateVec> unit_ball_points(int n, std::size_t count, std::uint64_t seed) {
  HaltonSequence seq(n, seed);
  std::vector<StateVec> out;
  out.reserve(count);
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    const auto u = seq.point(i);
    StateVec v(n);
    for (int d = 0; d < n; ++d) v[d] = 2.0 * u[static_cast<std::size_t>(d)] - 1.0;
    if (v.squaredNorm() <= 1.0) out.push_back(std::move(v));
  }
  return out;
}

std::vector<StateVec> unit_sphere_points(int n, std::size_t count, std::uint64_t seed) {
  std::vector<StateVec> out;
  out.reserve(count);
  if (n == 1) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(StateVec::Constant(1, i % 2 ? -1.0 : 1.0));
    return out;
  }
  if (n == 2) {
    HaltonSequence seq(1, seed);
    for (std::size_t i = 0; i < count; ++i) {
      const double a = 2.0 * std::numbers::pi * seq.point(i)[0];
      StateVec v(2);
      v << std::cos(a), std::sin(a);
      out.push_back(std::move(v));
    }
    return out;
  }
  HaltonSequence seq(n, seed);
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    const auto u = seq.point(i);
    StateVec v(n);
    for (int d = 0; d < n; ++d) v[d] = 2.0 * u[static_cast<std::size_t>(d)] - 1.0;
    const double r = v.norm();
    if (r <= 1.0 && r > 1e-3) out.push_back(v / r);
  }
  return out;
}

}  // namespace region_ode
