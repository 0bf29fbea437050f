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

#include "region_ode/level_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "region_ode/state.hpp"

namespace region_ode {

std::int64_t lattice_floor(double s, double step) {
  auto k = static_cast<std::int64_t>(std::floor(s / step));
  if (static_cast<double>(k + 1) * step <= s) {
    ++k;
  } else if (static_cast<double>(k) * step > s) {
    --k;
  }
  return k;
}

LevelSet LevelSet::explicit_list(std::vector<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw UsageError("level set: non-finite level");
  }
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw UsageError("level set: duplicate level");
  }
  return LevelSet(ExplicitLevels{std::move(values)});
}

LevelSet LevelSet::lattice(double step, double lo, double hi) {
  if (!(step > 0.0) || !std::isfinite(step)) throw UsageError("lattice: step must be positive");
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw UsageError("lattice: need finite lo <= hi");
  }
  return LevelSet(LatticeLevels{step, lo, hi});
}

std::int64_t LevelSet::kmin() const {
  const auto& l = std::get<LatticeLevels>(rep_);
  std::int64_t k = lattice_floor(l.lo, l.step);
  if (static_cast<double>(k) * l.step < l.lo) ++k;
  return k;
}

std::int64_t LevelSet::kmax() const {
  const auto& l = std::get<LatticeLevels>(rep_);
  return lattice_floor(l.hi, l.step);
}

std::int64_t LevelSet::size() const {
  if (const auto* e = as_explicit()) return static_cast<std::int64_t>(e->values.size());
  return std::max<std::int64_t>(0, kmax() - kmin() + 1);
}

double LevelSet::level(std::int64_t k) const {
  if (const auto* e = as_explicit()) return e->values.at(static_cast<std::size_t>(k));
  return static_cast<double>(kmin() + k) * as_lattice()->step;
}

std::vector<double> LevelSet::enumerate() const {
  std::vector<double> out;
  const auto n = size();
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) out.push_back(level(k));
  return out;
}

double LevelSet::distance(double s) const {
  auto c = nearest(s);
  return c ? std::abs(s - *c) : std::numeric_limits<double>::infinity();
}

std::optional<double> LevelSet::nearest(double s) const {
  if (empty()) return std::nullopt;
  if (const auto* e = as_explicit()) {
    const auto& v = e->values;
    auto it = std::lower_bound(v.begin(), v.end(), s);
    if (it == v.end()) return v.back();
    if (it == v.begin()) return *it;
    return (s - *(it - 1) <= *it - s) ? *(it - 1) : *it;
  }
  const double step = as_lattice()->step;
  const std::int64_t lo = kmin();
  const std::int64_t hi = kmax();
  const std::int64_t k0 = std::clamp(lattice_floor(s, step), lo, hi);
  double best = static_cast<double>(k0) * step;
  for (std::int64_t k = std::max(lo, k0 - 1); k <= std::min(hi, k0 + 1); ++k) {
    const double c = static_cast<double>(k) * step;
    if (std::abs(s - c) < std::abs(s - best)) best = c;
  }
  return best;
}

std::int64_t LevelSet::count_at_or_below(double s) const {
  if (const auto* e = as_explicit()) {
    return std::upper_bound(e->values.begin(), e->values.end(), s) - e->values.begin();
  }
  const auto n = size();
  return std::clamp<std::int64_t>(lattice_floor(s, as_lattice()->step) - kmin() + 1, 0, n);
}

}  // namespace region_ode
