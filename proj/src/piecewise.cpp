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

#include "region_ode/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "region_ode/state.hpp"

namespace region_ode {

PiecewiseFn::PiecewiseFn(std::vector<double> breakpoints, std::vector<Piece> pieces,
                         std::vector<bool> right_continuous)
    : breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      right_continuous_(std::move(right_continuous)) {
  if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end()) ||
      std::adjacent_find(breakpoints_.begin(), breakpoints_.end()) != breakpoints_.end()) {
    throw ConstructionError("PiecewiseFn: breakpoints must be strictly increasing");
  }
  if (pieces_.size() != breakpoints_.size() + 1) {
    throw ConstructionError("PiecewiseFn: need one more piece than breakpoints");
  }
  for (const auto& p : pieces_) {
    if (!p.value || !p.derivative) throw ConstructionError("PiecewiseFn: empty piece");
  }
  if (right_continuous_.empty()) right_continuous_.assign(breakpoints_.size(), true);
  if (right_continuous_.size() != breakpoints_.size()) {
    throw ConstructionError("PiecewiseFn: one continuity flag per breakpoint");
  }
}

PiecewiseFn PiecewiseFn::constant(double c) {
  return PiecewiseFn({}, {Piece{[c](double) { return c; }, [](double) { return 0.0; }}});
}

PiecewiseFn PiecewiseFn::affine(double a, double b) {
  return PiecewiseFn({}, {Piece{[a, b](double t) { return a + b * t; }, [b](double) { return b; }}});
}

std::size_t PiecewiseFn::piece_index(double t) const {
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  auto i = static_cast<std::size_t>(it - breakpoints_.begin());
  if (it != breakpoints_.end() && *it == t && right_continuous_[i]) ++i;
  return i;
}

double PiecewiseFn::operator()(double t) const { return pieces_[piece_index(t)].value(t); }

std::optional<double> PiecewiseFn::derivative(double t) const {
  if (is_breakpoint(t)) return std::nullopt;
  return pieces_[piece_index(t)].derivative(t);
}

bool PiecewiseFn::is_breakpoint(double t) const {
  return std::binary_search(breakpoints_.begin(), breakpoints_.end(), t);
}

double PiecewiseFn::distance_to_breakpoint(double t) const {
  double d = std::numeric_limits<double>::infinity();
  for (double b : breakpoints_) d = std::min(d, std::abs(t - b));
  return d;
}

}  // namespace region_ode
