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

#ifndef REGION_ODE_PIECEWISE_HPP_
#define REGION_ODE_PIECEWISE_HPP_

#include <functional>
#include <optional>
#include <vector>

namespace region_ode {

struct Piece {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};

// Scalar function of t defined piece by piece. pieces[i] covers the interval
// between breakpoints[i-1] and breakpoints[i]. At a breakpoint the value is
// taken from the right piece when right_continuous[i] is set, else from the
// left piece.
class PiecewiseFn {
 public:
  PiecewiseFn(std::vector<double> breakpoints, std::vector<Piece> pieces,
              std::vector<bool> right_continuous = {});

  static PiecewiseFn constant(double c);
  // a + b t
  static PiecewiseFn affine(double a, double b);

  double operator()(double t) const;
  // Derivative of the active piece; nullopt exactly at a breakpoint.
  std::optional<double> derivative(double t) const;
  bool is_breakpoint(double t) const;
  double distance_to_breakpoint(double t) const;

  const std::vector<double>& breakpoints() const { return breakpoints_; }

 private:
  std::size_t piece_index(double t) const;

  std::vector<double> breakpoints_;
  std::vector<Piece> pieces_;
  std::vector<bool> right_continuous_;
};

}  // namespace region_ode

#endif  // REGION_ODE_PIECEWISE_HPP_
