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

#ifndef REGION_ODE_LEVEL_SET_HPP_
#define REGION_ODE_LEVEL_SET_HPP_

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace region_ode {

// Sorted, duplicate-free finite list of levels.
struct ExplicitLevels {
  std::vector<double> values;
};

// {k * step : k integer, lo <= k * step <= hi}. Finite truncation of a dense
// set of jump levels such as the rationals.
struct LatticeLevels {
  double step = 0.1;
  double lo = 0.0;
  double hi = 0.0;
};

// Finite set of real levels on which a scalar surface function may switch
// branches.
class LevelSet {
 public:
  LevelSet() = default;
  static LevelSet explicit_list(std::vector<double> values);
  static LevelSet lattice(double step, double lo, double hi);

  bool is_lattice() const { return std::holds_alternative<LatticeLevels>(rep_); }
  const ExplicitLevels* as_explicit() const { return std::get_if<ExplicitLevels>(&rep_); }
  const LatticeLevels* as_lattice() const { return std::get_if<LatticeLevels>(&rep_); }

  bool empty() const { return size() == 0; }
  std::int64_t size() const;

  // k-th level in increasing order, 0 <= k < size().
  double level(std::int64_t k) const;
  std::vector<double> enumerate() const;

  // min |s - c| over levels c; +inf when empty.
  double distance(double s) const;

  // Number of levels c with c <= s. Two values share a branch iff their
  // counts agree; this is the right-continuous convention: the branch of
  // [c_k, c_{k+1}) includes its left end.
  std::int64_t count_at_or_below(double s) const;

  // Nearest level to s, if any.
  std::optional<double> nearest(double s) const;

 private:
  explicit LevelSet(ExplicitLevels e) : rep_(std::move(e)) {}
  explicit LevelSet(LatticeLevels l) : rep_(l) {}

  // Lattice index range [kmin, kmax].
  std::int64_t kmin() const;
  std::int64_t kmax() const;

  std::variant<ExplicitLevels, LatticeLevels> rep_{ExplicitLevels{}};
};

// floor(s / step) computed so that k * step <= s < (k + 1) * step holds in
// the same floating arithmetic used for the levels themselves.
std::int64_t lattice_floor(double s, double step);

}  // namespace region_ode

#endif  // REGION_ODE_LEVEL_SET_HPP_
