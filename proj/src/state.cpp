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

#include "region_ode/state.hpp"

#include <cmath>
#include <sstream>

namespace region_ode {

void require_state(const StateVec& v, Eigen::Index n, const std::string& what) {
  if (v.size() != n) {
    std::ostringstream os;
    os << what << ": dimension " << v.size() << " does not match expected " << n;
    throw UsageError(os.str());
  }
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      std::ostringstream os;
      os << what << ": component " << i << " is not finite";
      throw UsageError(os.str());
    }
  }
}

std::string format_vec(const StateVec& v) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace region_ode
