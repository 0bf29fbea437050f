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

#ifndef REGION_ODE_EXEC_HPP_
#define REGION_ODE_EXEC_HPP_

#include <cstddef>
#include <exception>
#include <vector>

namespace region_ode {

// Execution policy for the per-sample kernels. `serial` is the reference
// path; `parallel` runs the same per-index body under OpenMP. Results are
// written per index and reduced serially, so both give identical bits.
enum class Exec { serial, parallel };

// Calls body(i) for i in [0, n). Exceptions thrown by body are captured and
// the one from the lowest index is rethrown after the loop.
template <class Body>
void for_each_index(Exec exec, std::size_t n, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (long long i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace region_ode

#endif  // REGION_ODE_EXEC_HPP_
