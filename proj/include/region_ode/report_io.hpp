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

#ifndef REGION_ODE_REPORT_IO_HPP_
#define REGION_ODE_REPORT_IO_HPP_

#include <filesystem>
#include <string>

#include <json.hpp>

#include "region_ode/checks.hpp"
#include "region_ode/integrator.hpp"
#include "region_ode/verify.hpp"

namespace region_ode {

using Json = nlohmann::ordered_json;

// Shortest decimal text that parses back to the same double; "inf", "-inf"
// and "nan" for non-finite values.
std::string format_double(double v);

Json to_json(const TimePoint& p);
Json to_json(const CheckReport& report);
Json to_json(const CertReport& report);
Json events_json(const Trajectory& traj);

// Header "t,x1..xn,h,surface_distance" and one row per grid time.
std::string trajectory_csv(const Trajectory& traj, const RhsModel& model, const ViablePair& pair);

// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace region_ode

#endif  // REGION_ODE_REPORT_IO_HPP_
