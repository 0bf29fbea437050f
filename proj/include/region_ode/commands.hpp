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

#ifndef REGION_ODE_COMMANDS_HPP_
#define REGION_ODE_COMMANDS_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "region_ode/report_io.hpp"
#include "region_ode/scenario.hpp"

namespace region_ode {

// Process exit codes. No command returns anything else.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunResult {
  CheckReport region;
  std::optional<CheckReport> transversality;
  Trajectory trajectory;
  CertReport certificate;
  // Names of the failing conditions, in evaluation order.
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
};

// Region check, transversality (when the model has surfaces), integration,
// then every certificate.
RunResult run_scenario(const ScenarioConfig& cfg);

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"region", "transversality", "classify", "lower",
                                                 "upper"};
  return names;
}

// One named checker. Throws UsageError for an unknown name.
CheckReport run_check(const ScenarioConfig& cfg, const std::string& which);

Json run_report_json(const ScenarioConfig& cfg, const RunResult& result);

// CLI entry points. `out` receives reports and tables, `err` diagnostics.
int cmd_run(const std::string& scenario, const std::string& out_dir, std::ostream& out,
            std::ostream& err);
int cmd_check(const std::string& scenario, const std::string& which, std::ostream& out,
              std::ostream& err);
// Runs the scenario once per value of `param`. With a non-empty out_dir each
// run writes into out_dir/<param>=<value>/ and the table goes to sweep.csv.
int cmd_sweep(const std::string& scenario, const std::string& param,
              const std::vector<std::string>& values, const std::string& out_dir,
              std::ostream& out, std::ostream& err);

}  // namespace region_ode

#endif  // REGION_ODE_COMMANDS_HPP_
