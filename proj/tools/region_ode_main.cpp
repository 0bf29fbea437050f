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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "region_ode/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Solution-region solver for ODEs with discontinuous right-hand sides"};
  app.require_subcommand(1);

  std::string scenario;
  std::string out_dir;
  auto* run = app.add_subcommand("run", "Check, integrate and certify a scenario");
  run->add_option("scenario", scenario, "Scenario file")->required();
  run->add_option("-o,--output", out_dir, "Output directory")->required();

  std::string which;
  auto* check = app.add_subcommand("check", "Run a single checker and print its report");
  check->add_option("scenario", scenario, "Scenario file")->required();
  check->add_option("--which", which, "region | transversality | classify | lower | upper")
      ->required();

  std::string param;
  std::vector<std::string> values;
  auto* sweep = app.add_subcommand("sweep", "Run a scenario once per parameter value");
  sweep->add_option("scenario", scenario, "Scenario file")->required();
  sweep->add_option("--param", param, "Parameter name (key or section.key)")->required();
  sweep->add_option("--values", values, "Comma-separated values")
      ->delimiter(',')
      ->expected(0, -1)
      ->required();
  sweep->add_option("-o,--output", out_dir, "Output directory for per-value runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? region_ode::kExitPass : region_ode::kExitUsage;
  }

  try {
    if (*run) return region_ode::cmd_run(scenario, out_dir, std::cout, std::cerr);
    if (*check) return region_ode::cmd_check(scenario, which, std::cout, std::cerr);
    if (*sweep) return region_ode::cmd_sweep(scenario, param, values, out_dir, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return region_ode::kExitUsage;
}
