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

#ifndef REGION_ODE_SCENARIO_HPP_
#define REGION_ODE_SCENARIO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "region_ode/checks.hpp"
#include "region_ode/integrator.hpp"
#include "region_ode/verify.hpp"

namespace region_ode {

// Everything a command needs, read from an INI-style scenario file.
struct ScenarioConfig {
  // [scenario]
  std::string name = "scenario";
  int dimension = 1;
  double horizon = 1.0;
  std::vector<double> x0 = {0.0};
  std::uint64_t seed = 0;
  bool allow_outside_start = false;
  std::string branch_convention = "right_continuous";

  // [model]: ball_example | ball_example_direct | band_example | sign
  std::string model = "band_example";
  double alpha = 0.0;
  int q = 10;
  double gain = 1.0;

  // [region]: ball | band | example_band45
  std::string region = "example_band45";
  double radius = 1.0;
  std::string band_lower = "alpha_t";
  std::string band_upper = "beta_tilde";

  // [integrator]
  std::string method = "rk4_events";
  double step = 1e-5;
  double event_tol = 1e-10;
  int max_event_bisections = 60;
  std::string selection = "center";

  // [envelope]
  double eps0 = 1e-2;
  double eps_factor = 0.5;
  int eps_depth = 6;
  std::uint64_t envelope_samples = 64;

  // [checks]
  std::uint64_t region_samples = 10000;
  double region_tol = 0.0;
  std::string region_mode = "projected";
  std::uint64_t transversality_samples = 64;
  double transversality_margin = 1e-6;
  std::uint64_t classify_samples = 10000;
  std::string lower = "alpha_t";
  std::string upper = "beta_tilde";
  std::uint64_t solution_grid = 10001;
  double solution_tol = 1e-12;

  // [certify]
  double certify_region_tol = 1e-6;
  // <= 0 selects 10 * event_tol.
  double delta_surface = 0.0;
  double surface_delta = 1e-6;
  double surface_time_tol = 1e-3;

  bool operator==(const ScenarioConfig&) const = default;
};

// Malformed scenario text. line is 0 when no single line is to blame.
class ScenarioError : public UsageError {
 public:
  ScenarioError(const std::string& source, int line, const std::string& field,
                const std::string& message);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

ScenarioConfig parse_scenario(const std::string& text, const std::string& source = "<string>");
ScenarioConfig load_scenario(const std::filesystem::path& path);

// Canonical text with every key in a fixed order; parse_scenario of the
// result reproduces the config exactly.
std::string write_scenario(const ScenarioConfig& cfg);

// Sets one key, addressed as "section.key" or by its unique bare key name.
// Throws ScenarioError for unknown names or unparsable values.
void set_parameter(ScenarioConfig& cfg, const std::string& name, const std::string& value);

// Applies REGION_ODE_SEED when set. Throws ScenarioError if it is not an
// unsigned integer.
void apply_seed_override(ScenarioConfig& cfg);

// Semantic checks: presets exist, dimensions agree, h(0, x0) <= 0 unless
// allow_outside_start. Throws ScenarioError.
void validate_scenario(const ScenarioConfig& cfg);

RhsModel build_model(const ScenarioConfig& cfg);
ViablePair build_pair(const ScenarioConfig& cfg);
StateVec initial_state(const ScenarioConfig& cfg);
IntegratorConfig integrator_config(const ScenarioConfig& cfg);
EnvelopeOptions envelope_options(const ScenarioConfig& cfg);
RegionCheckOptions region_options(const ScenarioConfig& cfg);
TransversalityOptions transversality_options(const ScenarioConfig& cfg);
ClassifyOptions classify_options(const ScenarioConfig& cfg);
CertOptions cert_options(const ScenarioConfig& cfg);

}  // namespace region_ode

#endif  // REGION_ODE_SCENARIO_HPP_
