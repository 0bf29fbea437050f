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

#include "region_ode/commands.hpp"

#include <filesystem>
#include <iomanip>
#include <sstream>

#include "region_ode/regions.hpp"

namespace region_ode {

namespace fs = std::filesystem;

RunResult run_scenario(const ScenarioConfig& cfg) {
  validate_scenario(cfg);
  const RhsModel model = build_model(cfg);
  const ViablePair pair = build_pair(cfg);
  const StateVec x0 = initial_state(cfg);

  RunResult result;
  result.region = check_solution_region(pair, model, x0, region_options(cfg));
  if (!result.region.pass) result.failures.push_back("solution_region");
  if (model.has_surfaces()) {
    result.transversality =
        check_transversality(model, pair, cfg.horizon, transversality_options(cfg));
    if (!result.transversality->pass) result.failures.push_back("transversality");
  }

  const IntegratorConfig ic = integrator_config(cfg);
  result.trajectory = ic.method == Method::setvalued_euler
                          ? integrate_inclusion_euler(model, x0, ic)
                          : integrate_modified(model, pair, x0, ic);

  result.certificate = certify(result.trajectory, model, pair, cert_options(cfg));
  if (!result.certificate.region.pass) result.failures.push_back("certify_region");
  if (!result.certificate.residual.pass) result.failures.push_back("certify_residual");
  if (!result.certificate.surface.pass) result.failures.push_back("surface_time");
  return result;
}

CheckReport run_check(const ScenarioConfig& cfg, const std::string& which) {
  validate_scenario(cfg);
  const RhsModel model = build_model(cfg);
  const ViablePair pair = build_pair(cfg);
  const StateVec x0 = initial_state(cfg);
  if (which == "region") return check_solution_region(pair, model, x0, region_options(cfg));
  if (which == "transversality") {
    return check_transversality(model, pair, cfg.horizon, transversality_options(cfg));
  }
  if (which == "classify") return classify_pair(pair, classify_options(cfg));
  if (which == "lower" || which == "upper") {
    if (cfg.dimension != 1) throw UsageError(which + " solution checks need a scalar scenario");
    const auto grid = uniform_grid(cfg.horizon, cfg.solution_grid);
    if (which == "lower") {
      return check_lower_solution(model, *band_functions::by_name(cfg.lower), x0[0], grid,
                                  cfg.solution_tol);
    }
    return check_upper_solution(model, *band_functions::by_name(cfg.upper), x0[0], grid,
                                cfg.solution_tol);
  }
  throw UsageError("unknown checker '" + which + "'");
}

Json run_report_json(const ScenarioConfig& cfg, const RunResult& result) {
  Json j;
  j["scenario"] = cfg.name;
  j["seed"] = cfg.seed;
  j["pass"] = result.pass();
  j["failures"] = result.failures;
  j["checks"]["solution_region"] = to_json(result.region);
  j["checks"]["transversality"] =
      result.transversality ? to_json(*result.transversality) : Json(nullptr);
  Json traj;
  traj["points"] = result.trajectory.size();
  traj["events"] = result.trajectory.events.size();
  traj["max_step"] = result.trajectory.max_step();
  traj["projections_outside_region"] = result.trajectory.projections_outside_region;
  traj["notes"] = result.trajectory.notes;
  j["trajectory"] = traj;
  j["certificate"] = to_json(result.certificate);
  return j;
}

namespace {

ScenarioConfig load_with_overrides(const std::string& path) {
  ScenarioConfig cfg = load_scenario(path);
  apply_seed_override(cfg);
  return cfg;
}

// Maps exceptions onto the exit-code contract.
template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EvaluationError& e) {
    err << "failed: evaluation: " << e.what() << '\n';
    return kExitFail;
  } catch (const EventLocalizationError& e) {
    err << "failed: event_localization: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

void write_outputs(const fs::path& dir, const ScenarioConfig& cfg, const RunResult& result) {
  fs::create_directories(dir);
  const RhsModel model = build_model(cfg);
  const ViablePair pair = build_pair(cfg);
  write_file_atomic(dir / "trajectory.csv", trajectory_csv(result.trajectory, model, pair));
  write_file_atomic(dir / "events.json", events_json(result.trajectory).dump(2) + "\n");
  write_file_atomic(dir / "report.json", run_report_json(cfg, result).dump(2) + "\n");
}

void print_summary(std::ostream& out, const RunResult& r) {
  out << "solution_region: " << (r.region.pass ? "pass" : "fail")
      << " (worst " << format_double(r.region.worst) << ")\n";
  if (r.transversality) {
    out << "transversality: " << (r.transversality->pass ? "pass" : "fail") << " (min margin "
        << format_double(r.transversality->worst) << ")\n";
  }
  const auto& c = r.certificate;
  out << "certify_region: " << (c.region.pass ? "pass" : "fail") << " (max_h "
      << format_double(c.region.max_h) << ")\n";
  out << "certify_residual: " << (c.residual.pass ? "pass" : "fail") << " (residual "
      << format_double(c.residual.residual) << ", tolerance "
      << format_double(c.residual.tolerance) << ")\n";
  out << "surface_time: " << (c.surface.pass ? "pass" : "fail") << " (fraction "
      << format_double(c.surface.fraction) << ")\n";
}

}  // namespace

int cmd_run(const std::string& scenario, const std::string& out_dir, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    const ScenarioConfig cfg = load_with_overrides(scenario);
    const RunResult result = run_scenario(cfg);
    if (!out_dir.empty()) write_outputs(out_dir, cfg, result);
    print_summary(out, result);
    if (result.pass()) return kExitPass;
    for (const auto& name : result.failures) err << "failed: " << name << '\n';
    return kExitFail;
  });
}

int cmd_check(const std::string& scenario, const std::string& which, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    bool known = false;
    for (const auto& n : check_names()) known = known || n == which;
    if (!known) throw UsageError("unknown checker '" + which + "'");
    const ScenarioConfig cfg = load_with_overrides(scenario);
    const CheckReport report = run_check(cfg, which);
    out << to_json(report).dump(2) << '\n';
    if (report.pass) return kExitPass;
    err << "failed: " << report.condition << '\n';
    return kExitFail;
  });
}

int cmd_sweep(const std::string& scenario, const std::string& param,
              const std::vector<std::string>& values, const std::string& out_dir,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (values.empty()) throw UsageError("sweep: empty values list");
    const ScenarioConfig base = load_with_overrides(scenario);
    std::vector<ScenarioConfig> configs;
    for (const auto& v : values) {
      ScenarioConfig cfg = base;
      set_parameter(cfg, param, v);
      configs.push_back(std::move(cfg));
    }
    std::ostringstream table;
    table << "value,pass,transversality,max_h,surface_time,residual,failures\n";
    bool all_pass = true;
    for (std::size_t i = 0; i < configs.size(); ++i) {
      const RunResult r = run_scenario(configs[i]);
      if (!out_dir.empty()) write_outputs(fs::path(out_dir) / (param + "=" + values[i]), configs[i], r);
      all_pass = all_pass && r.pass();
      std::string failures;
      for (const auto& f : r.failures) failures += (failures.empty() ? "" : ";") + f;
      table << values[i] << ',' << (r.pass() ? "pass" : "fail") << ','
            << (r.transversality ? (r.transversality->pass ? "pass" : "fail") : "n/a") << ','
            << format_double(r.certificate.region.max_h) << ','
            << format_double(r.certificate.surface.fraction) << ','
            << format_double(r.certificate.residual.residual) << ',' << failures << '\n';
    }
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      write_file_atomic(fs::path(out_dir) / "sweep.csv", table.str());
    }
    out << table.str();
    return all_pass ? kExitPass : kExitFail;
  });
}

}  // namespace region_ode
