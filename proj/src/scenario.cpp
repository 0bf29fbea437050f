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

#include "region_ode/scenario.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <type_traits>

#include "region_ode/models.hpp"
#include "region_ode/report_io.hpp"

namespace region_ode {

namespace pt = boost::property_tree;

ScenarioError::ScenarioError(const std::string& source, int line, const std::string& field,
                             const std::string& message)
    : UsageError(source + (line > 0 ? ":" + std::to_string(line) : std::string()) +
                 (field.empty() ? std::string() : ": " + field) + ": " + message),
      line_(line),
      field_(field) {}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& text) {
  const std::string s = trim(text);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("expected a number, got '" + text + "'");
  }
  if (!std::isfinite(v)) throw std::invalid_argument("value must be finite");
  return v;
}

template <class Int>
Int to_integer(const std::string& text) {
  const std::string s = trim(text);
  Int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("expected an integer, got '" + text + "'");
  }
  return v;
}

bool to_bool(const std::string& text) {
  const std::string s = trim(text);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw std::invalid_argument("expected true or false, got '" + text + "'");
}

std::vector<double> to_list(const std::string& text) {
  std::vector<double> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) out.push_back(to_double(item));
  if (out.empty()) throw std::invalid_argument("expected a comma-separated list of numbers");
  return out;
}

template <class T>
void convert(const std::string& text, T& out) {
  if constexpr (std::is_same_v<T, double>) {
    out = to_double(text);
  } else if constexpr (std::is_same_v<T, bool>) {
    out = to_bool(text);
  } else if constexpr (std::is_integral_v<T>) {
    out = to_integer<T>(text);
  } else if constexpr (std::is_same_v<T, std::string>) {
    out = trim(text);
  } else {
    out = to_list(text);
  }
}

template <class T>
std::string render(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return format_double(v);
  } else if constexpr (std::is_same_v<T, bool>) {
    return v ? "true" : "false";
  } else if constexpr (std::is_integral_v<T>) {
    return std::to_string(v);
  } else if constexpr (std::is_same_v<T, std::string>) {
    return v;
  } else {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_double(v[i]);
    return out;
  }
}

struct Field {
  std::string section;
  std::string key;
  std::function<void(ScenarioConfig&, const std::string&)> set;
  std::function<std::string(const ScenarioConfig&)> get;

  std::string path() const { return section + "." + key; }
};

template <class T>
Field field(const char* section, const char* key, T ScenarioConfig::*member) {
  return Field{section, key,
               [member](ScenarioConfig& c, const std::string& v) { convert(v, c.*member); },
               [member](const ScenarioConfig& c) { return render(c.*member); }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      field("scenario", "name", &ScenarioConfig::name),
      field("scenario", "dimension", &ScenarioConfig::dimension),
      field("scenario", "horizon", &ScenarioConfig::horizon),
      field("scenario", "x0", &ScenarioConfig::x0),
      field("scenario", "seed", &ScenarioConfig::seed),
      field("scenario", "allow_outside_start", &ScenarioConfig::allow_outside_start),
      field("scenario", "branch_convention", &ScenarioConfig::branch_convention),
      field("model", "preset", &ScenarioConfig::model),
      field("model", "alpha", &ScenarioConfig::alpha),
      field("model", "q", &ScenarioConfig::q),
      field("model", "gain", &ScenarioConfig::gain),
      field("region", "kind", &ScenarioConfig::region),
      field("region", "radius", &ScenarioConfig::radius),
      field("region", "band_lower", &ScenarioConfig::band_lower),
      field("region", "band_upper", &ScenarioConfig::band_upper),
      field("integrator", "method", &ScenarioConfig::method),
      field("integrator", "step", &ScenarioConfig::step),
      field("integrator", "event_tol", &ScenarioConfig::event_tol),
      field("integrator", "max_event_bisections", &ScenarioConfig::max_event_bisections),
      field("integrator", "selection", &ScenarioConfig::selection),
      field("envelope", "eps0", &ScenarioConfig::eps0),
      field("envelope", "factor", &ScenarioConfig::eps_factor),
      field("envelope", "depth", &ScenarioConfig::eps_depth),
      field("envelope", "samples", &ScenarioConfig::envelope_samples),
      field("checks", "region_samples", &ScenarioConfig::region_samples),
      field("checks", "region_tol", &ScenarioConfig::region_tol),
      field("checks", "region_mode", &ScenarioConfig::region_mode),
      field("checks", "transversality_samples", &ScenarioConfig::transversality_samples),
      field("checks", "transversality_margin", &ScenarioConfig::transversality_margin),
      field("checks", "classify_samples", &ScenarioConfig::classify_samples),
      field("checks", "lower", &ScenarioConfig::lower),
      field("checks", "upper", &ScenarioConfig::upper),
      field("checks", "solution_grid", &ScenarioConfig::solution_grid),
      field("checks", "solution_tol", &ScenarioConfig::solution_tol),
      field("certify", "region_tol", &ScenarioConfig::certify_region_tol),
      field("certify", "delta_surface", &ScenarioConfig::delta_surface),
      field("certify", "surface_delta", &ScenarioConfig::surface_delta),
      field("certify", "surface_time_tol", &ScenarioConfig::surface_time_tol),
  };
  return table;
}

const Field* find_field(const std::string& section, const std::string& key) {
  for (const auto& f : fields()) {
    if (f.section == section && f.key == key) return &f;
  }
  return nullptr;
}

// Line of each "section.key" in the raw text, for diagnostics.
std::map<std::string, int> key_lines(const std::string& text) {
  std::map<std::string, int> lines;
  std::istringstream is(text);
  std::string raw;
  std::string section;
  int number = 0;
  while (std::getline(is, raw)) {
    ++number;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == ';' || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq != std::string::npos) lines.emplace(section + "." + trim(line.substr(0, eq)), number);
  }
  return lines;
}

using LineOf = std::function<int(const std::string&)>;

void validate_impl(const ScenarioConfig& c, const std::string& source, const LineOf& line_of) {
  auto fail = [&](const std::string& path, const std::string& message) {
    throw ScenarioError(source, line_of(path), path, message);
  };
  auto one_of = [&](const std::string& path, const std::string& v,
                    std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
      if (v == a) return;
    }
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    fail(path, "unknown value '" + v + "' (expected one of: " + list + ")");
  };

  if (c.name.empty()) fail("scenario.name", "must not be empty");
  if (c.dimension < 1) fail("scenario.dimension", "must be >= 1");
  if (!(c.horizon > 0.0)) fail("scenario.horizon", "must be > 0");
  if (static_cast<int>(c.x0.size()) != c.dimension) {
    fail("scenario.x0", "has " + std::to_string(c.x0.size()) + " components, dimension is " +
                            std::to_string(c.dimension));
  }
  one_of("scenario.branch_convention", c.branch_convention, {"right_continuous"});

  one_of("model.preset", c.model, {"ball_example", "ball_example_direct", "band_example", "sign"});
  const bool ball_model = c.model == "ball_example" || c.model == "ball_example_direct";
  if (ball_model && c.dimension != 2) fail("scenario.dimension", "model " + c.model + " needs 2");
  if (!ball_model && c.dimension != 1) fail("scenario.dimension", "model " + c.model + " needs 1");
  if (c.model != "sign" && c.horizon != 1.0) {
    fail("scenario.horizon", "model " + c.model + " is defined on [0, 1]");
  }
  if (c.q < 1) fail("model.q", "must be >= 1");

  one_of("region.kind", c.region, {"ball", "band", "example_band45"});
  if (c.region == "ball" && !(c.radius > 0.0)) fail("region.radius", "must be > 0");
  if (c.region != "ball" && c.dimension != 1) fail("region.kind", c.region + " needs dimension 1");
  if (c.region == "band") {
    if (!band_functions::by_name(c.band_lower)) fail("region.band_lower", "unknown function");
    if (!band_functions::by_name(c.band_upper)) fail("region.band_upper", "unknown function");
  }

  one_of("integrator.method", c.method, {"rk4_events", "euler", "setvalued_euler"});
  if (!(c.step > 0.0) || c.step > c.horizon) fail("integrator.step", "must be in (0, horizon]");
  if (!(c.event_tol > 0.0) || !(c.event_tol < c.step)) {
    fail("integrator.event_tol", "must be in (0, step)");
  }
  if (c.max_event_bisections < 1) fail("integrator.max_event_bisections", "must be >= 1");
  one_of("integrator.selection", c.selection, {"center", "random"});

  if (!(c.eps0 > 0.0)) fail("envelope.eps0", "must be > 0");
  if (!(c.eps_factor > 0.0 && c.eps_factor < 1.0)) fail("envelope.factor", "must be in (0, 1)");
  if (c.eps_depth < 1) fail("envelope.depth", "must be >= 1");
  if (c.envelope_samples < 1) fail("envelope.samples", "must be >= 1");

  if (c.region_samples < 1) fail("checks.region_samples", "must be >= 1");
  one_of("checks.region_mode", c.region_mode, {"projected", "modified"});
  if (c.transversality_samples < 1) fail("checks.transversality_samples", "must be >= 1");
  if (c.classify_samples < 1) fail("checks.classify_samples", "must be >= 1");
  if (!band_functions::by_name(c.lower)) fail("checks.lower", "unknown function");
  if (!band_functions::by_name(c.upper)) fail("checks.upper", "unknown function");
  if (c.solution_grid < 2) fail("checks.solution_grid", "must be >= 2");

  if (!(c.surface_delta > 0.0)) fail("certify.surface_delta", "must be > 0");
  if (!(c.surface_time_tol >= 0.0)) fail("certify.surface_time_tol", "must be >= 0");

  if (!c.allow_outside_start) {
    const ViablePair pair = build_pair(c);
    const double h0 = pair.value(0.0, initial_state(c));
    if (h0 > 0.0) {
      fail("scenario.x0", "h(0, x0) = " + format_double(h0) +
                              " > 0; set allow_outside_start = true to run anyway");
    }
  }
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text, const std::string& source) {
  pt::ptree tree;
  try {
    std::istringstream is(text);
    pt::ini_parser::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ScenarioError(source, static_cast<int>(e.line()), "", e.message());
  }
  const auto lines = key_lines(text);
  const LineOf line_of = [&lines](const std::string& path) {
    const auto it = lines.find(path);
    return it == lines.end() ? 0 : it->second;
  };

  ScenarioConfig cfg;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ScenarioError(source, line_of("." + section), section, "key outside of any section");
    }
    for (const auto& [key, value] : body) {
      const std::string path = section + "." + key;
      const Field* f = find_field(section, key);
      if (!f) throw ScenarioError(source, line_of(path), path, "unknown key");
      try {
        f->set(cfg, value.data());
      } catch (const std::invalid_argument& e) {
        throw ScenarioError(source, line_of(path), path, e.what());
      } catch (const std::out_of_range&) {
        throw ScenarioError(source, line_of(path), path, "value out of range");
      }
    }
  }
  validate_impl(cfg, source, line_of);
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ScenarioError(path.string(), 0, "", "cannot read scenario file");
  std::ostringstream os;
  os << is.rdbuf();
  return parse_scenario(os.str(), path.string());
}

std::string write_scenario(const ScenarioConfig& cfg) {
  std::string out;
  std::string section;
  for (const auto& f : fields()) {
    if (f.section != section) {
      if (!section.empty()) out += '\n';
      section = f.section;
      out += "[" + section + "]\n";
    }
    out += f.key + " = " + f.get(cfg) + "\n";
  }
  return out;
}

void set_parameter(ScenarioConfig& cfg, const std::string& name, const std::string& value) {
  const Field* target = nullptr;
  const auto dot = name.find('.');
  if (dot != std::string::npos) {
    target = find_field(name.substr(0, dot), name.substr(dot + 1));
  } else {
    for (const auto& f : fields()) {
      if (f.key != name) continue;
      if (target) throw ScenarioError("sweep", 0, name, "ambiguous; use section.key");
      target = &f;
    }
  }
  if (!target) throw ScenarioError("sweep", 0, name, "unknown parameter");
  ScenarioConfig updated = cfg;
  try {
    target->set(updated, value);
  } catch (const std::invalid_argument& e) {
    throw ScenarioError("sweep", 0, target->path(), e.what());
  } catch (const std::out_of_range&) {
    throw ScenarioError("sweep", 0, target->path(), "value out of range");
  }
  validate_impl(updated, "sweep", [](const std::string&) { return 0; });
  cfg = std::move(updated);
}

void apply_seed_override(ScenarioConfig& cfg) {
  const char* env = std::getenv("REGION_ODE_SEED");
  if (!env) return;
  try {
    cfg.seed = to_integer<std::uint64_t>(env);
  } catch (const std::invalid_argument&) {
    throw ScenarioError("REGION_ODE_SEED", 0, "scenario.seed", "not an unsigned integer");
  }
}

void validate_scenario(const ScenarioConfig& cfg) {
  validate_impl(cfg, cfg.name, [](const std::string&) { return 0; });
}

ViablePair build_pair(const ScenarioConfig& cfg) {
  if (cfg.region == "ball") return ball_pair(cfg.radius, cfg.dimension);
  if (cfg.region == "band") {
    return band_pair(*band_functions::by_name(cfg.band_lower),
                     *band_functions::by_name(cfg.band_upper), cfg.horizon);
  }
  return example_band45_pair();
}

RhsModel build_model(const ScenarioConfig& cfg) {
  const double half_width = 2.0 * build_pair(cfg).bound + 1.0;
  if (cfg.model == "ball_example") return models::ball_example(cfg.alpha, cfg.q, half_width);
  if (cfg.model == "ball_example_direct") {
    return models::ball_example_direct(cfg.alpha, cfg.q, half_width);
  }
  if (cfg.model == "sign") return models::sign_model(cfg.gain, cfg.horizon);
  return models::band_example();
}

StateVec initial_state(const ScenarioConfig& cfg) {
  return Eigen::Map<const StateVec>(cfg.x0.data(), static_cast<Eigen::Index>(cfg.x0.size()));
}

EnvelopeOptions envelope_options(const ScenarioConfig& cfg) {
  EnvelopeOptions e;
  e.schedule = EpsSchedule{cfg.eps0, cfg.eps_factor, cfg.eps_depth};
  e.samples = cfg.envelope_samples;
  e.seed = cfg.seed;
  e.collapse_continuous = true;
  return e;
}

IntegratorConfig integrator_config(const ScenarioConfig& cfg) {
  IntegratorConfig ic;
  if (cfg.method == "euler") {
    ic.method = Method::euler;
  } else if (cfg.method == "setvalued_euler") {
    ic.method = Method::setvalued_euler;
  } else {
    ic.method = Method::rk4_events;
  }
  ic.step = cfg.step;
  ic.event_tol = cfg.event_tol;
  ic.max_event_bisections = cfg.max_event_bisections;
  ic.selection = cfg.selection == "random" ? Selection::random : Selection::center;
  ic.seed = cfg.seed;
  ic.envelope = envelope_options(cfg);
  ic.envelope.collapse_continuous = false;
  return ic;
}

RegionCheckOptions region_options(const ScenarioConfig& cfg) {
  RegionCheckOptions o;
  o.samples = cfg.region_samples;
  o.tol = cfg.region_tol;
  o.seed = cfg.seed;
  o.mode = cfg.region_mode == "modified" ? RegionMode::modified : RegionMode::projected;
  o.envelope = envelope_options(cfg);
  return o;
}

TransversalityOptions transversality_options(const ScenarioConfig& cfg) {
  TransversalityOptions o;
  o.samples_per_level = cfg.transversality_samples;
  o.margin = cfg.transversality_margin;
  o.seed = cfg.seed;
  o.envelope = envelope_options(cfg);
  return o;
}

ClassifyOptions classify_options(const ScenarioConfig& cfg) {
  ClassifyOptions o;
  o.samples = cfg.classify_samples;
  o.seed = cfg.seed;
  o.horizon = cfg.horizon;
  return o;
}

CertOptions cert_options(const ScenarioConfig& cfg) {
  CertOptions o;
  o.region_tol = cfg.certify_region_tol;
  o.delta_surface = cfg.delta_surface;
  o.surface_delta = cfg.surface_delta;
  o.surface_time_tol = cfg.surface_time_tol;
  o.event_tol = cfg.event_tol;
  return o;
}

}  // namespace region_ode
