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

#include "region_ode/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

namespace region_ode {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

Json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

Json vec_json(const StateVec& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(number(v[i]));
  return arr;
}

}  // namespace

Json to_json(const TimePoint& p) {
  Json j;
  j["t"] = number(p.t);
  j["x"] = vec_json(p.x);
  return j;
}

Json to_json(const CheckReport& report) {
  Json j;
  j["condition"] = report.condition;
  j["pass"] = report.pass;
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["worst"] = number(report.worst);
  j["comparison"] = report.comparison == Comparison::at_most ? "at_most" : "greater_than";
  j["threshold"] = number(report.threshold);
  j["witness"] = report.witness ? to_json(*report.witness) : Json(nullptr);
  j["witness_detail"] = report.witness_detail;
  j["seam_resamples"] = report.seam_resamples;
  j["sampler_flagged"] = report.sampler_flagged;
  j["levels_checked"] = report.levels_checked;
  j["levels_unreachable"] = report.levels_unreachable;
  j["classification"] =
      report.classification ? Json(to_string(*report.classification)) : Json(nullptr);
  j["notes"] = report.notes;
  return j;
}

Json to_json(const CertReport& report) {
  Json j;
  j["pass"] = report.pass();
  Json region;
  region["max_h"] = number(report.region.max_h);
  region["tolerance"] = number(report.region.tolerance);
  region["pass"] = report.region.pass;
  Json times = Json::array();
  for (double t : report.region.violations) times.push_back(number(t));
  region["violations"] = times;
  j["region"] = region;
  Json residual;
  residual["residual"] = number(report.residual.residual);
  residual["pointwise"] = number(report.residual.pointwise);
  residual["integral_defect"] = number(report.residual.integral_defect);
  residual["tolerance"] = number(report.residual.tolerance);
  residual["excluded_intervals"] = report.residual.excluded_intervals;
  residual["pass"] = report.residual.pass;
  j["residual"] = residual;
  Json surface;
  surface["surface_time_fraction"] = number(report.surface.fraction);
  surface["tolerance"] = number(report.surface.tolerance);
  surface["pass"] = report.surface.pass;
  j["surface_time"] = surface;
  j["notes"] = report.notes;
  return j;
}

Json events_json(const Trajectory& traj) {
  Json arr = Json::array();
  for (const auto& e : traj.events) {
    Json j;
    j["t"] = number(e.t);
    j["surface"] = e.surface;
    j["level"] = number(e.level);
    j["direction"] = e.direction;
    arr.push_back(j);
  }
  Json out;
  out["count"] = traj.events.size();
  out["events"] = arr;
  return out;
}

std::string trajectory_csv(const Trajectory& traj, const RhsModel& model, const ViablePair& pair) {
  std::string out = "t";
  const int n = model.dimension();
  for (int i = 1; i <= n; ++i) out += ",x" + std::to_string(i);
  out += ",h,surface_distance\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const double t = traj.times[k];
    const StateVec& x = traj.states[k];
    out += format_double(t);
    for (int i = 0; i < n; ++i) out += "," + format_double(x[i]);
    out += "," + format_double(pair.value(t, x));
    out += "," + format_double(surface_distance(model, t, x));
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os << content;
    os.flush();
    if (!os) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot rename into " + path.string());
  }
}

}  // namespace region_ode
