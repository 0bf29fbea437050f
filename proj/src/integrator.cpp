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

#include "region_ode/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace region_ode {

const char* to_string(Method m) {
  switch (m) {
    case Method::rk4_events:
      return "rk4_events";
    case Method::euler:
      return "euler";
    case Method::setvalued_euler:
      return "setvalued_euler";
    case Method::reference_adaptive:
      return "reference_adaptive";
  }
  return "?";
}

const char* to_string(Selection s) { return s == Selection::center ? "center" : "random"; }

IntegratorConfig IntegratorConfig::defaults_for(double horizon) {
  IntegratorConfig c;
  c.step = horizon / 1e5;
  c.event_tol = 1e-10 * horizon;
  return c;
}

void IntegratorConfig::validate(double horizon) const {
  if (!(step > 0.0) || !std::isfinite(step)) throw UsageError("integrator: step must be > 0");
  if (step > horizon) throw UsageError("integrator: step exceeds the horizon");
  if (!(event_tol > 0.0)) throw UsageError("integrator: event_tol must be > 0");
  if (!(event_tol < step)) throw UsageError("integrator: event_tol must be smaller than step");
  if (max_event_bisections < 1) throw UsageError("integrator: max_event_bisections must be >= 1");
}

double Trajectory::max_step() const {
  double h = 0.0;
  for (std::size_t i = 1; i < times.size(); ++i) h = std::max(h, times[i] - times[i - 1]);
  return h;
}

namespace {

// Grid times k * step, k = 0..N, with the last one clamped to the horizon.
std::size_t grid_count(double horizon, double step) {
  return static_cast<std::size_t>(std::ceil(horizon / step - 1e-9));
}

double grid_time(std::size_t k, std::size_t n, double horizon, double step) {
  return k >= n ? horizon : std::min(horizon, static_cast<double>(k) * step);
}

void append_events(const RhsModel& model, double t, const std::vector<std::int64_t>& before,
                   const std::vector<std::int64_t>& after, std::vector<Event>& events) {
  for (std::size_t s = 0; s < before.size(); ++s) {
    const auto& levels = model.surfaces()[s].levels;
    for (auto k = before[s]; k < after[s]; ++k) events.push_back({t, s, levels.level(k), +1});
    for (auto k = before[s]; k > after[s]; --k) events.push_back({t, s, levels.level(k - 1), -1});
  }
}

void require_finite_step(const StateVec& x, double t) {
  if (!x.allFinite()) {
    std::ostringstream os;
    os << "integrator: state became non-finite at t=" << t;
    throw EvaluationError(os.str());
  }
}

class ModifiedField {
 public:
  ModifiedField(const RhsModel& model, const ViablePair& pair) : model_(model), pair_(pair) {}

  StateVec operator()(double t, const StateVec& x) {
    const auto q = pair_.p(t, x);
    if (pair_.value(q.t, q.x) > 1e-10) ++outside_;
    return eval_rhs(model_, q.t, q.x);
  }

  std::vector<std::int64_t> keys(double t, const StateVec& x) const {
    const auto q = pair_.p(t, x);
    return branch_keys(model_, q.t, q.x);
  }

  std::size_t outside() const { return outside_; }

 private:
  const RhsModel& model_;
  const ViablePair& pair_;
  std::size_t outside_ = 0;
};

struct StepOutcome {
  StateVec x;
  std::vector<std::int64_t> keys;
  // Every stage point and the end point share the branch keys of the start.
  bool clean = true;
};

StepOutcome take_step(ModifiedField& f, bool rk4, double t, const StateVec& x, double h,
                      const StateVec& k1, const std::vector<std::int64_t>& keys) {
  StepOutcome out;
  auto stage = [&](double ts, const StateVec& xs) {
    if (out.clean && f.keys(ts, xs) != keys) out.clean = false;
    return f(ts, xs);
  };
  if (rk4) {
    const StateVec k2 = stage(t + 0.5 * h, x + 0.5 * h * k1);
    const StateVec k3 = stage(t + 0.5 * h, x + 0.5 * h * k2);
    const StateVec k4 = stage(t + h, x + h * k3);
    out.x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  } else {
    out.x = x + h * k1;
  }
  out.keys = f.keys(t + h, out.x);
  out.clean = out.clean && out.keys == keys;
  return out;
}

}  // namespace

Trajectory integrate_modified(const RhsModel& model, const ViablePair& pair, const StateVec& x0,
                              const IntegratorConfig& config) {
  const double horizon = model.horizon();
  config.validate(horizon);
  require_state(x0, model.dimension(), "integrate_modified: x0");
  if (config.method != Method::rk4_events && config.method != Method::euler) {
    throw UsageError("integrate_modified: method must be rk4_events or euler");
  }
  const bool rk4 = config.method == Method::rk4_events;

  Trajectory traj;
  if (pair.value(0.0, x0) > 0.0) {
    traj.notes.push_back("warning: h(0, x0) > 0, the initial point lies outside the region");
  }
  ModifiedField field(model, pair);
  auto advance = [&](double t0, const StateVec& x0_, double h, const StateVec& k1,
                     const std::vector<std::int64_t>& keys0) {
    return take_step(field, rk4, t0, x0_, h, k1, keys0);
  };

  const std::size_t n_steps = grid_count(horizon, config.step);
  double t = 0.0;
  StateVec x = x0;
  auto keys = field.keys(t, x);
  traj.times.push_back(t);
  traj.states.push_back(x);

  std::size_t k = 1;
  while (k <= n_steps) {
    const double t_next = grid_time(k, n_steps, horizon, config.step);
    const double h = t_next - t;
    const StateVec k1 = field(t, x);
    traj.derivs.push_back(k1);
    StepOutcome full = advance(t, x, h, k1, keys);
    require_finite_step(full.x, t_next);
    if (full.clean) {
      t = t_next;
      x = std::move(full.x);
      traj.times.push_back(t);
      traj.states.push_back(x);
      ++k;
      continue;
    }

    // Longest step whose stages all stay on the current branch.
    double lo = 0.0;
    double hi = h;
    int iterations = 0;
    while (hi - lo > config.event_tol) {
      if (++iterations > config.max_event_bisections) {
        std::ostringstream os;
        os.precision(17);
        os << "integrator: event localization failed in [" << t + lo << ", " << t + hi << "]";
        throw EventLocalizationError(os.str());
      }
      const double mid = 0.5 * (lo + hi);
      if (advance(t, x, mid, k1, keys).clean) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    // Advance on the old branch up to the bracket start, then take the
    // short step across the bracket.
    const double t_cross = hi >= h ? t_next : t + hi;
    if (t + lo > t) {
      x = advance(t, x, lo, k1, keys).x;
      t += lo;
      require_finite_step(x, t);
      traj.times.push_back(t);
      traj.states.push_back(x);
      traj.derivs.push_back(field(t, x));
    }
    const StateVec kc = traj.derivs.back();
    StepOutcome cross = advance(t, x, t_cross - t, kc, keys);
    x = std::move(cross.x);
    t = t_cross;
    require_finite_step(x, t);
    append_events(model, t, keys, cross.keys, traj.events);
    keys = std::move(cross.keys);
    if (t >= t_next) ++k;
    traj.times.push_back(t);
    traj.states.push_back(x);
  }
  traj.derivs.push_back(field(t, x));
  traj.projections_outside_region = field.outside();
  return traj;
}

namespace {

Trajectory euler_loop(const RhsModel& model, const StateVec& x0, const IntegratorConfig& config,
                      bool set_valued) {
  const double horizon = model.horizon();
  config.validate(horizon);
  require_state(x0, model.dimension(), "euler: x0");
  std::mt19937_64 rng(config.seed);
  Trajectory traj;
  if (set_valued) {
    traj.notes.push_back(std::string("selection=") + to_string(config.selection) +
                         ", seed=" + std::to_string(config.seed));
  }
  const std::size_t n_steps = grid_count(horizon, config.step);
  double t = 0.0;
  StateVec x = x0;
  auto keys = branch_keys(model, t, x);
  traj.times.push_back(t);
  traj.states.push_back(x);
  for (std::size_t k = 1; k <= n_steps; ++k) {
    const double t_next = grid_time(k, n_steps, horizon, config.step);
    StateVec dir;
    if (set_valued && surface_distance(model, t, x) < config.event_tol) {
      const auto sample = envelope_samples(model, t, x, config.envelope.schedule.deepest(),
                                           config.envelope.samples, config.envelope.seed);
      if (config.selection == Selection::center) {
        dir = sample.points.front();
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, sample.points.size() - 1);
        dir = sample.points[pick(rng)];
      }
    } else {
      dir = eval_rhs(model, t, x);
    }
    traj.derivs.push_back(dir);
    x = x + (t_next - t) * dir;
    t = t_next;
    require_finite_step(x, t);
    auto keys_new = branch_keys(model, t, x);
    if (keys_new != keys) append_events(model, t, keys, keys_new, traj.events);
    keys = std::move(keys_new);
    traj.times.push_back(t);
    traj.states.push_back(x);
  }
  traj.derivs.push_back(eval_rhs(model, t, x));
  return traj;
}

}  // namespace

Trajectory integrate_euler(const RhsModel& model, const StateVec& x0,
                           const IntegratorConfig& config) {
  return euler_loop(model, x0, config, false);
}

Trajectory integrate_inclusion_euler(const RhsModel& model, const StateVec& x0,
                                     const IntegratorConfig& config) {
  if (config.method != Method::setvalued_euler) {
    throw UsageError("integrate_inclusion_euler: method must be setvalued_euler");
  }
  return euler_loop(model, x0, config, true);
}

namespace {

using XVec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

// Dormand-Prince 5(4) tableau.
constexpr long double kC[7] = {0.0L, 1.0L / 5, 3.0L / 10, 4.0L / 5, 8.0L / 9, 1.0L, 1.0L};
constexpr long double kA[7][6] = {
    {},
    {1.0L / 5},
    {3.0L / 40, 9.0L / 40},
    {44.0L / 45, -56.0L / 15, 32.0L / 9},
    {19372.0L / 6561, -25360.0L / 2187, 64448.0L / 6561, -212.0L / 729},
    {9017.0L / 3168, -355.0L / 33, 46732.0L / 5247, 49.0L / 176, -5103.0L / 18656},
    {35.0L / 384, 0.0L, 500.0L / 1113, 125.0L / 192, -2187.0L / 6784, 11.0L / 84}};
constexpr long double kB5[7] = {35.0L / 384,     0.0L, 500.0L / 1113, 125.0L / 192,
                                -2187.0L / 6784, 11.0L / 84, 0.0L};
constexpr long double kB4[7] = {5179.0L / 57600,    0.0L,         7571.0L / 16695, 393.0L / 640,
                                -92097.0L / 339200, 187.0L / 2100, 1.0L / 40};

}  // namespace

Trajectory reference_solution(const RhsModel& model, const StateVec& x0, double horizon,
                              double rel_tol, const std::vector<double>& output_times) {
  if (model.has_surfaces()) {
    throw UsageError("reference_solution: model declares discontinuity surfaces");
  }
  if (!(rel_tol >= 1e-18)) throw UsageError("reference_solution: rel_tol must be >= 1e-18");
  if (!(horizon > 0.0) || horizon > model.horizon()) {
    throw UsageError("reference_solution: horizon outside the model's time interval");
  }
  require_state(x0, model.dimension(), "reference_solution: x0");
  std::vector<double> outputs = output_times;
  std::sort(outputs.begin(), outputs.end());
  outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
  for (double o : outputs) {
    if (o < 0.0 || o > horizon) throw UsageError("reference_solution: output time out of range");
  }

  auto f = [&](long double t, const XVec& x) -> XVec {
    const double td = std::min(static_cast<double>(t), model.horizon());
    return eval_rhs(model, td, x.cast<double>()).cast<long double>();
  };

  Trajectory traj;
  auto record = [&](long double t, const XVec& x) {
    traj.times.push_back(static_cast<double>(t));
    traj.states.push_back(x.cast<double>());
    traj.derivs.push_back(f(t, x).cast<double>());
  };

  const long double tol = rel_tol;
  long double t = 0.0L;
  XVec x = x0.cast<long double>();
  std::size_t next_out = 0;
  while (next_out < outputs.size() && outputs[next_out] <= 0.0) {
    if (traj.times.empty()) record(t, x);
    ++next_out;
  }
  if (outputs.empty()) record(t, x);

  long double h = std::min<long double>(1e-3L * horizon, horizon);
  const int n = model.dimension();
  std::vector<XVec> k(7, XVec(n));
  std::size_t rejected = 0;
  while (t < horizon) {
    if (!outputs.empty() && next_out >= outputs.size()) break;
    long double target = horizon;
    if (next_out < outputs.size()) target = outputs[next_out];
    bool lands = false;
    const long double h_try = h;
    if (t + h >= target) {
      h = target - t;
      lands = true;
    }
    k[0] = f(t, x);
    for (int s = 1; s < 7; ++s) {
      XVec xs = x;
      for (int j = 0; j < s; ++j) xs += h * kA[s][j] * k[j];
      k[s] = f(t + kC[s] * h, xs);
    }
    XVec x5 = x;
    XVec err = XVec::Zero(n);
    for (int s = 0; s < 7; ++s) {
      x5 += h * kB5[s] * k[s];
      err += h * (kB5[s] - kB4[s]) * k[s];
    }
    long double norm = 0.0L;
    for (int i = 0; i < n; ++i) {
      const long double scale = tol * (1.0L + std::max(std::abs(x[i]), std::abs(x5[i])));
      norm = std::max(norm, std::abs(err[i]) / scale);
    }
    const bool accepted = norm <= 1.0L;
    if (accepted) {
      t = lands ? target : t + h;
      x = x5;
      if (outputs.empty()) {
        record(t, x);
      } else {
        while (next_out < outputs.size() && outputs[next_out] <= static_cast<double>(t)) {
          record(t, x);
          ++next_out;
        }
      }
    } else {
      ++rejected;
    }
    const long double grow =
        norm == 0.0L ? 5.0L : std::clamp(0.9L * std::pow(norm, -0.2L), 0.2L, 5.0L);
    h *= grow;
    // A step shortened only to land on an output does not shrink the next one.
    if (accepted && lands) h = std::max(h, h_try);
    if (h < 1e-14L * horizon) throw EvaluationError("reference_solution: step size underflow");
  }
  traj.notes.push_back("rejected steps: " + std::to_string(rejected));
  return traj;
}

}  // namespace region_ode
