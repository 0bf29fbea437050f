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

#include "region_ode/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "region_ode/sampling.hpp"

namespace region_ode {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::admissible:
      return "admissible";
    case Classification::weak_admissible:
      return "weak_admissible";
    case Classification::viable_only:
      return "viable_only";
  }
  return "?";
}

bool CheckReport::verdict() const {
  return comparison == Comparison::at_most ? worst <= threshold : worst > threshold;
}

namespace {

// Index of the worst value; the lowest index wins ties.
std::size_t worst_index(const std::vector<double>& values, Comparison cmp) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const bool worse = cmp == Comparison::at_most ? values[i] > values[best]
                                                  : values[i] < values[best];
    if (worse) best = i;
  }
  return best;
}

StateVec time_slot_vector(const Gradient& g) {
  StateVec v(g.dx.size() + 1);
  v[0] = g.dt;
  v.tail(g.dx.size()) = g.dx;
  return v;
}

void require_samples(std::size_t m, const char* who) {
  if (m == 0) throw UsageError(std::string(who) + ": sample count must be >= 1");
}

std::string describe(const TimePoint& p) {
  std::ostringstream os;
  os.precision(17);
  os << "t=" << p.t << ", x=" << format_vec(p.x);
  return os.str();
}

// Envelope bounds at the deepest radius only; identical to the deepest level
// of support_interval for the same options.
std::pair<double, double> deepest_bounds(const RhsModel& model, double t, const StateVec& x,
                                         const StateVec& v, const EnvelopeOptions& env) {
  if (!model.has_surfaces() && env.collapse_continuous) {
    const double c = pair_with(v, eval_rhs(model, t, x));
    return {c, c};
  }
  const auto sample =
      envelope_samples(model, t, x, env.schedule.deepest(), env.samples, env.seed);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& z : sample.points) {
    const double c = pair_with(v, z);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  return {lo, hi};
}

}  // namespace

ComplementSample sample_complement(const ViablePair& pair, double horizon, std::size_t m,
                                   std::uint64_t seed) {
  PointSampler sampler(pair.scenario_box(horizon), seed);
  ComplementSample out;
  out.points.reserve(m);
  const std::uint64_t max_tries = 1000 * static_cast<std::uint64_t>(m) + 1000;
  for (std::uint64_t i = 0; out.points.size() < m && i < max_tries; ++i) {
    TimePoint p = sampler.raw(i);
    if (pair.value(p.t, p.x) <= 0.0) continue;
    if (!pair.gradient(p.t, p.x)) {
      ++out.seam_rejections;
      continue;
    }
    out.points.push_back(std::move(p));
  }
  return out;
}

CheckReport check_solution_region(const ViablePair& pair, const RhsModel& model,
                                  const StateVec& x0, const RegionCheckOptions& opts) {
  require_samples(opts.samples, "check_solution_region");
  require_state(x0, model.dimension(), "check_solution_region: x0");
  if (pair.dimension != model.dimension()) {
    throw UsageError("check_solution_region: pair and model dimensions differ");
  }
  CheckReport report;
  report.condition = opts.mode == RegionMode::projected ? "solution_region"
                                                        : "solution_region_modified";
  report.seed = opts.seed;
  report.threshold = opts.tol + kRegionSlack;
  report.comparison = Comparison::at_most;

  const double h0 = pair.value(0.0, x0);
  const bool initial_ok = h0 <= 0.0;
  {
    std::ostringstream os;
    os.precision(17);
    os << "h(0, x0) = " << h0 << (initial_ok ? " (inside)" : " (outside: condition fails)");
    report.notes.push_back(os.str());
  }

  const auto sample = sample_complement(pair, model.horizon(), opts.samples, opts.seed);
  report.samples = sample.points.size();
  report.seam_resamples = sample.seam_rejections;
  report.sampler_flagged = sample.seam_rejections * 100 > opts.samples;
  if (sample.points.empty()) {
    report.notes.push_back("no complement points found in the scenario box");
    report.worst = -std::numeric_limits<double>::infinity();
    report.pass = initial_ok;
    return report;
  }

  const int n = model.dimension();
  const bool continuous = !model.has_surfaces();
  VectorField modified = [&](double s, const StateVec& y) {
    const auto q = pair.p(s, y);
    return eval_rhs(model, q.t, q.x);
  };
  std::vector<double> values(sample.points.size());
  for_each_index(opts.exec, values.size(), [&](std::size_t i) {
    const auto& pt = sample.points[i];
    const StateVec v = time_slot_vector(*pair.gradient(pt.t, pt.x));
    if (opts.mode == RegionMode::projected) {
      const auto q = pair.p(pt.t, pt.x);
      values[i] = support_upper(model, q.t, q.x, v, opts.envelope);
    } else {
      values[i] = support_upper(modified, n, continuous, pt.t, pt.x, v, opts.envelope);
    }
  });
  const auto w = worst_index(values, report.comparison);
  report.worst = values[w];
  report.witness = sample.points[w];
  report.witness_detail = describe(sample.points[w]);
  report.pass = initial_ok && report.verdict();
  return report;
}

namespace {

std::vector<TimePoint> sphere_samples(double horizon, int n, double r, std::size_t m,
                                      std::uint64_t seed) {
  PointSampler sampler(Box::cube(0.0, horizon, n, 1.0), seed);
  std::vector<TimePoint> out;
  out.reserve(m);
  for (std::uint64_t i = 0; out.size() < m; ++i) {
    TimePoint p = sampler.raw(i);
    const double norm = p.x.norm();
    if (norm < 1e-3) continue;
    p.x *= r / norm;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

CheckReport check_ball_boundary(const RhsModel& model, double r, const RegionCheckOptions& opts) {
  require_samples(opts.samples, "check_ball_boundary");
  if (!(r > 0.0)) throw UsageError("check_ball_boundary: radius must be positive");
  CheckReport report;
  report.condition = "ball_boundary";
  report.seed = opts.seed;
  report.threshold = opts.tol + kRegionSlack;
  const auto points = sphere_samples(model.horizon(), model.dimension(), r, opts.samples,
                                     opts.seed);
  report.samples = points.size();
  std::vector<double> values(points.size());
  for_each_index(opts.exec, points.size(), [&](std::size_t i) {
    values[i] = support_upper(model, points[i].t, points[i].x, points[i].x, opts.envelope);
  });
  const auto w = worst_index(values, report.comparison);
  report.worst = values[w];
  report.witness = points[w];
  report.witness_detail = describe(points[w]);
  report.pass = report.verdict();
  return report;
}

CheckReport check_lambda_condition(const ScalarField& h, const RhsModel& model, double r,
                                   const std::vector<double>& lambda_grid,
                                   const RegionCheckOptions& opts) {
  require_samples(opts.samples, "check_lambda_condition");
  if (lambda_grid.empty()) throw UsageError("check_lambda_condition: empty lambda grid");
  for (double l : lambda_grid) {
    if (!std::isfinite(l) || l < 1.0) {
      throw UsageError("check_lambda_condition: every lambda must be finite and >= 1");
    }
  }
  if (*std::min_element(lambda_grid.begin(), lambda_grid.end()) != 1.0) {
    throw UsageError("check_lambda_condition: lambda grid must contain 1 as its minimum");
  }
  const int n = model.dimension();

  // h^{-1}((-inf, 0]) must be the closed ball.
  PointSampler probes(Box::cube(0.0, model.horizon(), n, 3.0 * r), mix_seed(opts.seed, 0x1A));
  const std::size_t probe_count = std::min<std::size_t>(opts.samples, 4000);
  for (std::uint64_t i = 0; i < probe_count; ++i) {
    const TimePoint p = probes.raw(i);
    const double norm = p.x.norm();
    if (std::abs(norm - r) < 1e-9 * r) continue;
    const double hv = h.value(p.t, p.x);
    const bool inside = norm <= r;
    if (inside != (hv <= 0.0)) {
      std::ostringstream os;
      os.precision(17);
      os << "check_lambda_condition: h = " << hv << " at " << describe(p) << " but |x| = " << norm
         << (inside ? " is inside" : " is outside") << " the ball of radius " << r;
      throw ConstructionError(os.str());
    }
  }

  CheckReport report;
  report.condition = "lambda_condition";
  report.seed = opts.seed;
  report.threshold = opts.tol + kRegionSlack;
  const auto points = sphere_samples(model.horizon(), n, r, opts.samples, opts.seed);
  report.samples = points.size();
  std::vector<double> values(points.size());
  std::vector<double> worst_lambda(points.size());
  for_each_index(opts.exec, points.size(), [&](std::size_t i) {
    const auto& p = points[i];
    double best = -std::numeric_limits<double>::infinity();
    for (double l : lambda_grid) {
      const auto g = h.gradient(p.t, StateVec(l * p.x));
      if (!g) throw UsageError("check_lambda_condition: h has no gradient at a probe point");
      const double u = support_upper(model, p.t, p.x, g->dx, opts.envelope);
      if (u > best) {
        best = u;
        worst_lambda[i] = l;
      }
    }
    values[i] = best;
  });
  const auto w = worst_index(values, report.comparison);
  report.worst = values[w];
  report.witness = points[w];
  report.witness_detail = describe(points[w]) + ", lambda=" + std::to_string(worst_lambda[w]);
  report.pass = report.verdict();
  return report;
}

std::optional<TimePoint> locate_level_point(const SurfaceSpec& surface, double level,
                                            const ViablePair& pair, double horizon,
                                            const std::vector<TimePoint>& region_pool,
                                            std::uint64_t seed,
                                            const TransversalityOptions& opts) {
  if (region_pool.empty()) return std::nullopt;
  const Box box = pair.scenario_box(horizon);
  const int n = box.dimension();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, region_pool.size() - 1);
  std::normal_distribution<double> normal(0.0, 1.0);

  auto valid = [&](const TimePoint& z) {
    return z.t >= 0.0 && z.t <= horizon && box.contains(z) && pair.contains(z.t, z.x);
  };
  auto gap = [&](const TimePoint& z) { return surface.tau(z.t, z.x) - level; };

  for (int attempt = 0; attempt < opts.ray_attempts; ++attempt) {
    const TimePoint& start = region_pool[pick(rng)];
    double dt = normal(rng);
    StateVec dx(n);
    for (int i = 0; i < n; ++i) dx[i] = normal(rng);
    const double norm = std::sqrt(dt * dt + dx.squaredNorm());
    if (norm == 0.0) continue;
    dt /= norm;
    dx /= norm;
    auto at = [&](double s) { return TimePoint{start.t + s * dt, StateVec(start.x + s * dx)}; };

    // Largest s keeping start + s * d inside the box (both signs of d).
    auto reach = [&](double sign) {
      double s_max = std::numeric_limits<double>::infinity();
      auto clip = [&](double pos, double dir, double lo, double hi) {
        dir *= sign;
        if (dir > 0.0) s_max = std::min(s_max, (hi - pos) / dir);
        if (dir < 0.0) s_max = std::min(s_max, (lo - pos) / dir);
      };
      clip(start.t, dt, box.t_lo, box.t_hi);
      for (int i = 0; i < n; ++i) clip(start.x[i], dx[i], box.lo[i], box.hi[i]);
      return std::max(0.0, s_max);
    };

    for (double sign : {1.0, -1.0}) {
      const double s_end = reach(sign);
      constexpr int kScan = 32;
      double s_prev = 0.0;
      double g_prev = gap(start);
      if (g_prev == 0.0 && valid(start)) return start;
      for (int k = 1; k <= kScan; ++k) {
        const double s = sign * s_end * k / kScan;
        const double g = gap(at(s));
        if (g == 0.0) {
          auto z = at(s);
          if (valid(z)) return z;
        }
        if ((g < 0.0) != (g_prev < 0.0)) {
          double lo = s_prev, hi = s;
          double g_lo = g_prev;
          for (int it = 0; it < opts.bisection_iterations; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double g_mid = gap(at(mid));
            if ((g_mid < 0.0) == (g_lo < 0.0)) {
              lo = mid;
              g_lo = g_mid;
            } else {
              hi = mid;
            }
          }
          auto z = at(0.5 * (lo + hi));
          if (valid(z)) return z;
          break;
        }
        s_prev = s;
        g_prev = g;
      }
    }
  }

  // Level sets that are touched but never crossed (e.g. the minimum of tau)
  // have no sign change; fall back to Gauss-Newton projection onto tau = c.
  for (int attempt = 0; attempt < 4; ++attempt) {
    TimePoint z = region_pool[pick(rng)];
    bool converged = false;
    for (int it = 0; it < opts.projection_iterations; ++it) {
      const double g = gap(z);
      if (std::abs(g) <= 1e-13 * (1.0 + std::abs(level))) {
        converged = true;
        break;
      }
      const Gradient grad = surface.gradient(z.t, z.x);
      const double n2 = grad.dt * grad.dt + grad.dx.squaredNorm();
      if (!(n2 > 1e-300)) break;
      z.t -= g * grad.dt / n2;
      z.x -= (g / n2) * grad.dx;
    }
    if (converged && valid(z)) return z;
  }
  return std::nullopt;
}

CheckReport check_transversality(const RhsModel& model, const ViablePair& pair, double horizon,
                                 const TransversalityOptions& opts) {
  if (!model.has_surfaces()) throw UsageError("check_transversality: model declares no surfaces");
  require_samples(opts.samples_per_level, "check_transversality");
  CheckReport report;
  report.condition = "transversality";
  report.seed = opts.seed;
  report.comparison = Comparison::greater_than;
  report.threshold = opts.margin;

  PointSampler pool_sampler(pair.scenario_box(horizon), mix_seed(opts.seed, 0x7005),
                            [&pair](const TimePoint& p) { return pair.contains(p.t, p.x); });
  const auto pool = pool_sampler.draw(std::max<std::size_t>(4 * opts.samples_per_level, 256));

  struct LevelRef {
    std::size_t surface;
    std::int64_t index;
  };
  std::vector<LevelRef> levels;
  for (std::size_t s = 0; s < model.surfaces().size(); ++s) {
    const auto count = model.surfaces()[s].levels.size();
    for (std::int64_t k = 0; k < count; ++k) levels.push_back({s, k});
  }

  struct LevelResult {
    std::vector<double> scores;
    std::vector<TimePoint> points;
  };
  std::vector<LevelResult> results(levels.size());
  for_each_index(opts.exec, levels.size(), [&](std::size_t li) {
    const auto& ref = levels[li];
    const auto& surface = model.surfaces()[ref.surface];
    const double c = surface.levels.level(ref.index);
    auto& res = results[li];
    std::size_t misses = 0;
    for (std::size_t i = 0; i < opts.samples_per_level; ++i) {
      const auto seed = mix_seed(mix_seed(opts.seed, ref.surface),
                                 mix_seed(static_cast<std::uint64_t>(ref.index), i));
      auto z = locate_level_point(surface, c, pair, horizon, pool, seed, opts);
      if (!z) {
        // A level with no hit among its first few tries is treated as
        // outside the region.
        if (++misses >= 4 && res.points.empty()) break;
        continue;
      }
      const Gradient g = surface.gradient(z->t, z->x);
      const auto [lo, hi] = deepest_bounds(model, z->t, z->x, time_slot_vector(g), opts.envelope);
      res.scores.push_back(std::max(lo, -hi));
      res.points.push_back(std::move(*z));
    }
  });

  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t li = 0; li < levels.size(); ++li) {
    const auto& res = results[li];
    if (res.points.empty()) {
      ++report.levels_unreachable;
      continue;
    }
    ++report.levels_checked;
    report.samples += res.points.size();
    for (std::size_t i = 0; i < res.scores.size(); ++i) {
      if (res.scores[i] < worst) {
        worst = res.scores[i];
        report.witness = res.points[i];
        const auto& surface = model.surfaces()[levels[li].surface];
        std::ostringstream os;
        os.precision(17);
        os << describe(res.points[i]) << ", surface=" << surface.name
           << ", level=" << surface.levels.level(levels[li].index);
        report.witness_detail = os.str();
      }
    }
  }
  if (report.levels_checked == 0) {
    report.notes.push_back("no level of any surface meets the region");
    report.worst = std::numeric_limits<double>::infinity();
  } else {
    report.worst = worst;
  }
  {
    std::ostringstream os;
    os << report.levels_unreachable << " of " << levels.size()
       << " levels have no point inside the region";
    report.notes.push_back(os.str());
  }
  report.pass = report.verdict();
  return report;
}

CheckReport classify_pair(const ViablePair& pair, const ClassifyOptions& opts) {
  require_samples(opts.samples, "classify_pair");
  CheckReport report;
  report.condition = "classify";
  report.seed = opts.seed;
  report.comparison = Comparison::at_most;
  report.threshold = opts.zero_tol;

  const auto sample = sample_complement(pair, opts.horizon, opts.samples, opts.seed);
  report.samples = sample.points.size();
  report.seam_resamples = sample.seam_rejections;
  report.sampler_flagged = sample.seam_rejections * 100 > opts.samples;
  if (sample.points.empty()) throw UsageError("classify_pair: no complement points sampled");

  std::vector<double> s(sample.points.size());
  for_each_index(opts.exec, s.size(), [&](std::size_t i) {
    const auto& pt = sample.points[i];
    const auto g = *pair.gradient(pt.t, pt.x);
    s[i] = g.dx.dot(pair.p(pt.t, pt.x).x - pt.x);
  });
  const auto w = worst_index(s, Comparison::at_most);
  report.worst = s[w];
  report.witness = sample.points[w];
  report.witness_detail = describe(sample.points[w]);
  if (report.worst < -opts.zero_tol) {
    report.classification = Classification::admissible;
  } else if (report.worst <= opts.zero_tol) {
    report.classification = Classification::weak_admissible;
  } else {
    report.classification = Classification::viable_only;
  }

  // Identity on R, checked on an independent sample of R.
  PointSampler inside(pair.scenario_box(opts.horizon), mix_seed(opts.seed, 0x1D),
                      [&pair](const TimePoint& p) { return pair.contains(p.t, p.x); });
  const auto region_points = inside.draw(std::min<std::size_t>(opts.samples, 10000));
  std::size_t identity_failures = 0;
  for (const auto& p : region_points) {
    const auto q = pair.p(p.t, p.x);
    if (q.t != p.t || q.x != p.x) ++identity_failures;
  }
  std::ostringstream os;
  os << "identity on region: " << identity_failures << " failures over " << region_points.size()
     << " points";
  report.notes.push_back(os.str());
  report.pass = identity_failures == 0;
  return report;
}

std::vector<double> uniform_grid(double horizon, std::size_t count) {
  std::vector<double> g(count);
  for (std::size_t i = 0; i < count; ++i) {
    g[i] = count == 1 ? 0.0 : horizon * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return g;
}

namespace {

CheckReport bound_solution_check(const RhsModel& model, const PiecewiseFn& fn, double x0,
                                 const std::vector<double>& grid, double tol, bool lower) {
  if (model.dimension() != 1) throw UsageError("lower/upper solutions need a scalar model");
  CheckReport report;
  report.condition = lower ? "lower_solution" : "upper_solution";
  report.threshold = tol;
  const double initial = lower ? fn(0.0) - x0 : x0 - fn(0.0);
  report.worst = initial;
  report.witness = TimePoint{0.0, StateVec::Constant(1, fn(0.0))};
  report.witness_detail = "initial condition";
  for (double t : grid) {
    const auto d = fn.derivative(t);
    if (!d) continue;
    ++report.samples;
    const double value = fn(t);
    const double f = eval_rhs(model, t, StateVec::Constant(1, value))[0];
    const double margin = lower ? *d - f : f - *d;
    if (margin > report.worst) {
      report.worst = margin;
      report.witness = TimePoint{t, StateVec::Constant(1, value)};
      std::ostringstream os;
      os.precision(17);
      os << "t=" << t << ", derivative=" << *d << ", f=" << f;
      report.witness_detail = os.str();
    }
  }
  report.pass = report.verdict();
  return report;
}

}  // namespace

CheckReport check_lower_solution(const RhsModel& model, const PiecewiseFn& alpha, double x0,
                                 const std::vector<double>& grid, double tol) {
  return bound_solution_check(model, alpha, x0, grid, tol, true);
}

CheckReport check_upper_solution(const RhsModel& model, const PiecewiseFn& beta, double x0,
                                 const std::vector<double>& grid, double tol) {
  return bound_solution_check(model, beta, x0, grid, tol, false);
}

}  // namespace region_ode
