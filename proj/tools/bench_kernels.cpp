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

// Serial reference path against the OpenMP path for the sampling kernels.
// Both produce identical results; only wall time differs.

#include <benchmark/benchmark.h>

#include "region_ode/checks.hpp"
#include "region_ode/models.hpp"

namespace {

using region_ode::Exec;

constexpr double kAlpha = 10.0862;

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_SolutionRegion(benchmark::State& state) {
  const auto model = region_ode::models::ball_example(kAlpha);
  const auto pair = region_ode::ball_pair(1.0);
  region_ode::RegionCheckOptions opts;
  opts.samples = 2000;
  opts.exec = exec_of(state);
  const region_ode::StateVec x0 = region_ode::StateVec::Zero(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(region_ode::check_solution_region(pair, model, x0, opts).worst);
  }
  label(state);
}

void BM_EmpiricalBound(benchmark::State& state) {
  const auto model = region_ode::models::ball_example(kAlpha);
  const region_ode::Domain domain{region_ode::Box::cube(0.0, 1.0, 2, 1.0), {}};
  const region_ode::PointSampler sampler(domain.box, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        region_ode::empirical_bound(model, sampler, 200000, domain, {}, exec_of(state)));
  }
  label(state);
}

void BM_Transversality(benchmark::State& state) {
  const auto model = region_ode::models::ball_example(kAlpha);
  const auto pair = region_ode::ball_pair(1.0);
  region_ode::TransversalityOptions opts;
  opts.samples_per_level = 16;
  opts.exec = exec_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(region_ode::check_transversality(model, pair, 1.0, opts).worst);
  }
  label(state);
}

void BM_Classify(benchmark::State& state) {
  const auto pair = region_ode::example_band45_pair();
  region_ode::ClassifyOptions opts;
  opts.samples = 20000;
  opts.exec = exec_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(region_ode::classify_pair(pair, opts).worst);
  }
  label(state);
}

BENCHMARK(BM_SolutionRegion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EmpiricalBound)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Transversality)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Classify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
