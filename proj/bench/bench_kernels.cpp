// OpenMP kernels against their serial references.

#include <vector>

#include <benchmark/benchmark.h>

#include "aptsim/dynamics.hpp"
#include "aptsim/experiments.hpp"
#include "aptsim/tomography.hpp"

namespace {

using namespace aptsim;

EvolutionSpec long_trajectory() {
  EvolutionSpec spec;
  spec.qubit1 = AptParams::apt(1.01);
  spec.qubit2 = AptParams::apt(1.03);
  spec.t_max = 70.0;
  return spec;
}

std::vector<EvolutionSpec> sweep_specs() {
  std::vector<EvolutionSpec> specs;
  for (const auto& c : figure_definition("4a").curves) {
    EvolutionSpec s;
    s.qubit1 = c.qubit1;
    s.qubit2 = c.qubit2;
    s.t_max = 10.0;
    specs.push_back(s);
  }
  return specs;
}

void BM_RunSerial(benchmark::State& state) {
  const auto spec = long_trajectory();
  for (auto _ : state) benchmark::DoNotOptimize(reference::run(spec));
}

void BM_RunParallel(benchmark::State& state) {
  const auto spec = long_trajectory();
  for (auto _ : state) benchmark::DoNotOptimize(run(spec));
}

void BM_BatchSerial(benchmark::State& state) {
  const auto specs = sweep_specs();
  for (auto _ : state) benchmark::DoNotOptimize(reference::run_batch(specs));
}

void BM_BatchParallel(benchmark::State& state) {
  const auto specs = sweep_specs();
  for (auto _ : state) benchmark::DoNotOptimize(run_batch(specs));
}

DensityMatrix tomography_truth() {
  return evolve_state(bell_state(), AptParams::apt(1.2), AptParams::apt(1.2), 1.0);
}

void BM_TrialsSerial(benchmark::State& state) {
  const auto truth = tomography_truth();
  for (auto _ : state) benchmark::DoNotOptimize(reference::reconstruct_trials(truth, 10000, 1, 20));
}

void BM_TrialsParallel(benchmark::State& state) {
  const auto truth = tomography_truth();
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_trials(truth, 10000, 1, 20));
}

}  // namespace

BENCHMARK(BM_RunSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
