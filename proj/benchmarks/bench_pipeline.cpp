#include <benchmark/benchmark.h>

#include "gem/experiment.hpp"
#include "gem/report.hpp"

namespace {

/// One full randomized experiment batch per method, small enough to iterate.
void RunExperiment(benchmark::State& state) {
  gem::ExperimentConfig cfg;
  cfg.num_qubits = 2;
  cfg.depth_min = 16;
  cfg.depth_max = 20;
  cfg.num_circuits = 2;
  cfg.repetitions = 2;
  cfg.coupling = gem::CouplingMap::linear(2);
  cfg.method = static_cast<gem::Method>(state.range(0));
  cfg.reduced_columns = 2;
  gem::NoiseModel noise;
  noise.p1 = 0.002;
  noise.p2 = 0.02;
  noise.overrotation = 0.02;
  Eigen::Matrix2d confusion;
  confusion << 0.95, 0.08, 0.05, 0.92;
  noise.readout.assign(2, confusion);
  cfg.noise = noise;

  for (auto _ : state) {
    benchmark::DoNotOptimize(gem::run_experiment(cfg));
  }
}
BENCHMARK(RunExperiment)
    ->Arg(static_cast<int>(gem::Method::GEM))
    ->Arg(static_cast<int>(gem::Method::QEM))
    ->Arg(static_cast<int>(gem::Method::Reduced))
    ->Unit(benchmark::kMillisecond);

}  // namespace
