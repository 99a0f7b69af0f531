#include <benchmark/benchmark.h>

#include "gem/experiment.hpp"
#include "gem/simulator.hpp"
#include "gem/transpile.hpp"

namespace {

gem::Circuit sample_circuit(int num_qubits, int target_depth) {
  gem::ExperimentConfig cfg;
  cfg.num_qubits = num_qubits;
  cfg.depth_min = cfg.depth_max = target_depth;
  cfg.coupling = gem::CouplingMap::linear(num_qubits);
  gem::Rng rng(12345);
  return gem::transpile(gem::random_circuit(cfg, rng));
}

gem::NoiseModel bench_noise(int num_qubits) {
  gem::NoiseModel noise;
  noise.p1 = 0.002;
  noise.p2 = 0.02;
  noise.overrotation = 0.02;
  Eigen::Matrix2d confusion;
  confusion << 0.95, 0.08, 0.05, 0.92;
  noise.readout.assign(static_cast<std::size_t>(num_qubits), confusion);
  return noise;
}

void ExactProbabilities(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gem::Circuit c = sample_circuit(n, 40);
  const gem::NoiseModel noise = bench_noise(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gem::exact_probabilities(c, noise));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(c.gates.size()));
}
BENCHMARK(ExactProbabilities)->DenseRange(1, 6)->Unit(benchmark::kMicrosecond);

void SampleCounts(benchmark::State& state) {
  const gem::Circuit c = sample_circuit(2, 40);
  const long shots = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gem::sample_counts(c, shots, std::nullopt, 7));
  }
  state.SetItemsProcessed(state.iterations() * shots);
}
BENCHMARK(SampleCounts)->Arg(8192)->Arg(819200)->Unit(benchmark::kMicrosecond);

}  // namespace
