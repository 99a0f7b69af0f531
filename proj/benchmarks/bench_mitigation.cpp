#include <benchmark/benchmark.h>

#include "gem/mitigation.hpp"
#include "gem/rng.hpp"

namespace {

void Mitigate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto dim = Eigen::Index{1} << n;
  gem::Rng rng(99);
  Eigen::MatrixXd entries(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    entries.col(j) = gem::random_simplex_point(dim, rng);
  }
  const gem::CalibrationMatrix m(n, gem::CalibrationKind::QEM, entries);
  const gem::Distribution v(n, gem::random_simplex_point(dim, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gem::mitigate(m, v));
  }
}
BENCHMARK(Mitigate)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void SimplexProjection(benchmark::State& state) {
  gem::Rng rng(5);
  Eigen::VectorXd y(state.range(0));
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    y[i] = rng.uniform(-1.0, 1.0);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(gem::project_to_simplex(y));
  }
}
BENCHMARK(SimplexProjection)->Arg(4)->Arg(16)->Arg(256);

}  // namespace
