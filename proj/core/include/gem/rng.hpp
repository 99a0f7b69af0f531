#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include <Eigen/Core>

namespace gem {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stable seed derivation for independent streams: hashes the base seed with a
/// path of stream labels (circuit index, repetition, role, ...).
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path);

/// mt19937_64 with hand-rolled uniform conversions, so draws depend only on
/// the seed and never on library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n), unbiased via rejection.
  std::size_t uniform_index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// Multinomial counts from `shots` independent draws against the inclusive
/// CDF of `probs`.
Eigen::VectorXd multinomial_counts(const Eigen::VectorXd& probs, long shots, Rng& rng);

/// Uniform point on the probability simplex (normalized exponential spacings).
Eigen::VectorXd random_simplex_point(Eigen::Index dim, Rng& rng);

}  // namespace gem
