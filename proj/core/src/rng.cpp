#include "gem/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gem {

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = splitmix64(base);
  for (std::uint64_t label : path) {
    s = splitmix64(s ^ splitmix64(label + 0x9e3779b97f4a7c15ULL));
  }
  return s;
}

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("uniform_index needs a nonempty range");
  }
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r = next_u64();
  while (r >= limit) {
    r = next_u64();
  }
  return static_cast<std::size_t>(r % n);
}

Eigen::VectorXd multinomial_counts(const Eigen::VectorXd& probs, long shots, Rng& rng) {
  if (shots < 1) {
    throw std::invalid_argument("shots must be >= 1");
  }
  const Eigen::Index n = probs.size();
  std::vector<double> cdf(static_cast<std::size_t>(n));
  double acc = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    acc += probs[k];
    cdf[static_cast<std::size_t>(k)] = acc;
  }
  cdf.back() = std::max(cdf.back(), 1.0);  // guard against rounding below 1

  Eigen::VectorXd counts = Eigen::VectorXd::Zero(n);
  for (long s = 0; s < shots; ++s) {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto bin = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()),
                                           static_cast<std::size_t>(n - 1));
    counts[static_cast<Eigen::Index>(bin)] += 1.0;
  }
  return counts;
}

Eigen::VectorXd random_simplex_point(Eigen::Index dim, Rng& rng) {
  Eigen::VectorXd x(dim);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    x[i] = -std::log(1.0 - rng.uniform());
    sum += x[i];
  }
  if (sum <= 0.0) {
    return Eigen::VectorXd::Constant(dim, 1.0 / static_cast<double>(dim));
  }
  return x / sum;
}

}  // namespace gem
