#include "gem/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gem/basis.hpp"

namespace gem {

Distribution::Distribution(int num_qubits, Eigen::VectorXd probs)
    : num_qubits(num_qubits), probs(std::move(probs)) {
  if (num_qubits < 0 || this->probs.size() != static_cast<Eigen::Index>(dimension(num_qubits))) {
    throw std::invalid_argument("distribution length must be 2^N");
  }
}

void Distribution::validate(double sum_tol, double entry_tol) const {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    if (probs[i] < -entry_tol || probs[i] > 1.0 + entry_tol) {
      throw std::invalid_argument("distribution entry outside [0,1]: " +
                                  std::to_string(probs[i]));
    }
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > sum_tol) {
    throw std::invalid_argument("distribution is not normalized, sum = " + std::to_string(sum));
  }
}

Distribution Distribution::delta(int num_qubits, std::size_t basis_state) {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dimension(num_qubits)));
  p[static_cast<Eigen::Index>(basis_state)] = 1.0;
  return {num_qubits, std::move(p)};
}

Distribution Distribution::uniform(int num_qubits) {
  const auto dim = static_cast<Eigen::Index>(dimension(num_qubits));
  return {num_qubits, Eigen::VectorXd::Constant(dim, 1.0 / static_cast<double>(dim))};
}

}  // namespace gem
