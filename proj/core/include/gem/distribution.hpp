#pragma once

#include <cstddef>

#include <Eigen/Core>

namespace gem {

/// Relative frequencies over the 2^N computational basis states, indexed with
/// qubit 0 as the most significant bit.
struct Distribution {
  int num_qubits = 0;
  Eigen::VectorXd probs;

  Distribution() = default;
  Distribution(int num_qubits, Eigen::VectorXd probs);

  std::size_t size() const { return static_cast<std::size_t>(probs.size()); }

  /// Entries within [0,1] (up to `entry_tol` slack) and summing to 1 within
  /// `sum_tol`. Throws std::invalid_argument otherwise.
  void validate(double sum_tol = 1e-9, double entry_tol = 1e-12) const;

  static Distribution delta(int num_qubits, std::size_t basis_state);
  static Distribution uniform(int num_qubits);
};

}  // namespace gem
