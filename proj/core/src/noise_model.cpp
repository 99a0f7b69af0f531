#include "gem/noise_model.hpp"

#include <cmath>
#include <stdexcept>

namespace gem {

void NoiseModel::validate(int num_qubits) const {
  if (p1 < 0.0 || p1 > 1.0 || p2 < 0.0 || p2 > 1.0) {
    throw std::invalid_argument("depolarizing probabilities must lie in [0,1]");
  }
  if (!readout.empty() && static_cast<int>(readout.size()) != num_qubits) {
    throw std::invalid_argument("readout confusion must cover every qubit");
  }
  for (const auto& m : readout) {
    for (int col = 0; col < 2; ++col) {
      if (m(0, col) < 0.0 || m(1, col) < 0.0) {
        throw std::invalid_argument("confusion entries must be non-negative");
      }
      if (std::abs(m.col(col).sum() - 1.0) > 1e-12) {
        throw std::invalid_argument("confusion columns must sum to 1");
      }
    }
  }
}

NoiseModel NoiseModel::ideal() { return {}; }

NoiseModel NoiseModel::readout_only(int num_qubits, const Eigen::Matrix2d& confusion) {
  NoiseModel noise;
  noise.readout.assign(static_cast<std::size_t>(num_qubits), confusion);
  return noise;
}

}  // namespace gem
