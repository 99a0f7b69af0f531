#pragma once

#include <vector>

#include <Eigen/Core>

namespace gem {

/// Synthetic device-error description: depolarizing noise per gate, a coherent
/// over-rotation added to the rotation angle of every parameterized gate, and
/// per-qubit readout confusion applied at measurement.
///
/// Readout matrices are column-stochastic: column j is the distribution of the
/// reported bit given true bit j.
struct NoiseModel {
  double p1 = 0.0;            // depolarizing probability per 1-qubit gate
  double p2 = 0.0;            // depolarizing probability per 2-qubit gate
  double overrotation = 0.0;  // radians added to each parameterized rotation
  std::vector<Eigen::Matrix2d> readout;

  void validate(int num_qubits) const;

  bool has_readout() const { return !readout.empty(); }

  static NoiseModel ideal();
  static NoiseModel readout_only(int num_qubits, const Eigen::Matrix2d& confusion);
};

}  // namespace gem
