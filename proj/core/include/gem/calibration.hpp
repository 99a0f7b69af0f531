#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gem/circuit.hpp"
#include "gem/distribution.hpp"

namespace gem {

enum class CalibrationKind { QEM, GemHalf1, GemHalf2, GemCombined, Reduced };

const std::string& calibration_kind_name(CalibrationKind kind);
CalibrationKind calibration_kind_from_name(const std::string& name);

/// Column-stochastic 2^N x 2^N matrix; column j is the measured output
/// distribution of the calibration circuit whose ideal output is basis
/// state j. On a perfect device it is the identity.
struct CalibrationMatrix {
  int num_qubits = 0;
  CalibrationKind kind = CalibrationKind::QEM;
  Eigen::MatrixXd entries;

  CalibrationMatrix() = default;
  CalibrationMatrix(int num_qubits, CalibrationKind kind, Eigen::MatrixXd entries);

  Eigen::Index dim() const { return entries.rows(); }

  /// Entries in [0,1] and columns summing to 1 within `col_tol`.
  void validate(double col_tol = 1e-9) const;

  static CalibrationMatrix identity(int num_qubits, CalibrationKind kind);
};

/// One bare state-preparation circuit per basis state, each terminated by
/// measurement, in ascending basis-state order. 2^N circuits.
std::vector<Circuit> qem_calibration_circuits(int num_qubits);

/// Identity calibration circuits built from the two halves of `c`: for each
/// basis state, preparation + half + reverse-ordered inverses + measurement.
/// Measurements in `c` are stripped first. 2^(N+1) circuits across the two
/// lists.
std::pair<std::vector<Circuit>, std::vector<Circuit>> gem_calibration_circuits(const Circuit& c);

/// Columns-to-matrix assembly: columns[j] is the measured distribution of the
/// calibration circuit prepared in basis state j.
CalibrationMatrix build_matrix(const std::vector<Distribution>& columns, CalibrationKind kind);

/// Entrywise average (M1 + M2) / 2.
CalibrationMatrix combine(const CalibrationMatrix& m1, const CalibrationMatrix& m2);

/// Partial matrix: provided columns copied in, missing columns identity-filled.
CalibrationMatrix reduced_matrix(const std::map<std::size_t, Distribution>& columns,
                                 int num_qubits);

/// Calibration circuits for the direct strategy: preparation + the full
/// circuit + measurement, per basis state. The caller pairs the measured data
/// of circuit k with the ideal output state of `c` on input k.
std::vector<Circuit> direct_calibration_circuits(const Circuit& c);

/// Ideal input-to-output pairing for the direct strategy, by noiseless
/// simulation: output_state[k] is the most likely output on input k and
/// min_peak_probability the smallest such peak across inputs. The strategy is
/// sound when the pairing is a permutation with peaks at 1.
struct DirectPairing {
  std::vector<std::size_t> output_state;
  double min_peak_probability = 0.0;

  /// Peaked outputs (within tol of certainty) that hit every basis state.
  bool linearly_independent(double tol = 1e-6) const;
};

DirectPairing direct_output_pairing(const Circuit& c);

}  // namespace gem
