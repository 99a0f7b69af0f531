#include "gem/calibration.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "gem/basis.hpp"
#include "gem/simulator.hpp"

namespace gem {

namespace {

const std::array<std::string, 5> kKindNames = {"QEM", "GEM_half1", "GEM_half2", "GEM_combined",
                                               "Reduced"};

}  // namespace

const std::string& calibration_kind_name(CalibrationKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

CalibrationKind calibration_kind_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) {
      return static_cast<CalibrationKind>(i);
    }
  }
  throw std::invalid_argument("unknown calibration kind: " + name);
}

CalibrationMatrix::CalibrationMatrix(int num_qubits, CalibrationKind kind, Eigen::MatrixXd entries)
    : num_qubits(num_qubits), kind(kind), entries(std::move(entries)) {
  const auto dim = static_cast<Eigen::Index>(dimension(num_qubits));
  if (this->entries.rows() != dim || this->entries.cols() != dim) {
    throw std::invalid_argument("calibration matrix must be 2^N x 2^N");
  }
}

void CalibrationMatrix::validate(double col_tol) const {
  for (Eigen::Index j = 0; j < entries.cols(); ++j) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < entries.rows(); ++i) {
      if (entries(i, j) < -1e-12 || entries(i, j) > 1.0 + 1e-12) {
        throw std::invalid_argument("calibration entry outside [0,1]");
      }
      sum += entries(i, j);
    }
    if (std::abs(sum - 1.0) > col_tol) {
      throw std::invalid_argument("calibration column " + std::to_string(j) +
                                  " does not sum to 1");
    }
  }
}

CalibrationMatrix CalibrationMatrix::identity(int num_qubits, CalibrationKind kind) {
  const auto dim = static_cast<Eigen::Index>(dimension(num_qubits));
  return {num_qubits, kind, Eigen::MatrixXd::Identity(dim, dim)};
}

std::vector<Circuit> qem_calibration_circuits(int num_qubits) {
  if (num_qubits < 1) {
    throw std::invalid_argument("calibration needs at least one qubit");
  }
  std::vector<Circuit> circuits;
  circuits.reserve(dimension(num_qubits));
  for (std::size_t k = 0; k < dimension(num_qubits); ++k) {
    circuits.push_back(
        with_measurements(prepare_state(num_qubits, basis_bits(k, num_qubits))));
  }
  return circuits;
}

std::pair<std::vector<Circuit>, std::vector<Circuit>> gem_calibration_circuits(const Circuit& c) {
  const Circuit bare = strip_measurements(c);
  const auto [first_half, second_half] = split_halves(bare);

  auto make_list = [&](const Circuit& half) {
    const Circuit identity_block = concat(half, inverted(half));
    std::vector<Circuit> list;
    list.reserve(dimension(bare.num_qubits));
    for (std::size_t k = 0; k < dimension(bare.num_qubits); ++k) {
      Circuit prep = prepare_state(bare.num_qubits, basis_bits(k, bare.num_qubits));
      list.push_back(with_measurements(concat(std::move(prep), identity_block)));
    }
    return list;
  };

  return {make_list(first_half), make_list(second_half)};
}

CalibrationMatrix build_matrix(const std::vector<Distribution>& columns, CalibrationKind kind) {
  if (columns.empty()) {
    throw std::invalid_argument("no calibration columns given");
  }
  const int n = columns.front().num_qubits;
  const auto dim = static_cast<Eigen::Index>(dimension(n));
  if (columns.size() != dimension(n)) {
    throw std::invalid_argument("need exactly 2^N calibration columns");
  }
  Eigen::MatrixXd entries(dim, dim);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].num_qubits != n) {
      throw std::invalid_argument("calibration columns have mismatched widths");
    }
    entries.col(static_cast<Eigen::Index>(j)) = columns[j].probs;
  }
  return {n, kind, std::move(entries)};
}

CalibrationMatrix combine(const CalibrationMatrix& m1, const CalibrationMatrix& m2) {
  if (m1.num_qubits != m2.num_qubits) {
    throw std::invalid_argument("cannot combine matrices of different sizes");
  }
  return {m1.num_qubits, CalibrationKind::GemCombined, (m1.entries + m2.entries) / 2.0};
}

CalibrationMatrix reduced_matrix(const std::map<std::size_t, Distribution>& columns,
                                 int num_qubits) {
  const auto dim = static_cast<Eigen::Index>(dimension(num_qubits));
  Eigen::MatrixXd entries = Eigen::MatrixXd::Identity(dim, dim);
  for (const auto& [state, column] : columns) {
    if (state >= dimension(num_qubits)) {
      throw std::invalid_argument("reduced column index out of range");
    }
    if (column.num_qubits != num_qubits) {
      throw std::invalid_argument("reduced column has mismatched width");
    }
    entries.col(static_cast<Eigen::Index>(state)) = column.probs;
  }
  return {num_qubits, CalibrationKind::Reduced, std::move(entries)};
}

std::vector<Circuit> direct_calibration_circuits(const Circuit& c) {
  const Circuit bare = strip_measurements(c);
  std::vector<Circuit> circuits;
  circuits.reserve(dimension(bare.num_qubits));
  for (std::size_t k = 0; k < dimension(bare.num_qubits); ++k) {
    Circuit prep = prepare_state(bare.num_qubits, basis_bits(k, bare.num_qubits));
    circuits.push_back(with_measurements(concat(std::move(prep), bare)));
  }
  return circuits;
}

bool DirectPairing::linearly_independent(double tol) const {
  if (min_peak_probability < 1.0 - tol) {
    return false;
  }
  std::vector<std::size_t> sorted = output_state;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != k) {
      return false;
    }
  }
  return true;
}

DirectPairing direct_output_pairing(const Circuit& c) {
  const Circuit bare = strip_measurements(c);
  DirectPairing pairing;
  pairing.min_peak_probability = 1.0;
  for (std::size_t k = 0; k < dimension(bare.num_qubits); ++k) {
    Circuit prep = prepare_state(bare.num_qubits, basis_bits(k, bare.num_qubits));
    const Distribution out = exact_probabilities(concat(std::move(prep), bare));
    Eigen::Index peak = 0;
    out.probs.maxCoeff(&peak);
    pairing.output_state.push_back(static_cast<std::size_t>(peak));
    pairing.min_peak_probability = std::min(pairing.min_peak_probability, out.probs[peak]);
  }
  return pairing;
}

}  // namespace gem
