#pragma once

#include <cstddef>
#include <string>

namespace gem {

// One fixed bit-order convention everywhere: character i of a state label is
// the bit of qubit i, and qubit 0 is the most significant bit of a basis
// index. "101" on three qubits is index 5.

std::size_t basis_index(const std::string& bits);

std::string basis_bits(std::size_t index, int num_qubits);

inline std::size_t qubit_mask(int qubit, int num_qubits) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

inline int qubit_bit(std::size_t index, int qubit, int num_qubits) {
  return (index & qubit_mask(qubit, num_qubits)) ? 1 : 0;
}

inline std::size_t dimension(int num_qubits) { return std::size_t{1} << num_qubits; }

}  // namespace gem
