#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gem/gate.hpp"

namespace gem {

/// An ordered gate sequence over a fixed number of qubits, starting from a
/// basis state. Measure gates may only appear as a trailing suffix.
struct Circuit {
  int num_qubits = 1;
  std::string initial_state;  // length-N bitstring, character i = qubit i
  std::vector<Gate> gates;

  Circuit() : initial_state("0") {}
  explicit Circuit(int num_qubits, std::string initial_state = "");
  Circuit(int num_qubits, std::vector<Gate> gates, std::string initial_state = "");

  /// Appends after validating qubit bounds, distinctness, parameter arity and
  /// the trailing-measurement rule. Returns *this for chaining.
  Circuit& append(Gate g);

  bool has_measurements() const;
  std::size_t gate_count() const { return gates.size(); }

  bool operator==(const Circuit& other) const = default;
};

/// Greedy as-soon-as-possible layer index (1-based) per gate; Measure gates
/// get layer 0 and never occupy a slot.
std::vector<int> gate_layers(const Circuit& c);

/// Number of greedy layers of non-measurement gates.
int depth(const Circuit& c);

/// Splits on the layering of `depth`: the first part takes layers 1..floor(D/2),
/// the second the rest, both in original gate order. Throws if measurements
/// are present.
std::pair<Circuit, Circuit> split_halves(const Circuit& c);

/// Circuit applying X to every qubit whose bit is '1' in `bits` (|bits| = n).
Circuit prepare_state(int num_qubits, const std::string& bits);

Circuit strip_measurements(const Circuit& c);

/// Appends one Measure per qubit, in qubit order.
Circuit with_measurements(Circuit c);

/// Reverse-ordered inverses of every gate, so that c + inverted(c) composes
/// to the identity. Throws if measurements are present.
Circuit inverted(const Circuit& c);

/// a followed by b; both must have equal width. Keeps a's initial state.
Circuit concat(Circuit a, const Circuit& b);

/// Ordered qubit pairs on which CNOT is permitted.
struct CouplingMap {
  std::vector<std::pair<int, int>> edges;

  CouplingMap() = default;
  explicit CouplingMap(std::vector<std::pair<int, int>> edges);

  bool allows(int control, int target) const;
  bool empty() const { return edges.empty(); }
  void validate(int num_qubits) const;

  /// Nearest-neighbour chain, both directions per link.
  static CouplingMap linear(int num_qubits);
};

}  // namespace gem
