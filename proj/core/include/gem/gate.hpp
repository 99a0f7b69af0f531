#pragma once

#include <string>
#include <vector>

namespace gem {

/// Gate vocabulary: the applied set {Id, U1, X, Y, Z, H, S, Sdg, T, Tdg, CNOT},
/// the device basis set {Id, U1, U2, U3, CNOT}, the extra rotations Rx/Ry, and
/// the terminal Measure marker.
enum class GateKind {
  Id,
  U1,
  U2,
  U3,
  X,
  Y,
  Z,
  H,
  S,
  Sdg,
  T,
  Tdg,
  CNOT,
  Rx,
  Ry,
  Measure,
};

/// Number of angle parameters the gate kind carries (U1/Rx/Ry: 1, U2: 2, U3: 3).
int param_count(GateKind kind);

/// Number of qubits the gate kind acts on (2 for CNOT, 1 otherwise).
int qubit_count(GateKind kind);

const std::string& gate_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

/// A named gate applied to specific qubits. For CNOT the control comes first.
/// Angles are radians.
struct Gate {
  GateKind kind = GateKind::Id;
  std::vector<int> qubits;
  std::vector<double> params;

  Gate() = default;
  Gate(GateKind kind, std::vector<int> qubits, std::vector<double> params = {});

  bool is_measure() const { return kind == GateKind::Measure; }
  bool is_parameterized() const { return !params.empty(); }

  bool operator==(const Gate& other) const = default;

  static Gate id(int q) { return {GateKind::Id, {q}}; }
  static Gate u1(int q, double lambda) { return {GateKind::U1, {q}, {lambda}}; }
  static Gate u2(int q, double phi, double lambda) { return {GateKind::U2, {q}, {phi, lambda}}; }
  static Gate u3(int q, double theta, double phi, double lambda) {
    return {GateKind::U3, {q}, {theta, phi, lambda}};
  }
  static Gate x(int q) { return {GateKind::X, {q}}; }
  static Gate y(int q) { return {GateKind::Y, {q}}; }
  static Gate z(int q) { return {GateKind::Z, {q}}; }
  static Gate h(int q) { return {GateKind::H, {q}}; }
  static Gate s(int q) { return {GateKind::S, {q}}; }
  static Gate sdg(int q) { return {GateKind::Sdg, {q}}; }
  static Gate t(int q) { return {GateKind::T, {q}}; }
  static Gate tdg(int q) { return {GateKind::Tdg, {q}}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, {control, target}}; }
  static Gate rx(int q, double theta) { return {GateKind::Rx, {q}, {theta}}; }
  static Gate ry(int q, double theta) { return {GateKind::Ry, {q}, {theta}}; }
  static Gate measure(int q) { return {GateKind::Measure, {q}}; }
};

/// Adjoint of a non-measurement gate. Self-inverse kinds map to themselves,
/// S/T swap with their daggers, and the parameterized kinds negate angles:
/// U1(a) -> U1(-a), Rx(a) -> Rx(-a), Ry(a) -> Ry(-a),
/// U2(p,l) -> U3(-pi/2, -l, -p), U3(t,p,l) -> U3(-t, -l, -p).
/// Throws std::invalid_argument for Measure.
Gate inverse_gate(const Gate& g);

}  // namespace gem
