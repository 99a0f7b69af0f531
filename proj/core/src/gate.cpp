#include "gem/gate.hpp"

#include <array>
#include <numbers>
#include <stdexcept>

namespace gem {

namespace {

constexpr double kPi = std::numbers::pi;

const std::array<std::string, 16> kGateNames = {
    "Id", "U1", "U2",   "U3", "X",  "Y",  "Z",    "H",
    "S",  "Sdg", "T",   "Tdg", "CNOT", "Rx", "Ry", "Measure",
};

}  // namespace

int param_count(GateKind kind) {
  switch (kind) {
    case GateKind::U1:
    case GateKind::Rx:
    case GateKind::Ry:
      return 1;
    case GateKind::U2:
      return 2;
    case GateKind::U3:
      return 3;
    default:
      return 0;
  }
}

int qubit_count(GateKind kind) { return kind == GateKind::CNOT ? 2 : 1; }

const std::string& gate_name(GateKind kind) { return kGateNames[static_cast<int>(kind)]; }

GateKind gate_kind_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kGateNames.size(); ++i) {
    if (kGateNames[i] == name) {
      return static_cast<GateKind>(i);
    }
  }
  throw std::invalid_argument("unknown gate name: " + name);
}

Gate::Gate(GateKind kind, std::vector<int> qubits, std::vector<double> params)
    : kind(kind), qubits(std::move(qubits)), params(std::move(params)) {
  if (static_cast<int>(this->qubits.size()) != qubit_count(kind)) {
    throw std::invalid_argument("gate " + gate_name(kind) + ": wrong qubit count");
  }
  if (this->qubits.size() == 2 && this->qubits[0] == this->qubits[1]) {
    throw std::invalid_argument("gate " + gate_name(kind) + ": qubits must be distinct");
  }
  if (static_cast<int>(this->params.size()) != param_count(kind)) {
    throw std::invalid_argument("gate " + gate_name(kind) + ": wrong parameter count");
  }
}

Gate inverse_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::Id:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::CNOT:
      return g;
    case GateKind::S:
      return {GateKind::Sdg, g.qubits};
    case GateKind::Sdg:
      return {GateKind::S, g.qubits};
    case GateKind::T:
      return {GateKind::Tdg, g.qubits};
    case GateKind::Tdg:
      return {GateKind::T, g.qubits};
    case GateKind::U1:
      return {GateKind::U1, g.qubits, {-g.params[0]}};
    case GateKind::Rx:
      return {GateKind::Rx, g.qubits, {-g.params[0]}};
    case GateKind::Ry:
      return {GateKind::Ry, g.qubits, {-g.params[0]}};
    case GateKind::U2:
      return {GateKind::U3, g.qubits, {-kPi / 2, -g.params[1], -g.params[0]}};
    case GateKind::U3:
      return {GateKind::U3, g.qubits, {-g.params[0], -g.params[2], -g.params[1]}};
    case GateKind::Measure:
      throw std::invalid_argument("gate has no inverse");
  }
  throw std::invalid_argument("gate has no inverse");
}

}  // namespace gem
