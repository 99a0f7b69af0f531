#include "gem/transpile.hpp"

#include <numbers>

namespace gem {

namespace {
constexpr double kPi = std::numbers::pi;
}

Gate transpile_gate(const Gate& g) {
  const int q = g.qubits[0];
  switch (g.kind) {
    case GateKind::X:
      return Gate::u3(q, kPi, 0.0, kPi);
    case GateKind::Y:
      return Gate::u3(q, kPi, kPi / 2, kPi / 2);
    case GateKind::Z:
      return Gate::u1(q, kPi);
    case GateKind::H:
      return Gate::u2(q, 0.0, kPi);
    case GateKind::S:
      return Gate::u1(q, kPi / 2);
    case GateKind::Sdg:
      return Gate::u1(q, -kPi / 2);
    case GateKind::T:
      return Gate::u1(q, kPi / 4);
    case GateKind::Tdg:
      return Gate::u1(q, -kPi / 4);
    case GateKind::Rx:
      return Gate::u3(q, g.params[0], -kPi / 2, kPi / 2);
    case GateKind::Ry:
      return Gate::u3(q, g.params[0], 0.0, 0.0);
    default:
      return g;  // Id, U1, U2, U3, CNOT, Measure
  }
}

Circuit transpile(const Circuit& c) {
  Circuit out(c.num_qubits, c.initial_state);
  for (const Gate& g : c.gates) {
    out.append(transpile_gate(g));
  }
  return out;
}

}  // namespace gem
