#pragma once

#include "gem/circuit.hpp"

namespace gem {

/// Rewrites a gate into the device basis set {Id, U1, U2, U3, CNOT}:
///   X -> U3(pi,0,pi)      Y -> U3(pi,pi/2,pi/2)   Z -> U1(pi)
///   H -> U2(0,pi)         S -> U1(pi/2)           Sdg -> U1(-pi/2)
///   T -> U1(pi/4)         Tdg -> U1(-pi/4)
///   Rx(a) -> U3(a,-pi/2,pi/2)   Ry(a) -> U3(a,0,0)
/// Basis gates and Measure pass through unchanged.
Gate transpile_gate(const Gate& g);

/// Per-gate basis rewrite of the whole circuit; order, qubit assignments and
/// the circuit unitary (up to global phase) are preserved.
Circuit transpile(const Circuit& c);

}  // namespace gem
