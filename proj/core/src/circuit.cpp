#include "gem/circuit.hpp"

#include <algorithm>
#include <stdexcept>

#include "gem/basis.hpp"

namespace gem {

std::size_t basis_index(const std::string& bits) {
  std::size_t index = 0;
  for (char b : bits) {
    if (b != '0' && b != '1') {
      throw std::invalid_argument("state label must be a bitstring, got: " + bits);
    }
    index = (index << 1) | static_cast<std::size_t>(b == '1');
  }
  return index;
}

std::string basis_bits(std::size_t index, int num_qubits) {
  std::string bits(static_cast<std::size_t>(num_qubits), '0');
  for (int q = 0; q < num_qubits; ++q) {
    if (qubit_bit(index, q, num_qubits)) {
      bits[static_cast<std::size_t>(q)] = '1';
    }
  }
  return bits;
}

Circuit::Circuit(int num_qubits, std::string initial_state)
    : Circuit(num_qubits, std::vector<Gate>{}, std::move(initial_state)) {}

Circuit::Circuit(int num_qubits, std::vector<Gate> gates, std::string initial_state)
    : num_qubits(num_qubits), initial_state(std::move(initial_state)) {
  if (num_qubits < 1) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
  if (this->initial_state.empty()) {
    this->initial_state.assign(static_cast<std::size_t>(num_qubits), '0');
  }
  if (static_cast<int>(this->initial_state.size()) != num_qubits) {
    throw std::invalid_argument("initial state length does not match qubit count");
  }
  basis_index(this->initial_state);  // validates characters
  for (auto& g : gates) {
    append(std::move(g));
  }
}

Circuit& Circuit::append(Gate g) {
  for (int q : g.qubits) {
    if (q < 0 || q >= num_qubits) {
      throw std::invalid_argument("gate qubit out of range");
    }
  }
  if (!g.is_measure() && !gates.empty() && gates.back().is_measure()) {
    throw std::invalid_argument("measurements must form a trailing suffix");
  }
  gates.push_back(std::move(g));
  return *this;
}

bool Circuit::has_measurements() const {
  return !gates.empty() && gates.back().is_measure();
}

std::vector<int> gate_layers(const Circuit& c) {
  std::vector<int> layers(c.gates.size(), 0);
  std::vector<int> qubit_frontier(static_cast<std::size_t>(c.num_qubits), 0);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (g.is_measure()) {
      continue;
    }
    int layer = 0;
    for (int q : g.qubits) {
      layer = std::max(layer, qubit_frontier[static_cast<std::size_t>(q)]);
    }
    ++layer;
    for (int q : g.qubits) {
      qubit_frontier[static_cast<std::size_t>(q)] = layer;
    }
    layers[i] = layer;
  }
  return layers;
}

int depth(const Circuit& c) {
  int d = 0;
  for (int layer : gate_layers(c)) {
    d = std::max(d, layer);
  }
  return d;
}

std::pair<Circuit, Circuit> split_halves(const Circuit& c) {
  if (c.has_measurements()) {
    throw std::invalid_argument("strip measurements before splitting");
  }
  const std::vector<int> layers = gate_layers(c);
  const int cut = depth(c) / 2;
  Circuit first(c.num_qubits, c.initial_state);
  Circuit second(c.num_qubits, c.initial_state);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    (layers[i] <= cut ? first : second).append(c.gates[i]);
  }
  return {std::move(first), std::move(second)};
}

Circuit prepare_state(int num_qubits, const std::string& bits) {
  if (static_cast<int>(bits.size()) != num_qubits) {
    throw std::invalid_argument("state label length does not match qubit count");
  }
  basis_index(bits);
  Circuit c(num_qubits);
  for (int q = 0; q < num_qubits; ++q) {
    if (bits[static_cast<std::size_t>(q)] == '1') {
      c.append(Gate::x(q));
    }
  }
  return c;
}

Circuit strip_measurements(const Circuit& c) {
  Circuit out(c.num_qubits, c.initial_state);
  for (const Gate& g : c.gates) {
    if (!g.is_measure()) {
      out.append(g);
    }
  }
  return out;
}

Circuit with_measurements(Circuit c) {
  for (int q = 0; q < c.num_qubits; ++q) {
    c.append(Gate::measure(q));
  }
  return c;
}

Circuit inverted(const Circuit& c) {
  if (c.has_measurements()) {
    throw std::invalid_argument("cannot invert a measured circuit");
  }
  Circuit out(c.num_qubits, c.initial_state);
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    out.append(inverse_gate(*it));
  }
  return out;
}

Circuit concat(Circuit a, const Circuit& b) {
  if (a.num_qubits != b.num_qubits) {
    throw std::invalid_argument("cannot concatenate circuits of different widths");
  }
  for (const Gate& g : b.gates) {
    a.append(g);
  }
  return a;
}

CouplingMap::CouplingMap(std::vector<std::pair<int, int>> edges) : edges(std::move(edges)) {
  std::sort(this->edges.begin(), this->edges.end());
  this->edges.erase(std::unique(this->edges.begin(), this->edges.end()), this->edges.end());
  for (const auto& [c, t] : this->edges) {
    if (c == t || c < 0 || t < 0) {
      throw std::invalid_argument("coupling edge must join two distinct qubits");
    }
  }
}

bool CouplingMap::allows(int control, int target) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(control, target));
}

void CouplingMap::validate(int num_qubits) const {
  for (const auto& [c, t] : edges) {
    if (c >= num_qubits || t >= num_qubits) {
      throw std::invalid_argument("coupling edge references a qubit outside the circuit");
    }
  }
}

CouplingMap CouplingMap::linear(int num_qubits) {
  std::vector<std::pair<int, int>> edges;
  for (int q = 0; q + 1 < num_qubits; ++q) {
    edges.emplace_back(q, q + 1);
    edges.emplace_back(q + 1, q);
  }
  return CouplingMap(std::move(edges));
}

}  // namespace gem
