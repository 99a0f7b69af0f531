#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "gem/circuit.hpp"
#include "gem/distribution.hpp"
#include "gem/noise_model.hpp"

namespace gem {

/// Local unitary of a non-measurement gate: 2x2, or 4x4 for CNOT (control is
/// the more significant of the two local bits).
Eigen::MatrixXcd gate_matrix(const Gate& g);

/// Full 2^N x 2^N unitary of a measurement-free circuit; intended for small N.
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

/// Exact output distribution by density-matrix evolution. With a noise model,
/// every gate is followed by a depolarizing channel (p1 or p2 on its support),
/// parameterized gates are over-rotated, and readout confusion is applied to
/// the final diagonal. Limited to 8 qubits.
Distribution exact_probabilities(const Circuit& c,
                                 const std::optional<NoiseModel>& noise = std::nullopt);

/// Relative frequencies of a `shots`-shot multinomial sample of
/// exact_probabilities; deterministic for a fixed seed.
Distribution sample_counts(const Circuit& c, long shots,
                           const std::optional<NoiseModel>& noise, std::uint64_t seed);

}  // namespace gem
