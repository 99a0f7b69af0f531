#pragma once

#include <string>

#include "gem/experiment.hpp"

namespace gem {

/// Parses the experiment config format: `key = value` lines with `[section]`
/// tables, `#` comments, quoted strings, numbers, booleans and (nested)
/// arrays. Unknown keys are rejected.
///
///   num_qubits = 2
///   depth_min = 16
///   depth_max = 20
///   num_circuits = 20
///   gate_set = ["Id", "U1", "X", "H", "CNOT"]
///   method = "GEM"
///   seed = 7
///
///   [coupling]
///   edges = [[0, 1], [1, 0]]
///
///   [noise]
///   p1 = 0.002
///   p2 = 0.02
///   overrotation = 0.02
///   readout = [[[0.95, 0.08], [0.05, 0.92]], [[0.95, 0.08], [0.05, 0.92]]]
///
///   [solver]
///   max_iterations = 10000
///   tolerance = 1e-12
///   restarts = 4
ExperimentConfig parse_experiment_config(const std::string& text);

ExperimentConfig load_experiment_config(const std::string& path);

std::string experiment_config_to_text(const ExperimentConfig& cfg);

}  // namespace gem
