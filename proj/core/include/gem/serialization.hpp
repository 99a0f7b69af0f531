#pragma once

#include <string>
#include <vector>

#include "gem/calibration.hpp"
#include "gem/circuit.hpp"
#include "gem/distribution.hpp"
#include "gem/experiment.hpp"
#include "gem/noise_model.hpp"

namespace gem {

// JSON wire formats. Angles and probabilities round-trip exactly.
//
// Circuit:            {"num_qubits": N, "initial_state": "0..0",
//                      "gates": [{"name": "...", "qubits": [...], "params": [...]}]}
// NoiseModel:         {"p1": r, "p2": r, "overrotation": r,
//                      "readout": [[[r,r],[r,r]], ...]}       (row-major per qubit)
// Distribution:       {"num_qubits": N, "probs": [...]}
// CalibrationMatrix:  {"num_qubits": N, "kind": "...", "entries": [[...], ...]}
//                     (row-major; column j is indexed by prepared basis state j)

std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

std::string noise_model_to_json(const NoiseModel& noise);
NoiseModel noise_model_from_json(const std::string& text);

std::string distribution_to_json(const Distribution& d);
Distribution distribution_from_json(const std::string& text);

std::string calibration_matrix_to_json(const CalibrationMatrix& m);
CalibrationMatrix calibration_matrix_from_json(const std::string& text);

std::string records_to_json(const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> records_from_json(const std::string& text);

/// Sorted report rows plus the classification summary.
std::string report_to_json(const std::vector<ExperimentRecord>& sorted_records, int positive,
                           int negative, int none);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gem
