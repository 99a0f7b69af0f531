#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gem/backend.hpp"
#include "gem/calibration.hpp"
#include "gem/circuit.hpp"
#include "gem/metrics.hpp"
#include "gem/mitigation.hpp"
#include "gem/noise_model.hpp"
#include "gem/rng.hpp"

namespace gem {

enum class Method { GEM, QEM, Reduced, Direct };

const std::string& method_name(Method m);
Method method_from_name(const std::string& name);

/// The applied gate set used for random circuit generation.
std::vector<GateKind> applied_gate_set();

struct ExperimentConfig {
  int num_qubits = 1;
  int depth_min = 1;
  int depth_max = 1;
  int num_circuits = 1;
  int repetitions = 10;
  long shots_device = 8192;
  long shots_simulator = 819200;
  std::vector<GateKind> gate_set = applied_gate_set();
  CouplingMap coupling;
  std::optional<NoiseModel> noise;
  Method method = Method::GEM;
  std::uint64_t seed = 0;
  int reduced_columns = 0;  // per-half measured columns for Method::Reduced
  SolverConfig solver;

  void validate() const;
};

struct RepetitionResult {
  double delta_v = 0.0;
  double delta_x = 0.0;
  double delta_g = 0.0;
};

struct ExperimentRecord {
  int experiment_id = 0;
  Circuit circuit;  // as generated, before basis transpilation
  int depth = 0;
  std::vector<RepetitionResult> repetitions;
  double avg_delta_v = 0.0, min_delta_v = 0.0, max_delta_v = 0.0;
  double avg_delta_x = 0.0, min_delta_x = 0.0, max_delta_x = 0.0;
  double delta_g = 0.0;  // avg_delta_v - avg_delta_x
  MitigationClass classification = MitigationClass::None;
  std::vector<CalibrationMatrix> matrices;  // mitigation matrix per repetition
};

/// Random circuit drawn gate by gate from the configured set, respecting the
/// coupling map, until the greedy depth reaches a target drawn uniformly from
/// [depth_min, depth_max].
Circuit random_circuit(const ExperimentConfig& cfg, Rng& rng);

/// Calibration circuits for one target circuit under the configured method,
/// already transpiled and measured, with the matrix column each one feeds.
/// GEM runs both half lists (2^(N+1) circuits), QEM the 2^N preparations,
/// Reduced the first `reduced_columns` states of each half, and Direct the
/// full-circuit strategy with columns indexed by ideal output state.
struct CalibrationPlan {
  std::vector<Circuit> circuits;
  std::vector<std::size_t> column_of;
  std::size_t half_size = 0;  // circuits per half for GEM/Reduced
};

CalibrationPlan calibration_plan(const ExperimentConfig& cfg, const Circuit& circuit);

CalibrationMatrix assemble_calibration_matrix(const ExperimentConfig& cfg,
                                              const CalibrationPlan& plan,
                                              const std::vector<Distribution>& measured);

/// One experiment on a fixed circuit: ideal reference, then per repetition a
/// noisy run, a fresh calibration matrix and the mitigated distribution.
/// Classification is left at None; it is a batch-level label.
ExperimentRecord run_circuit(const ExperimentConfig& cfg, const Circuit& circuit,
                             Backend& backend, int experiment_id = 0);

/// The full randomized protocol: per circuit, an ideal reference distribution
/// from the noiseless simulator, then per repetition a noisy run, a freshly
/// measured calibration matrix per the configured method, and the mitigated
/// distribution. Classification is computed across the batch. Deterministic
/// for a fixed config.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg);

/// Same, against a caller-supplied device; cfg.noise is ignored for execution.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg, Backend& backend);

}  // namespace gem
