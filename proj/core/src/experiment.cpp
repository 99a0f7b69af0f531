#include "gem/experiment.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numbers>
#include <stdexcept>

#include "gem/basis.hpp"
#include "gem/transpile.hpp"

namespace gem {

namespace {

const std::array<std::string, 4> kMethodNames = {"GEM", "QEM", "Reduced", "Direct"};

// Seed-stream roles. Circuit generation, the ideal reference and the device
// runs must not depend on the mitigation method, so that methods can be
// compared on identical data.
enum Role : std::uint64_t {
  kRoleGenerate = 0,
  kRoleReference = 1,
  kRoleDevice = 2,
  kRoleCalibration = 3,
  kRoleSolver = 4,
};

bool contains(const std::vector<GateKind>& set, GateKind kind) {
  return std::find(set.begin(), set.end(), kind) != set.end();
}

/// Gates that map basis states to basis states (up to phase); the direct
/// strategy keeps only these in its calibration copy of the circuit.
bool is_basis_permutation_gate(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::U2:
    case GateKind::U3:
    case GateKind::Rx:
    case GateKind::Ry:
      return false;
    default:
      return true;
  }
}

Circuit permutation_part(const Circuit& c) {
  Circuit out(c.num_qubits, c.initial_state);
  for (const Gate& g : c.gates) {
    if (!g.is_measure() && is_basis_permutation_gate(g.kind)) {
      out.append(g);
    }
  }
  return out;
}

}  // namespace

CalibrationPlan calibration_plan(const ExperimentConfig& cfg, const Circuit& circuit) {
  CalibrationPlan plan;
  const std::size_t dim = dimension(cfg.num_qubits);
  switch (cfg.method) {
    case Method::QEM: {
      for (auto& c : qem_calibration_circuits(cfg.num_qubits)) {
        plan.circuits.push_back(transpile(c));
      }
      for (std::size_t k = 0; k < dim; ++k) plan.column_of.push_back(k);
      break;
    }
    case Method::GEM:
    case Method::Reduced: {
      auto [first, second] = gem_calibration_circuits(circuit);
      const std::size_t budget =
          cfg.method == Method::Reduced ? static_cast<std::size_t>(cfg.reduced_columns) : dim;
      plan.half_size = budget;
      for (std::size_t k = 0; k < budget; ++k) {
        plan.circuits.push_back(transpile(first[k]));
        plan.column_of.push_back(k);
      }
      for (std::size_t k = 0; k < budget; ++k) {
        plan.circuits.push_back(transpile(second[k]));
        plan.column_of.push_back(k);
      }
      break;
    }
    case Method::Direct: {
      const Circuit base = permutation_part(circuit);
      const DirectPairing pairing = direct_output_pairing(base);
      auto circuits = direct_calibration_circuits(base);
      for (std::size_t k = 0; k < circuits.size(); ++k) {
        plan.circuits.push_back(transpile(circuits[k]));
        plan.column_of.push_back(pairing.output_state[k]);
      }
      break;
    }
  }
  return plan;
}

CalibrationMatrix assemble_calibration_matrix(const ExperimentConfig& cfg,
                                              const CalibrationPlan& plan,
                                              const std::vector<Distribution>& measured) {
  switch (cfg.method) {
    case Method::QEM:
      return build_matrix(measured, CalibrationKind::QEM);
    case Method::GEM: {
      const std::size_t dim = dimension(cfg.num_qubits);
      std::vector<Distribution> first(measured.begin(),
                                      measured.begin() + static_cast<std::ptrdiff_t>(dim));
      std::vector<Distribution> second(measured.begin() + static_cast<std::ptrdiff_t>(dim),
                                       measured.end());
      return combine(build_matrix(first, CalibrationKind::GemHalf1),
                     build_matrix(second, CalibrationKind::GemHalf2));
    }
    case Method::Reduced: {
      std::map<std::size_t, Distribution> first, second;
      for (std::size_t k = 0; k < plan.half_size; ++k) {
        first.emplace(plan.column_of[k], measured[k]);
        second.emplace(plan.column_of[plan.half_size + k], measured[plan.half_size + k]);
      }
      const CalibrationMatrix m1 = reduced_matrix(first, cfg.num_qubits);
      const CalibrationMatrix m2 = reduced_matrix(second, cfg.num_qubits);
      return {cfg.num_qubits, CalibrationKind::Reduced, (m1.entries + m2.entries) / 2.0};
    }
    case Method::Direct: {
      std::map<std::size_t, Distribution> columns;
      for (std::size_t k = 0; k < measured.size(); ++k) {
        columns.insert_or_assign(plan.column_of[k], measured[k]);
      }
      return reduced_matrix(columns, cfg.num_qubits);
    }
  }
  throw std::logic_error("unreachable");
}

const std::string& method_name(Method m) { return kMethodNames[static_cast<int>(m)]; }

Method method_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kMethodNames.size(); ++i) {
    if (kMethodNames[i] == name) {
      return static_cast<Method>(i);
    }
  }
  throw std::invalid_argument("unknown method: " + name);
}

std::vector<GateKind> applied_gate_set() {
  return {GateKind::Id, GateKind::U1, GateKind::X,   GateKind::Y,   GateKind::Z,  GateKind::H,
          GateKind::S,  GateKind::Sdg, GateKind::T,  GateKind::Tdg, GateKind::CNOT};
}

void ExperimentConfig::validate() const {
  if (num_qubits < 1 || num_qubits > 8) {
    throw std::invalid_argument("num_qubits must lie in [1, 8]");
  }
  if (depth_min < 0 || depth_min > depth_max) {
    throw std::invalid_argument("need 0 <= depth_min <= depth_max");
  }
  if (num_circuits < 1 || repetitions < 1) {
    throw std::invalid_argument("need at least one circuit and one repetition");
  }
  if (shots_device < 1 || shots_simulator < 1) {
    throw std::invalid_argument("shot counts must be positive");
  }
  if (gate_set.empty()) {
    throw std::invalid_argument("gate set must be nonempty");
  }
  coupling.validate(num_qubits);
  if (contains(gate_set, GateKind::CNOT) && num_qubits >= 2 && coupling.empty()) {
    throw std::invalid_argument("CNOT in the gate set requires a coupling map");
  }
  if (method == Method::Reduced &&
      (reduced_columns < 0 || dimension(num_qubits) < static_cast<std::size_t>(reduced_columns))) {
    throw std::invalid_argument("reduced_columns must lie in [0, 2^N]");
  }
  if (noise) {
    noise->validate(num_qubits);
  }
}

Circuit random_circuit(const ExperimentConfig& cfg, Rng& rng) {
  std::vector<GateKind> gates = cfg.gate_set;
  if (cfg.num_qubits == 1) {
    gates.erase(std::remove(gates.begin(), gates.end(), GateKind::CNOT), gates.end());
  }
  if (gates.empty()) {
    throw std::invalid_argument("gate set has no gate applicable to one qubit");
  }
  if (contains(gates, GateKind::CNOT) && cfg.coupling.empty()) {
    throw std::invalid_argument("CNOT in the gate set requires a coupling map");
  }

  const int target = cfg.depth_min + static_cast<int>(rng.uniform_index(
                                         static_cast<std::size_t>(cfg.depth_max - cfg.depth_min) + 1));
  Circuit c(cfg.num_qubits);
  std::vector<int> frontier(static_cast<std::size_t>(cfg.num_qubits), 0);
  int current_depth = 0;
  while (current_depth < target) {
    const GateKind kind = gates[rng.uniform_index(gates.size())];
    Gate g;
    if (kind == GateKind::CNOT) {
      const auto& edge = cfg.coupling.edges[rng.uniform_index(cfg.coupling.edges.size())];
      g = Gate::cnot(edge.first, edge.second);
    } else {
      const int q = static_cast<int>(rng.uniform_index(static_cast<std::size_t>(cfg.num_qubits)));
      std::vector<double> params;
      for (int p = 0; p < param_count(kind); ++p) {
        params.push_back(rng.uniform(0.0, 2.0 * std::numbers::pi));
      }
      g = Gate(kind, {q}, std::move(params));
    }
    int layer = 0;
    for (int q : g.qubits) {
      layer = std::max(layer, frontier[static_cast<std::size_t>(q)]);
    }
    ++layer;
    for (int q : g.qubits) {
      frontier[static_cast<std::size_t>(q)] = layer;
    }
    current_depth = std::max(current_depth, layer);
    c.append(std::move(g));
  }
  return c;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  SimulatorBackend backend(cfg.noise);
  return run_experiment(cfg, backend);
}

ExperimentRecord run_circuit(const ExperimentConfig& cfg, const Circuit& circuit,
                             Backend& backend, int experiment_id) {
  const auto idx = static_cast<std::uint64_t>(experiment_id);
  ExperimentRecord record;
  record.experiment_id = experiment_id;
  record.circuit = circuit;
  record.depth = depth(circuit);

  const Circuit device_circuit = with_measurements(transpile(strip_measurements(circuit)));
  const Distribution reference = sample_counts(device_circuit, cfg.shots_simulator, std::nullopt,
                                               derive_seed(cfg.seed, {kRoleReference, idx}));

  const CalibrationPlan plan = calibration_plan(cfg, circuit);

  for (int r = 0; r < cfg.repetitions; ++r) {
    const auto rep = static_cast<std::uint64_t>(r);
    const Distribution observed = backend.execute(
        device_circuit, cfg.shots_device, derive_seed(cfg.seed, {kRoleDevice, idx, rep}));

    std::vector<Distribution> measured;
    measured.reserve(plan.circuits.size());
    for (std::size_t k = 0; k < plan.circuits.size(); ++k) {
      measured.push_back(backend.execute(
          plan.circuits[k], cfg.shots_device,
          derive_seed(cfg.seed, {kRoleCalibration, idx, rep, static_cast<std::uint64_t>(k)})));
    }
    const CalibrationMatrix matrix = assemble_calibration_matrix(cfg, plan, measured);

    SolverConfig solver = cfg.solver;
    solver.seed = derive_seed(cfg.seed, {kRoleSolver, idx, rep});
    const MitigationResult result = mitigate(matrix, observed, solver);

    RepetitionResult rr;
    rr.delta_v = rms_error(observed, reference);
    rr.delta_x = rms_error(result.mitigated, reference);
    rr.delta_g = rr.delta_v - rr.delta_x;
    record.repetitions.push_back(rr);
    record.matrices.push_back(matrix);
  }

  const auto reps = static_cast<double>(record.repetitions.size());
  record.min_delta_v = record.max_delta_v = record.repetitions.front().delta_v;
  record.min_delta_x = record.max_delta_x = record.repetitions.front().delta_x;
  for (const auto& rr : record.repetitions) {
    record.avg_delta_v += rr.delta_v / reps;
    record.avg_delta_x += rr.delta_x / reps;
    record.min_delta_v = std::min(record.min_delta_v, rr.delta_v);
    record.max_delta_v = std::max(record.max_delta_v, rr.delta_v);
    record.min_delta_x = std::min(record.min_delta_x, rr.delta_x);
    record.max_delta_x = std::max(record.max_delta_x, rr.delta_x);
  }
  record.delta_g = record.avg_delta_v - record.avg_delta_x;
  return record;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg, Backend& backend) {
  cfg.validate();
  std::vector<ExperimentRecord> records;
  records.reserve(static_cast<std::size_t>(cfg.num_circuits));

  for (int i = 0; i < cfg.num_circuits; ++i) {
    Rng generator(derive_seed(cfg.seed, {kRoleGenerate, static_cast<std::uint64_t>(i)}));
    const Circuit circuit = random_circuit(cfg, generator);
    records.push_back(run_circuit(cfg, circuit, backend, i));
  }

  std::vector<MitigationOutcome> outcomes;
  outcomes.reserve(records.size());
  for (const auto& record : records) {
    outcomes.push_back({record.avg_delta_v, record.avg_delta_x, record.delta_g,
                        MitigationClass::None});
  }
  outcomes = classify(std::move(outcomes));
  for (std::size_t k = 0; k < records.size(); ++k) {
    records[k].classification = outcomes[k].classification;
  }
  return records;
}

}  // namespace gem
