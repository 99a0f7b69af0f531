#include <doctest.h>

#include "gem/config_file.hpp"

using namespace gem;

namespace {

const char* kFullConfig = R"(
# gate-error regime, two qubits
num_qubits = 2
depth_min = 74
depth_max = 80
num_circuits = 100
repetitions = 10
shots_device = 8192
shots_simulator = 819200
gate_set = ["Id", "U1", "X", "Y", "Z", "S", "Sdg", "T", "Tdg", "CNOT"]
method = "GEM"
seed = 4242

[coupling]
edges = [[0, 1], [1, 0]]

[noise]
p1 = 0.002
p2 = 0.02
overrotation = 0.02
readout = [[[0.95, 0.08], [0.05, 0.92]], [[0.95, 0.08], [0.05, 0.92]]]

[solver]
max_iterations = 5000
tolerance = 1e-12
restarts = 4
)";

}  // namespace

TEST_CASE("full experiment config parses") {
  const ExperimentConfig cfg = parse_experiment_config(kFullConfig);
  CHECK(cfg.num_qubits == 2);
  CHECK(cfg.depth_min == 74);
  CHECK(cfg.depth_max == 80);
  CHECK(cfg.num_circuits == 100);
  CHECK(cfg.repetitions == 10);
  CHECK(cfg.shots_device == 8192);
  CHECK(cfg.shots_simulator == 819200);
  CHECK(cfg.gate_set.size() == 10);
  CHECK(cfg.gate_set[1] == GateKind::U1);
  CHECK(cfg.method == Method::GEM);
  CHECK(cfg.seed == 4242);
  CHECK(cfg.coupling.allows(0, 1));
  CHECK(cfg.coupling.allows(1, 0));
  REQUIRE(cfg.noise.has_value());
  CHECK(cfg.noise->p1 == 0.002);
  CHECK(cfg.noise->p2 == 0.02);
  CHECK(cfg.noise->overrotation == 0.02);
  REQUIRE(cfg.noise->readout.size() == 2);
  CHECK(cfg.noise->readout[1](0, 1) == 0.08);
  CHECK(cfg.solver.max_iterations == 5000);
  CHECK(cfg.solver.tolerance == 1e-12);
  CHECK(cfg.solver.restarts == 4);
  cfg.validate();
}

TEST_CASE("defaults apply when keys are absent") {
  const ExperimentConfig cfg = parse_experiment_config("num_qubits = 1\ndepth_min = 3\ndepth_max = 5\n");
  CHECK(cfg.repetitions == 10);
  CHECK(cfg.shots_device == 8192);
  CHECK(cfg.shots_simulator == 819200);
  CHECK(!cfg.noise.has_value());
  CHECK(cfg.method == Method::GEM);
  CHECK(cfg.gate_set == applied_gate_set());
}

TEST_CASE("unknown keys and malformed lines are rejected") {
  CHECK_THROWS_AS(parse_experiment_config("bogus_key = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_experiment_config("num_qubits 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_experiment_config("num_qubits = [1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_experiment_config("num_qubits = 2\nnum_qubits = 3\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_experiment_config("method = \"SOMETHING\"\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_experiment_config("num_qubits = 2.5\n"), std::invalid_argument);
}

TEST_CASE("config writer round trips through the parser") {
  ExperimentConfig cfg = parse_experiment_config(kFullConfig);
  cfg.method = Method::Reduced;
  cfg.reduced_columns = 3;
  const ExperimentConfig back = parse_experiment_config(experiment_config_to_text(cfg));
  CHECK(back.num_qubits == cfg.num_qubits);
  CHECK(back.depth_max == cfg.depth_max);
  CHECK(back.gate_set == cfg.gate_set);
  CHECK(back.method == Method::Reduced);
  CHECK(back.reduced_columns == 3);
  CHECK(back.coupling.edges == cfg.coupling.edges);
  REQUIRE(back.noise.has_value());
  CHECK(back.noise->readout[0] == cfg.noise->readout[0]);
  CHECK(back.solver.tolerance == cfg.solver.tolerance);
}
