// Command-line front end: generate random circuits, emit calibration circuits
// and matrices for a given circuit, solve for mitigated distributions, run
// full randomized experiments from a config file, and render reports.

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gem/backend.hpp"
#include "gem/config_file.hpp"
#include "gem/experiment.hpp"
#include "gem/report.hpp"
#include "gem/serialization.hpp"

namespace fs = std::filesystem;

namespace {

std::string numbered_name(const std::string& stem, std::size_t index, std::size_t count) {
  char buf[32];
  const int width = count > 100 ? 4 : 3;
  std::snprintf(buf, sizeof(buf), "%s_%0*zu.json", stem.c_str(), width, index);
  return buf;
}

std::optional<gem::NoiseModel> load_noise(const std::string& path) {
  if (path.empty()) {
    return std::nullopt;
  }
  return gem::noise_model_from_json(gem::read_text_file(path));
}

int cmd_generate(const std::string& config_path, const std::string& out_dir) {
  const gem::ExperimentConfig cfg = gem::load_experiment_config(config_path);
  cfg.validate();
  fs::create_directories(out_dir);
  for (int i = 0; i < cfg.num_circuits; ++i) {
    gem::Rng rng(gem::derive_seed(cfg.seed, {0, static_cast<std::uint64_t>(i)}));
    const gem::Circuit circuit = gem::random_circuit(cfg, rng);
    const fs::path path =
        fs::path(out_dir) /
        numbered_name("circuit", static_cast<std::size_t>(i),
                      static_cast<std::size_t>(cfg.num_circuits));
    gem::write_text_file(path.string(), gem::circuit_to_json(circuit));
    std::printf("%s  depth=%d gates=%zu\n", path.c_str(), gem::depth(circuit),
                circuit.gates.size());
  }
  return 0;
}

int cmd_calibrate(const std::string& circuit_path, const std::string& method_name,
                  const std::string& noise_path, const std::string& out_dir, long shots,
                  std::uint64_t seed, int reduced_columns, bool circuits_only) {
  const gem::Circuit circuit = gem::circuit_from_json(gem::read_text_file(circuit_path));

  gem::ExperimentConfig cfg;
  cfg.num_qubits = circuit.num_qubits;
  cfg.method = gem::method_from_name(method_name);
  cfg.reduced_columns = reduced_columns;
  cfg.shots_device = shots;
  cfg.seed = seed;
  cfg.noise = load_noise(noise_path);

  const gem::CalibrationPlan plan = gem::calibration_plan(cfg, circuit);
  fs::create_directories(out_dir);
  for (std::size_t k = 0; k < plan.circuits.size(); ++k) {
    const fs::path path =
        fs::path(out_dir) / numbered_name("calibration", k, plan.circuits.size());
    gem::write_text_file(path.string(), gem::circuit_to_json(plan.circuits[k]));
  }
  std::printf("%zu calibration circuits -> %s\n", plan.circuits.size(), out_dir.c_str());

  if (!circuits_only) {
    gem::SimulatorBackend backend(cfg.noise);
    std::vector<gem::Distribution> measured;
    for (std::size_t k = 0; k < plan.circuits.size(); ++k) {
      measured.push_back(backend.execute(plan.circuits[k], cfg.shots_device,
                                         gem::derive_seed(seed, {3, 0, 0, k})));
    }
    const gem::CalibrationMatrix matrix = gem::assemble_calibration_matrix(cfg, plan, measured);
    const fs::path path = fs::path(out_dir) / "matrix.json";
    gem::write_text_file(path.string(), gem::calibration_matrix_to_json(matrix));
    std::printf("%s  kind=%s\n", path.c_str(), gem::calibration_kind_name(matrix.kind).c_str());
  }
  return 0;
}

int cmd_mitigate(const std::string& matrix_path, const std::string& counts_path,
                 const std::string& out_path, const gem::SolverConfig& solver) {
  const gem::CalibrationMatrix matrix =
      gem::calibration_matrix_from_json(gem::read_text_file(matrix_path));
  const gem::Distribution observed =
      gem::distribution_from_json(gem::read_text_file(counts_path));
  const gem::MitigationResult result = gem::mitigate(matrix, observed, solver);
  gem::write_text_file(out_path, gem::distribution_to_json(result.mitigated));
  std::printf("%s  objective=%.6g converged=%s\n", out_path.c_str(), result.objective,
              result.converged ? "yes" : "no");
  return 0;
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
  const gem::ExperimentConfig cfg = gem::load_experiment_config(config_path);
  const std::vector<gem::ExperimentRecord> records = gem::run_experiment(cfg);
  fs::create_directories(out_dir);

  const fs::path records_path = fs::path(out_dir) / "records.json";
  gem::write_text_file(records_path.string(), gem::records_to_json(records));
  gem::emit_report(records, gem::ReportFormat::CSV, (fs::path(out_dir) / "report.csv").string());
  gem::emit_report(records, gem::ReportFormat::JSON,
                   (fs::path(out_dir) / "report.json").string());

  int positive = 0, negative = 0, none = 0;
  for (const auto& r : records) {
    switch (r.classification) {
      case gem::MitigationClass::Positive: ++positive; break;
      case gem::MitigationClass::Negative: ++negative; break;
      case gem::MitigationClass::None: ++none; break;
    }
  }
  std::printf("%d experiments -> %s  (positive %d, negative %d, none %d)\n", cfg.num_circuits,
              out_dir.c_str(), positive, negative, none);
  return 0;
}

int cmd_report(const std::string& records_path, const std::string& format,
               const std::string& out_path) {
  const auto records = gem::records_from_json(gem::read_text_file(records_path));
  const gem::ReportFormat fmt =
      format == "json" ? gem::ReportFormat::JSON : gem::ReportFormat::CSV;
  gem::emit_report(records, fmt, out_path);
  std::printf("%zu records -> %s\n", records.size(), out_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"General error mitigation toolkit: calibration, mitigation and "
               "randomized experiments on a synthetic noisy simulator"};
  app.require_subcommand(1);

  std::string config_path, out_path, circuit_path, noise_path, matrix_path, counts_path,
      records_path;
  std::string method = "GEM";
  std::string format = "csv";
  long shots = 8192;
  std::uint64_t seed = 0;
  int reduced_columns = 0;
  bool circuits_only = false;
  gem::SolverConfig solver;

  auto* generate = app.add_subcommand("generate", "Emit random circuits to a directory");
  generate->add_option("--config", config_path, "Experiment config file")->required();
  generate->add_option("--out", out_path, "Output directory")->required();

  auto* calibrate =
      app.add_subcommand("calibrate", "Emit calibration circuits and matrix for a circuit");
  calibrate->add_option("--circuit", circuit_path, "Circuit JSON")->required();
  calibrate->add_option("--method", method, "GEM, QEM, Reduced or Direct");
  calibrate->add_option("--noise", noise_path, "Noise model JSON (default: noiseless)");
  calibrate->add_option("--shots", shots, "Shots per calibration circuit");
  calibrate->add_option("--seed", seed, "Sampling seed");
  calibrate->add_option("--reduced-columns", reduced_columns,
                        "Measured columns per half for Reduced");
  calibrate->add_flag("--circuits-only", circuits_only, "Skip execution and matrix assembly");
  calibrate->add_option("--out", out_path, "Output directory")->required();

  auto* mitigate = app.add_subcommand("mitigate", "Recover a mitigated distribution");
  mitigate->add_option("--matrix", matrix_path, "Calibration matrix JSON")->required();
  mitigate->add_option("--counts", counts_path, "Observed distribution JSON")->required();
  mitigate->add_option("--out", out_path, "Output distribution JSON")->required();
  mitigate->add_option("--seed", solver.seed, "Restart seed");
  mitigate->add_option("--restarts", solver.restarts, "Random restarts");
  mitigate->add_option("--max-iterations", solver.max_iterations, "Iteration cap");
  mitigate->add_option("--tolerance", solver.tolerance, "Improvement threshold");

  auto* run = app.add_subcommand("run", "Run a full experiment from a config file");
  run->add_option("--config", config_path, "Experiment config file")->required();
  run->add_option("--out", out_path, "Output directory")->required();

  auto* report = app.add_subcommand("report", "Render records as CSV or JSON");
  report->add_option("--records", records_path, "Records JSON from a run")->required();
  report->add_option("--format", format, "csv or json");
  report->add_option("--out", out_path, "Output file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      return cmd_generate(config_path, out_path);
    }
    if (calibrate->parsed()) {
      return cmd_calibrate(circuit_path, method, noise_path, out_path, shots, seed,
                           reduced_columns, circuits_only);
    }
    if (mitigate->parsed()) {
      return cmd_mitigate(matrix_path, counts_path, out_path, solver);
    }
    if (run->parsed()) {
      return cmd_run(config_path, out_path);
    }
    if (report->parsed()) {
      return cmd_report(records_path, format, out_path);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
