#include "gem/serialization.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gem {

namespace {

using nlohmann::json;

json gate_to_obj(const Gate& g) {
  return {{"name", gate_name(g.kind)}, {"qubits", g.qubits}, {"params", g.params}};
}

Gate gate_from_obj(const json& obj) {
  return {gate_kind_from_name(obj.at("name").get<std::string>()),
          obj.at("qubits").get<std::vector<int>>(),
          obj.at("params").get<std::vector<double>>()};
}

json circuit_to_obj(const Circuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates) {
    gates.push_back(gate_to_obj(g));
  }
  return {{"num_qubits", c.num_qubits},
          {"initial_state", c.initial_state},
          {"gates", std::move(gates)}};
}

Circuit circuit_from_obj(const json& obj) {
  Circuit c(obj.at("num_qubits").get<int>(),
            obj.value("initial_state", std::string()));
  for (const json& g : obj.at("gates")) {
    c.append(gate_from_obj(g));
  }
  return c;
}

json distribution_to_obj(const Distribution& d) {
  std::vector<double> probs(d.probs.data(), d.probs.data() + d.probs.size());
  return {{"num_qubits", d.num_qubits}, {"probs", std::move(probs)}};
}

Distribution distribution_from_obj(const json& obj) {
  const auto probs = obj.at("probs").get<std::vector<double>>();
  Eigen::VectorXd v(static_cast<Eigen::Index>(probs.size()));
  for (std::size_t i = 0; i < probs.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = probs[i];
  }
  return {obj.at("num_qubits").get<int>(), std::move(v)};
}

json matrix_to_obj(const CalibrationMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) {
      row.push_back(m.entries(i, j));
    }
    rows.push_back(std::move(row));
  }
  return {{"num_qubits", m.num_qubits},
          {"kind", calibration_kind_name(m.kind)},
          {"entries", std::move(rows)}};
}

CalibrationMatrix matrix_from_obj(const json& obj) {
  const int n = obj.at("num_qubits").get<int>();
  const auto rows = obj.at("entries").get<std::vector<std::vector<double>>>();
  const auto dim = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd entries(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != dim) {
      throw std::invalid_argument("calibration matrix rows must be square");
    }
    for (Eigen::Index j = 0; j < dim; ++j) {
      entries(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return {n, calibration_kind_from_name(obj.at("kind").get<std::string>()), std::move(entries)};
}

json record_to_obj(const ExperimentRecord& r) {
  json reps = json::array();
  for (const auto& rr : r.repetitions) {
    reps.push_back({{"delta_v", rr.delta_v}, {"delta_x", rr.delta_x}, {"delta_g", rr.delta_g}});
  }
  json matrices = json::array();
  for (const auto& m : r.matrices) {
    matrices.push_back(matrix_to_obj(m));
  }
  return {{"experiment_id", r.experiment_id},
          {"circuit", circuit_to_obj(r.circuit)},
          {"depth", r.depth},
          {"repetitions", std::move(reps)},
          {"avg_delta_v", r.avg_delta_v},
          {"min_delta_v", r.min_delta_v},
          {"max_delta_v", r.max_delta_v},
          {"avg_delta_x", r.avg_delta_x},
          {"min_delta_x", r.min_delta_x},
          {"max_delta_x", r.max_delta_x},
          {"delta_g", r.delta_g},
          {"classification", mitigation_class_name(r.classification)},
          {"matrices", std::move(matrices)}};
}

ExperimentRecord record_from_obj(const json& obj) {
  ExperimentRecord r;
  r.experiment_id = obj.at("experiment_id").get<int>();
  r.circuit = circuit_from_obj(obj.at("circuit"));
  r.depth = obj.at("depth").get<int>();
  for (const json& rep : obj.at("repetitions")) {
    r.repetitions.push_back({rep.at("delta_v").get<double>(), rep.at("delta_x").get<double>(),
                             rep.at("delta_g").get<double>()});
  }
  r.avg_delta_v = obj.at("avg_delta_v").get<double>();
  r.min_delta_v = obj.at("min_delta_v").get<double>();
  r.max_delta_v = obj.at("max_delta_v").get<double>();
  r.avg_delta_x = obj.at("avg_delta_x").get<double>();
  r.min_delta_x = obj.at("min_delta_x").get<double>();
  r.max_delta_x = obj.at("max_delta_x").get<double>();
  r.delta_g = obj.at("delta_g").get<double>();
  r.classification = mitigation_class_from_name(obj.at("classification").get<std::string>());
  for (const json& m : obj.value("matrices", json::array())) {
    r.matrices.push_back(matrix_from_obj(m));
  }
  return r;
}

}  // namespace

std::string circuit_to_json(const Circuit& c) { return circuit_to_obj(c).dump(2); }

Circuit circuit_from_json(const std::string& text) {
  return circuit_from_obj(json::parse(text));
}

std::string noise_model_to_json(const NoiseModel& noise) {
  json readout = json::array();
  for (const auto& m : noise.readout) {
    readout.push_back({{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}});
  }
  const json obj = {{"p1", noise.p1},
                    {"p2", noise.p2},
                    {"overrotation", noise.overrotation},
                    {"readout", std::move(readout)}};
  return obj.dump(2);
}

NoiseModel noise_model_from_json(const std::string& text) {
  const json obj = json::parse(text);
  NoiseModel noise;
  noise.p1 = obj.at("p1").get<double>();
  noise.p2 = obj.at("p2").get<double>();
  noise.overrotation = obj.at("overrotation").get<double>();
  for (const json& q : obj.value("readout", json::array())) {
    Eigen::Matrix2d m;
    m << q.at(0).at(0).get<double>(), q.at(0).at(1).get<double>(), q.at(1).at(0).get<double>(),
        q.at(1).at(1).get<double>();
    noise.readout.push_back(m);
  }
  return noise;
}

std::string distribution_to_json(const Distribution& d) { return distribution_to_obj(d).dump(2); }

Distribution distribution_from_json(const std::string& text) {
  return distribution_from_obj(json::parse(text));
}

std::string calibration_matrix_to_json(const CalibrationMatrix& m) {
  return matrix_to_obj(m).dump(2);
}

CalibrationMatrix calibration_matrix_from_json(const std::string& text) {
  return matrix_from_obj(json::parse(text));
}

std::string records_to_json(const std::vector<ExperimentRecord>& records) {
  json array = json::array();
  for (const auto& r : records) {
    array.push_back(record_to_obj(r));
  }
  return json{{"records", std::move(array)}}.dump(2);
}

std::vector<ExperimentRecord> records_from_json(const std::string& text) {
  const json obj = json::parse(text);
  std::vector<ExperimentRecord> records;
  for (const json& r : obj.at("records")) {
    records.push_back(record_from_obj(r));
  }
  return records;
}

std::string report_to_json(const std::vector<ExperimentRecord>& sorted_records, int positive,
                           int negative, int none) {
  json rows = json::array();
  for (const auto& r : sorted_records) {
    rows.push_back({{"experiment_id", r.experiment_id},
                    {"num_qubits", r.circuit.num_qubits},
                    {"depth", r.depth},
                    {"avg_delta_v", r.avg_delta_v},
                    {"min_delta_v", r.min_delta_v},
                    {"max_delta_v", r.max_delta_v},
                    {"avg_delta_x", r.avg_delta_x},
                    {"min_delta_x", r.min_delta_x},
                    {"max_delta_x", r.max_delta_x},
                    {"delta_g", r.delta_g},
                    {"classification", mitigation_class_name(r.classification)}});
  }
  const json obj = {{"rows", std::move(rows)},
                    {"summary",
                     {{"positive", positive}, {"negative", negative}, {"none", none}}}};
  return obj.dump(2);
}

std::string read_text_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open file for writing: " + path);
  }
  file << content;
  if (!file.good()) {
    throw std::runtime_error("failed while writing: " + path);
  }
}

}  // namespace gem
