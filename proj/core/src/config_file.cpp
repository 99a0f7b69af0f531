#include "gem/config_file.hpp"

#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gem/serialization.hpp"

namespace gem {

namespace {

struct Value {
  enum class Type { Number, String, Boolean, Array };
  Type type = Type::Number;
  double number = 0.0;
  std::string text;
  bool boolean = false;
  std::vector<Value> array;
};

class ValueParser {
 public:
  explicit ValueParser(const std::string& input) : input_(input) {}

  Value parse() {
    Value v = parse_value();
    skip_space();
    if (pos_ != input_.size()) {
      fail("trailing characters after value");
    }
    return v;
  }

 private:
  void fail(const std::string& what) const {
    throw std::invalid_argument("config value error: " + what + " in '" + input_ + "'");
  }

  void skip_space() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) {
      ++pos_;
    }
  }

  Value parse_value() {
    skip_space();
    if (pos_ >= input_.size()) {
      fail("empty value");
    }
    const char c = input_[pos_];
    if (c == '[') {
      return parse_array();
    }
    if (c == '"') {
      return parse_string();
    }
    return parse_scalar();
  }

  Value parse_array() {
    Value v;
    v.type = Value::Type::Array;
    ++pos_;  // '['
    skip_space();
    if (pos_ < input_.size() && input_[pos_] == ']') {
      ++pos_;
      return v;
    }
    while (true) {
      v.array.push_back(parse_value());
      skip_space();
      if (pos_ >= input_.size()) {
        fail("unterminated array");
      }
      if (input_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (input_[pos_] == ']') {
        ++pos_;
        return v;
      }
      fail("expected ',' or ']'");
    }
  }

  Value parse_string() {
    Value v;
    v.type = Value::Type::String;
    ++pos_;  // '"'
    while (pos_ < input_.size() && input_[pos_] != '"') {
      v.text += input_[pos_++];
    }
    if (pos_ >= input_.size()) {
      fail("unterminated string");
    }
    ++pos_;  // closing '"'
    return v;
  }

  Value parse_scalar() {
    std::size_t end = pos_;
    while (end < input_.size() && input_[end] != ',' && input_[end] != ']' &&
           !std::isspace(static_cast<unsigned char>(input_[end]))) {
      ++end;
    }
    const std::string token = input_.substr(pos_, end - pos_);
    pos_ = end;
    Value v;
    if (token == "true" || token == "false") {
      v.type = Value::Type::Boolean;
      v.boolean = token == "true";
      return v;
    }
    std::size_t used = 0;
    try {
      v.number = std::stod(token, &used);
    } catch (const std::exception&) {
      fail("malformed scalar '" + token + "'");
    }
    if (used != token.size()) {
      fail("malformed number '" + token + "'");
    }
    v.type = Value::Type::Number;
    return v;
  }

  const std::string& input_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

std::map<std::string, Value> parse_tables(const std::string& text) {
  std::map<std::string, Value> values;
  std::istringstream stream(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::size_t comment = line.find('#');
    if (comment != std::string::npos) {
      line = line.substr(0, comment);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw std::invalid_argument("config line " + std::to_string(line_no) +
                                    ": malformed section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string full_key = section.empty() ? key : section + "." + key;
    if (values.count(full_key)) {
      throw std::invalid_argument("config: duplicate key '" + full_key + "'");
    }
    values.emplace(full_key, ValueParser(trim(line.substr(eq + 1))).parse());
  }
  return values;
}

long as_integer(const Value& v, const std::string& key) {
  if (v.type != Value::Type::Number || v.number != static_cast<double>(static_cast<long>(v.number))) {
    throw std::invalid_argument("config key '" + key + "' must be an integer");
  }
  return static_cast<long>(v.number);
}

double as_number(const Value& v, const std::string& key) {
  if (v.type != Value::Type::Number) {
    throw std::invalid_argument("config key '" + key + "' must be a number");
  }
  return v.number;
}

const std::string& as_string(const Value& v, const std::string& key) {
  if (v.type != Value::Type::String) {
    throw std::invalid_argument("config key '" + key + "' must be a string");
  }
  return v.text;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& text) {
  std::map<std::string, Value> values = parse_tables(text);
  ExperimentConfig cfg;

  auto take = [&](const std::string& key) -> const Value* {
    const auto it = values.find(key);
    if (it == values.end()) {
      return nullptr;
    }
    return &it->second;
  };
  std::vector<std::string> consumed;
  auto consume = [&](const std::string& key) -> const Value* {
    const Value* v = take(key);
    if (v) {
      consumed.push_back(key);
    }
    return v;
  };

  if (const Value* v = consume("num_qubits")) cfg.num_qubits = static_cast<int>(as_integer(*v, "num_qubits"));
  if (const Value* v = consume("depth_min")) cfg.depth_min = static_cast<int>(as_integer(*v, "depth_min"));
  if (const Value* v = consume("depth_max")) cfg.depth_max = static_cast<int>(as_integer(*v, "depth_max"));
  if (const Value* v = consume("num_circuits")) cfg.num_circuits = static_cast<int>(as_integer(*v, "num_circuits"));
  if (const Value* v = consume("repetitions")) cfg.repetitions = static_cast<int>(as_integer(*v, "repetitions"));
  if (const Value* v = consume("shots_device")) cfg.shots_device = as_integer(*v, "shots_device");
  if (const Value* v = consume("shots_simulator")) cfg.shots_simulator = as_integer(*v, "shots_simulator");
  if (const Value* v = consume("seed")) cfg.seed = static_cast<std::uint64_t>(as_integer(*v, "seed"));
  if (const Value* v = consume("method")) cfg.method = method_from_name(as_string(*v, "method"));
  if (const Value* v = consume("reduced_columns")) {
    cfg.reduced_columns = static_cast<int>(as_integer(*v, "reduced_columns"));
  }
  if (const Value* v = consume("gate_set")) {
    if (v->type != Value::Type::Array) {
      throw std::invalid_argument("config key 'gate_set' must be an array of gate names");
    }
    cfg.gate_set.clear();
    for (const Value& g : v->array) {
      cfg.gate_set.push_back(gate_kind_from_name(as_string(g, "gate_set")));
    }
  }
  if (const Value* v = consume("coupling.edges")) {
    if (v->type != Value::Type::Array) {
      throw std::invalid_argument("config key 'coupling.edges' must be an array of pairs");
    }
    std::vector<std::pair<int, int>> edges;
    for (const Value& e : v->array) {
      if (e.type != Value::Type::Array || e.array.size() != 2) {
        throw std::invalid_argument("coupling edge must be a [control, target] pair");
      }
      edges.emplace_back(static_cast<int>(as_integer(e.array[0], "coupling.edges")),
                         static_cast<int>(as_integer(e.array[1], "coupling.edges")));
    }
    cfg.coupling = CouplingMap(std::move(edges));
  }

  const bool has_noise = take("noise.p1") || take("noise.p2") || take("noise.overrotation") ||
                         take("noise.readout");
  if (has_noise) {
    NoiseModel noise;
    if (const Value* v = consume("noise.p1")) noise.p1 = as_number(*v, "noise.p1");
    if (const Value* v = consume("noise.p2")) noise.p2 = as_number(*v, "noise.p2");
    if (const Value* v = consume("noise.overrotation")) {
      noise.overrotation = as_number(*v, "noise.overrotation");
    }
    if (const Value* v = consume("noise.readout")) {
      if (v->type != Value::Type::Array) {
        throw std::invalid_argument("noise.readout must be an array of 2x2 matrices");
      }
      for (const Value& q : v->array) {
        if (q.type != Value::Type::Array || q.array.size() != 2 ||
            q.array[0].array.size() != 2 || q.array[1].array.size() != 2) {
          throw std::invalid_argument("noise.readout entries must be 2x2 matrices");
        }
        Eigen::Matrix2d m;
        m << as_number(q.array[0].array[0], "readout"), as_number(q.array[0].array[1], "readout"),
            as_number(q.array[1].array[0], "readout"), as_number(q.array[1].array[1], "readout");
        noise.readout.push_back(m);
      }
    }
    cfg.noise = std::move(noise);
  }

  if (const Value* v = consume("solver.max_iterations")) {
    cfg.solver.max_iterations = static_cast<int>(as_integer(*v, "solver.max_iterations"));
  }
  if (const Value* v = consume("solver.tolerance")) {
    cfg.solver.tolerance = as_number(*v, "solver.tolerance");
  }
  if (const Value* v = consume("solver.restarts")) {
    cfg.solver.restarts = static_cast<int>(as_integer(*v, "solver.restarts"));
  }

  for (const std::string& key : consumed) {
    values.erase(key);
  }
  if (!values.empty()) {
    throw std::invalid_argument("config: unknown key '" + values.begin()->first + "'");
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  return parse_experiment_config(read_text_file(path));
}

std::string experiment_config_to_text(const ExperimentConfig& cfg) {
  std::ostringstream out;
  auto real = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  out << "num_qubits = " << cfg.num_qubits << "\n";
  out << "depth_min = " << cfg.depth_min << "\n";
  out << "depth_max = " << cfg.depth_max << "\n";
  out << "num_circuits = " << cfg.num_circuits << "\n";
  out << "repetitions = " << cfg.repetitions << "\n";
  out << "shots_device = " << cfg.shots_device << "\n";
  out << "shots_simulator = " << cfg.shots_simulator << "\n";
  out << "gate_set = [";
  for (std::size_t i = 0; i < cfg.gate_set.size(); ++i) {
    out << (i ? ", " : "") << '"' << gate_name(cfg.gate_set[i]) << '"';
  }
  out << "]\n";
  out << "method = \"" << method_name(cfg.method) << "\"\n";
  out << "seed = " << cfg.seed << "\n";
  if (cfg.method == Method::Reduced) {
    out << "reduced_columns = " << cfg.reduced_columns << "\n";
  }
  if (!cfg.coupling.empty()) {
    out << "\n[coupling]\nedges = [";
    for (std::size_t i = 0; i < cfg.coupling.edges.size(); ++i) {
      const auto& [c, t] = cfg.coupling.edges[i];
      out << (i ? ", " : "") << '[' << c << ", " << t << ']';
    }
    out << "]\n";
  }
  if (cfg.noise) {
    out << "\n[noise]\n";
    out << "p1 = " << real(cfg.noise->p1) << "\n";
    out << "p2 = " << real(cfg.noise->p2) << "\n";
    out << "overrotation = " << real(cfg.noise->overrotation) << "\n";
    if (cfg.noise->has_readout()) {
      out << "readout = [";
      for (std::size_t q = 0; q < cfg.noise->readout.size(); ++q) {
        const auto& m = cfg.noise->readout[q];
        out << (q ? ", " : "") << "[[" << real(m(0, 0)) << ", " << real(m(0, 1)) << "], ["
            << real(m(1, 0)) << ", " << real(m(1, 1)) << "]]";
      }
      out << "]\n";
    }
  }
  out << "\n[solver]\n";
  out << "max_iterations = " << cfg.solver.max_iterations << "\n";
  out << "tolerance = " << real(cfg.solver.tolerance) << "\n";
  out << "restarts = " << cfg.solver.restarts << "\n";
  return out.str();
}

}  // namespace gem
