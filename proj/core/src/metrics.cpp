#include "gem/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace gem {

namespace {
const std::array<std::string, 3> kClassNames = {"Positive", "Negative", "None"};
}

const std::string& mitigation_class_name(MitigationClass c) {
  return kClassNames[static_cast<int>(c)];
}

MitigationClass mitigation_class_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kClassNames.size(); ++i) {
    if (kClassNames[i] == name) {
      return static_cast<MitigationClass>(i);
    }
  }
  throw std::invalid_argument("unknown classification: " + name);
}

double rms_error(const Distribution& a, const Distribution& s) {
  if (a.probs.size() != s.probs.size()) {
    throw std::invalid_argument("rms_error: width mismatch");
  }
  return (a.probs - s.probs).norm();
}

std::vector<MitigationOutcome> classify(std::vector<MitigationOutcome> outcomes) {
  if (outcomes.empty()) {
    throw std::invalid_argument("classify: no outcomes");
  }
  double max_delta_v = 0.0;
  for (const auto& o : outcomes) {
    max_delta_v = std::max(max_delta_v, o.delta_v);
  }
  const double threshold = 0.03 * max_delta_v;
  for (auto& o : outcomes) {
    if (std::abs(o.delta_g) < threshold || o.delta_g == 0.0) {
      o.classification = MitigationClass::None;
    } else if (o.delta_g > 0.0) {
      o.classification = MitigationClass::Positive;
    } else {
      o.classification = MitigationClass::Negative;
    }
  }
  return outcomes;
}

double column_distinguishability(const CalibrationMatrix& m) {
  const Eigen::Index dim = m.dim();
  double min_distance = std::numeric_limits<double>::infinity();
  for (Eigen::Index a = 0; a < dim; ++a) {
    for (Eigen::Index b = a + 1; b < dim; ++b) {
      min_distance =
          std::min(min_distance, (m.entries.col(a) - m.entries.col(b)).lpNorm<1>() / 2.0);
    }
  }
  return dim > 1 ? min_distance : 0.0;
}

double condition_number(const CalibrationMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.entries);
  const auto& sv = svd.singularValues();
  const double smallest = sv[sv.size() - 1];
  if (smallest <= 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return sv[0] / smallest;
}

}  // namespace gem
