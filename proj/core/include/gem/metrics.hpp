#pragma once

#include <string>
#include <vector>

#include "gem/calibration.hpp"
#include "gem/distribution.hpp"

namespace gem {

enum class MitigationClass { Positive, Negative, None };

const std::string& mitigation_class_name(MitigationClass c);
MitigationClass mitigation_class_from_name(const std::string& name);

/// Per-experiment error summary: delta_v/delta_x are the Euclidean distances
/// of the raw and mitigated distributions from the ideal one (averaged over
/// repetitions), delta_g their difference.
struct MitigationOutcome {
  double delta_v = 0.0;
  double delta_x = 0.0;
  double delta_g = 0.0;
  MitigationClass classification = MitigationClass::None;
};

/// Euclidean distance sqrt(sum_k (a_k - s_k)^2); the sum is not divided by
/// the number of states.
double rms_error(const Distribution& a, const Distribution& s);

/// Labels each outcome against the shared threshold
/// t = 0.03 * max over experiments of average delta_v:
/// None when |delta_g| < t, otherwise the sign of delta_g decides.
std::vector<MitigationOutcome> classify(std::vector<MitigationOutcome> outcomes);

/// Minimum pairwise L1 distance between columns, halved: 0 when the device
/// output was uniform regardless of input, 1 for perfectly distinct columns.
double column_distinguishability(const CalibrationMatrix& m);

/// Spectral condition number diagnostic for near-singular calibration data.
double condition_number(const CalibrationMatrix& m);

}  // namespace gem
