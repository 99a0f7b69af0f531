#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "gem/calibration.hpp"
#include "gem/distribution.hpp"

namespace gem {

struct SolverConfig {
  int max_iterations = 10000;
  double tolerance = 1e-12;  // objective-improvement stopping threshold
  std::uint64_t seed = 0;
  int restarts = 4;  // random simplex starts, in addition to the observed vector
};

struct MitigationResult {
  Distribution mitigated;
  double objective = 0.0;
  bool converged = true;
  int iterations = 0;
};

/// Residual objective sum_i (v_i - (M x)_i)^2.
double objective(const CalibrationMatrix& m, const Distribution& x, const Distribution& v);

/// Euclidean projection onto the probability simplex (sort-based).
Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& y);

/// Feasible minimizer of the residual objective over the probability simplex.
/// Projected gradient descent with monotone objective, refined to a KKT point
/// by an active-set step; the best solution over the random restarts and the
/// observed vector itself is returned. Deterministic for a fixed config. Never
/// throws on non-convergence: the best feasible iterate is returned with
/// `converged` cleared.
MitigationResult mitigate(const CalibrationMatrix& m, const Distribution& v,
                          const SolverConfig& cfg = {});

}  // namespace gem
