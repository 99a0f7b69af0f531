#include "gem/mitigation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "gem/rng.hpp"

namespace gem {

namespace {

double residual_objective(const Eigen::MatrixXd& m, const Eigen::VectorXd& x,
                          const Eigen::VectorXd& v) {
  return (v - m * x).squaredNorm();
}

/// Equality-constrained least squares on the support set: minimize
/// ||v - M_F z||^2 subject to sum(z) = 1, zeros elsewhere. Solved through the
/// KKT system; a rank-revealing decomposition keeps degenerate supports from
/// blowing up.
Eigen::VectorXd solve_on_support(const Eigen::MatrixXd& m, const Eigen::VectorXd& v,
                                 const std::vector<Eigen::Index>& support) {
  const auto k = static_cast<Eigen::Index>(support.size());
  Eigen::MatrixXd cols(m.rows(), k);
  for (Eigen::Index i = 0; i < k; ++i) {
    cols.col(i) = m.col(support[static_cast<std::size_t>(i)]);
  }
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
  kkt.topLeftCorner(k, k) = 2.0 * cols.transpose() * cols;
  kkt.topRightCorner(k, 1).setOnes();
  kkt.bottomLeftCorner(1, k).setOnes();
  Eigen::VectorXd rhs(k + 1);
  rhs.head(k) = 2.0 * cols.transpose() * v;
  rhs[k] = 1.0;

  const Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
  Eigen::VectorXd z = Eigen::VectorXd::Zero(m.cols());
  for (Eigen::Index i = 0; i < k; ++i) {
    z[support[static_cast<std::size_t>(i)]] = sol[i];
  }
  return z;
}

/// Active-set refinement from a feasible point: alternates between the exact
/// equality-constrained solve on the current support and steps clipped at the
/// first coordinate to hit zero. Objective never increases; terminates at a
/// KKT point of the simplex-constrained problem.
Eigen::VectorXd active_set_polish(const Eigen::MatrixXd& m, const Eigen::VectorXd& v,
                                  Eigen::VectorXd x) {
  const Eigen::Index n = m.cols();
  const int max_rounds = static_cast<int>(8 * n + 16);

  std::vector<bool> in_support(static_cast<std::size_t>(n), false);
  bool any = false;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (x[i] > 1e-12) {
      in_support[static_cast<std::size_t>(i)] = true;
      any = true;
    }
  }
  if (!any) {
    Eigen::Index top = 0;
    x.maxCoeff(&top);
    in_support[static_cast<std::size_t>(top)] = true;
  }
  auto support_list = [&] {
    std::vector<Eigen::Index> list;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (in_support[static_cast<std::size_t>(i)]) list.push_back(i);
    }
    return list;
  };

  for (int round = 0; round < max_rounds; ++round) {
    const std::vector<Eigen::Index> support = support_list();
    const Eigen::VectorXd y = solve_on_support(m, v, support);

    if (y.minCoeff() >= -1e-12) {
      Eigen::VectorXd clipped = y.cwiseMax(0.0);
      clipped /= clipped.sum();
      if (residual_objective(m, clipped, v) <= residual_objective(m, x, v)) {
        x = std::move(clipped);
      }
      // KKT check: free coordinates share the multiplier; a bound coordinate
      // with reduced gradient below it would still improve the objective.
      const Eigen::VectorXd grad = 2.0 * m.transpose() * (m * x - v);
      double nu = 0.0;
      for (Eigen::Index i : support) nu += grad[i];
      nu /= static_cast<double>(support.size());
      Eigen::Index worst = -1;
      double worst_gap = -1e-10;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (in_support[static_cast<std::size_t>(i)]) continue;
        const double gap = grad[i] - nu;
        if (gap < worst_gap) {
          worst_gap = gap;
          worst = i;
        }
      }
      if (worst < 0) {
        return x;  // KKT point
      }
      in_support[static_cast<std::size_t>(worst)] = true;
      continue;
    }

    // Partial step toward the equality solution, stopping where the first
    // coordinate leaves the simplex; those coordinates drop out of the
    // support.
    double alpha = 1.0;
    for (Eigen::Index i : support) {
      if (y[i] < 0.0) {
        alpha = std::min(alpha, x[i] / (x[i] - y[i]));
      }
    }
    alpha = std::clamp(alpha, 0.0, 1.0);
    Eigen::VectorXd stepped = x + alpha * (y - x);
    stepped = stepped.cwiseMax(0.0);
    const double sum = stepped.sum();
    if (sum <= 0.0 || residual_objective(m, stepped / sum, v) > residual_objective(m, x, v)) {
      return x;  // numerical stall; keep the monotone guarantee
    }
    x = stepped / sum;
    for (Eigen::Index i : support) {
      if (x[i] <= 1e-12) {
        in_support[static_cast<std::size_t>(i)] = false;
      }
    }
    any = false;
    for (Eigen::Index i = 0; i < n; ++i) any = any || in_support[static_cast<std::size_t>(i)];
    if (!any) {
      Eigen::Index top = 0;
      x.maxCoeff(&top);
      in_support[static_cast<std::size_t>(top)] = true;
    }
  }
  return x;
}

struct RunResult {
  Eigen::VectorXd x;
  double objective = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// One projected-gradient run from a feasible start, polished at the end.
RunResult run_descent(const Eigen::MatrixXd& m, const Eigen::VectorXd& v, Eigen::VectorXd x,
                      double lipschitz, const SolverConfig& cfg) {
  RunResult out;
  const double step = lipschitz > 0.0 ? 1.0 / lipschitz : 0.0;
  double f = residual_objective(m, x, v);
  bool stalled = step == 0.0;

  int it = 0;
  for (; it < cfg.max_iterations && !stalled; ++it) {
    const Eigen::VectorXd grad = 2.0 * m.transpose() * (m * x - v);
    Eigen::VectorXd next = project_to_simplex(x - step * grad);
    const double f_next = residual_objective(m, next, v);
    if (f_next > f) {
      break;  // within rounding of a fixed point
    }
    const double improvement = f - f_next;
    x = std::move(next);
    f = f_next;
    if (improvement < cfg.tolerance) {
      stalled = true;
    }
  }

  Eigen::VectorXd polished = active_set_polish(m, v, x);
  const double f_polished = residual_objective(m, polished, v);
  if (f_polished <= f) {
    x = std::move(polished);
    f = f_polished;
  }

  out.x = std::move(x);
  out.objective = f;
  out.converged = stalled || it < cfg.max_iterations;
  out.iterations = it;
  return out;
}

}  // namespace

double objective(const CalibrationMatrix& m, const Distribution& x, const Distribution& v) {
  if (m.dim() != x.probs.size() || m.dim() != v.probs.size()) {
    throw std::invalid_argument("objective: dimension mismatch");
  }
  return residual_objective(m.entries, x.probs, v.probs);
}

Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& y) {
  const Eigen::Index n = y.size();
  std::vector<double> u(y.data(), y.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double running = 0.0;
  double tau = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    running += u[static_cast<std::size_t>(j)];
    const double candidate = (running - 1.0) / static_cast<double>(j + 1);
    if (u[static_cast<std::size_t>(j)] - candidate > 0.0) {
      tau = candidate;
    }
  }
  return (y.array() - tau).cwiseMax(0.0);
}

MitigationResult mitigate(const CalibrationMatrix& m, const Distribution& v,
                          const SolverConfig& cfg) {
  if (m.dim() != v.probs.size() || m.num_qubits != v.num_qubits) {
    throw std::invalid_argument("mitigate: dimension mismatch");
  }
  // Measured frequencies carry rounding from external sources; accept a looser
  // normalization than simulator-produced distributions.
  v.validate(1e-4, 1e-9);
  m.validate(1e-4);
  if (cfg.max_iterations < 1 || cfg.restarts < 1 || cfg.tolerance <= 0.0) {
    throw std::invalid_argument("mitigate: bad solver config");
  }

  const Eigen::Index n = m.dim();
  // Exact gradient Lipschitz constant 2 sigma_max(M)^2.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m.entries.transpose() * m.entries);
  const double lipschitz = 2.0 * eig.eigenvalues().maxCoeff();

  // The observed vector is always one starting point, so the result can never
  // be worse than leaving the data unmitigated.
  std::vector<Eigen::VectorXd> starts;
  starts.push_back(project_to_simplex(v.probs));
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(derive_seed(cfg.seed, {static_cast<std::uint64_t>(r)}));
    starts.push_back(random_simplex_point(n, rng));
  }

  MitigationResult best;
  bool have_best = false;
  for (const Eigen::VectorXd& start : starts) {
    RunResult run = run_descent(m.entries, v.probs, start, lipschitz, cfg);
    if (!have_best || run.objective < best.objective) {
      best.mitigated = Distribution{v.num_qubits, run.x};
      best.objective = run.objective;
      best.converged = run.converged;
      best.iterations = run.iterations;
      have_best = true;
    }
  }
  return best;
}

}  // namespace gem
