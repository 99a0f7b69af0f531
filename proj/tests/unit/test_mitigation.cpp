#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "gem/mitigation.hpp"
#include "gem/rng.hpp"
#include "support/grid_oracle.hpp"
#include "support/reference_data.hpp"

using namespace gem;

namespace {

CalibrationMatrix skewed_matrix() {
  Eigen::MatrixXd m(2, 2);
  m << 0.9, 0.2, 0.1, 0.8;
  return {1, CalibrationKind::QEM, m};
}

CalibrationMatrix random_stochastic_matrix(int num_qubits, Rng& rng) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
  Eigen::MatrixXd entries(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    entries.col(j) = random_simplex_point(dim, rng);
  }
  return {num_qubits, CalibrationKind::QEM, std::move(entries)};
}

Distribution random_distribution(int num_qubits, Rng& rng) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
  return {num_qubits, random_simplex_point(dim, rng)};
}

}  // namespace

TEST_CASE("objective evaluates the residual sum of squares") {
  const CalibrationMatrix identity = CalibrationMatrix::identity(1, CalibrationKind::QEM);
  const Distribution v(1, Eigen::Vector2d(1.0, 0.0));
  CHECK(objective(identity, v, v) == 0.0);
  CHECK(objective(identity, Distribution(1, Eigen::Vector2d(0.0, 1.0)), v) == 2.0);

  CalibrationMatrix sample(2, CalibrationKind::QEM, testing::measured_calibration_matrix());
  const Distribution e1 = Distribution::delta(2, 0);
  const Distribution col1(2, sample.entries.col(0));
  CHECK(objective(sample, e1, col1) == 0.0);
}

TEST_CASE("simplex projection") {
  const Eigen::VectorXd inside = project_to_simplex(Eigen::Vector2d(0.3, 0.7));
  CHECK(inside.isApprox(Eigen::Vector2d(0.3, 0.7), 1e-15));

  const Eigen::VectorXd clipped = project_to_simplex(Eigen::Vector2d(8.0 / 7.0, -1.0 / 7.0));
  CHECK(clipped[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(clipped[1] == doctest::Approx(0.0).epsilon(1e-12));

  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd y(4);
    for (int i = 0; i < 4; ++i) y[i] = rng.uniform(-2.0, 2.0);
    const Eigen::VectorXd p = project_to_simplex(y);
    CHECK(p.minCoeff() >= 0.0);
    CHECK(std::abs(p.sum() - 1.0) < 1e-12);
    // nearest point: random feasible candidates never sit closer to y
    const Eigen::VectorXd candidate = random_simplex_point(4, rng);
    CHECK((y - p).squaredNorm() <= (y - candidate).squaredNorm() + 1e-12);
  }
}

TEST_CASE("identity matrix returns the observation") {
  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const Distribution v = random_distribution(2, rng);
    const MitigationResult res =
        mitigate(CalibrationMatrix::identity(2, CalibrationKind::QEM), v);
    CHECK((res.mitigated.probs - v.probs).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("recovers the source of a forward-multiplied observation") {
  // V = M (0.7, 0.3) has the unique simplex minimizer (0.7, 0.3); frozen from
  // the grid oracle at step 1e-4 with local refinement.
  const CalibrationMatrix m = skewed_matrix();
  const Eigen::Vector2d truth(0.7, 0.3);
  const Distribution v(1, m.entries * truth);
  CHECK(v.probs[0] == doctest::Approx(0.69).epsilon(1e-15));
  CHECK(v.probs[1] == doctest::Approx(0.31).epsilon(1e-15));

  const testing::GridPoint oracle = testing::grid_search_oracle(m.entries, v.probs);
  CHECK((oracle.x - truth).cwiseAbs().maxCoeff() < 2e-5);

  const MitigationResult res = mitigate(m, v);
  CHECK((res.mitigated.probs - truth).cwiseAbs().maxCoeff() < 1e-6);
  CHECK(res.objective <= oracle.objective + 1e-6);
}

TEST_CASE("clips to the boundary when the inverse leaves the simplex") {
  // M^-1 (1,0) = (8/7, -1/7); the feasible minimizer sits at the vertex (1,0)
  const CalibrationMatrix m = skewed_matrix();
  const Distribution v(1, Eigen::Vector2d(1.0, 0.0));

  const testing::GridPoint oracle = testing::grid_search_oracle(m.entries, v.probs);
  CHECK(oracle.x[0] == doctest::Approx(1.0).epsilon(1e-9));

  const MitigationResult res = mitigate(m, v);
  CHECK(res.mitigated.probs[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(res.mitigated.probs[1] == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("closed-form line minimum agrees with naive enumeration") {
  Rng rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    const CalibrationMatrix m = random_stochastic_matrix(trial % 2 == 0 ? 1 : 2, rng);
    const Distribution v = random_distribution(trial % 2 == 0 ? 1 : 2, rng);
    const double step = 1e-2;
    const auto fast = testing::simplex_grid_minimum(m.entries, v.probs, step);
    const auto naive = testing::naive_grid_minimum(m.entries, v.probs, step);
    CHECK(fast.objective == doctest::Approx(naive.objective).epsilon(1e-12));
  }
}

TEST_CASE("matches the grid oracle on random instances") {
  Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = trial % 2 == 0 ? 1 : 2;
    const CalibrationMatrix m = random_stochastic_matrix(n, rng);
    const Distribution v = random_distribution(n, rng);
    const MitigationResult res = mitigate(m, v);
    const testing::GridPoint oracle = testing::grid_search_oracle(m.entries, v.probs);
    CHECK(res.objective <= oracle.objective + 1e-6);
    CHECK(res.mitigated.probs.minCoeff() >= -1e-9);
    CHECK(std::abs(res.mitigated.probs.sum() - 1.0) < 1e-9);
  }
}

TEST_CASE("exact recovery for nonsingular matrices with interior solutions") {
  Rng rng(53);
  int accepted = 0;
  while (accepted < 20) {
    const CalibrationMatrix m = random_stochastic_matrix(2, rng);
    Eigen::VectorXd x_true = random_simplex_point(4, rng);
    if (x_true.minCoeff() < 0.05) continue;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m.entries);
    if (!lu.isInvertible()) continue;
    ++accepted;
    const Distribution v(2, m.entries * x_true);
    const MitigationResult res = mitigate(m, v);
    CHECK((res.mitigated.probs - x_true).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("never worse than the unmitigated observation") {
  Rng rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const CalibrationMatrix m = random_stochastic_matrix(2, rng);
    const Distribution v = random_distribution(2, rng);
    const MitigationResult res = mitigate(m, v);
    CHECK(res.objective <= objective(m, v, v) + 1e-12);
  }
}

TEST_CASE("deterministic for identical inputs") {
  Rng rng(61);
  const CalibrationMatrix m = random_stochastic_matrix(2, rng);
  const Distribution v = random_distribution(2, rng);
  SolverConfig cfg;
  cfg.seed = 77;
  const MitigationResult a = mitigate(m, v, cfg);
  const MitigationResult b = mitigate(m, v, cfg);
  CHECK(a.mitigated.probs == b.mitigated.probs);
  CHECK(a.objective == b.objective);
}

TEST_CASE("basis relabeling permutes the solution") {
  Rng rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const CalibrationMatrix m = random_stochastic_matrix(1, rng);
    const Distribution v = random_distribution(1, rng);
    Eigen::PermutationMatrix<2> perm;
    perm.setIdentity();
    perm.applyTranspositionOnTheRight(0, 1);

    const CalibrationMatrix m_rel(1, CalibrationKind::QEM,
                                  perm * m.entries * perm.transpose());
    const Distribution v_rel(1, perm * v.probs);
    const MitigationResult base = mitigate(m, v);
    const MitigationResult relabeled = mitigate(m_rel, v_rel);
    CHECK((relabeled.mitigated.probs - perm * base.mitigated.probs).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("uniform matrix leaves the objective flat") {
  const CalibrationMatrix uniform(1, CalibrationKind::QEM,
                                  Eigen::MatrixXd::Constant(2, 2, 0.5));
  const Distribution v(1, Eigen::Vector2d(0.6, 0.4));
  const double f1 = objective(uniform, Distribution(1, Eigen::Vector2d(1.0, 0.0)), v);
  const double f2 = objective(uniform, Distribution(1, Eigen::Vector2d(0.25, 0.75)), v);
  CHECK(f1 == doctest::Approx(f2).epsilon(1e-15));
  // the solver still returns a feasible point without blowing up
  const MitigationResult res = mitigate(uniform, v);
  CHECK(std::abs(res.mitigated.probs.sum() - 1.0) < 1e-9);
}

TEST_CASE("rejects malformed inputs but flags non-convergence instead of throwing") {
  const CalibrationMatrix m = skewed_matrix();
  CHECK_THROWS_AS(mitigate(m, Distribution(1, Eigen::Vector2d(0.9, 0.3))),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      mitigate(CalibrationMatrix::identity(2, CalibrationKind::QEM),
               Distribution(1, Eigen::Vector2d(0.5, 0.5))),
      std::invalid_argument);

  SolverConfig tight;
  tight.max_iterations = 1;
  tight.tolerance = 1e-300;  // unreachable improvement threshold
  // interior optimum, so one projected step cannot hit an exact fixed point
  const Distribution v(1, m.entries * Eigen::Vector2d(0.7, 0.3));
  const MitigationResult res = mitigate(m, v, tight);
  CHECK(!res.converged);
  CHECK(std::abs(res.mitigated.probs.sum() - 1.0) < 1e-9);
  CHECK(res.mitigated.probs.minCoeff() >= 0.0);
}
