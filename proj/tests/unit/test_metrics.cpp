#include <doctest.h>

#include <cmath>

#include "gem/metrics.hpp"
#include "gem/rng.hpp"
#include "support/reference_data.hpp"

using namespace gem;

namespace {

Distribution dist(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  int n = 0;
  while ((Eigen::Index{1} << n) < v.size()) ++n;
  return {n, std::move(v)};
}

}  // namespace

TEST_CASE("rms_error is the euclidean distance of the distributions") {
  CHECK(rms_error(dist({0.5, 0.5}), dist({0.5, 0.5})) == 0.0);
  CHECK(rms_error(dist({1, 0}), dist({0, 1})) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(rms_error(dist({0.75, 0.25}), dist({0.5, 0.5})) ==
        doctest::Approx(std::sqrt(0.125)).epsilon(1e-12));
  CHECK_THROWS_AS(rms_error(dist({1, 0}), dist({1, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("rms_error metric properties") {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const Distribution a{2, random_simplex_point(4, rng)};
    const Distribution b{2, random_simplex_point(4, rng)};
    const Distribution c{2, random_simplex_point(4, rng)};
    CHECK(rms_error(a, b) == rms_error(b, a));
    CHECK(rms_error(a, b) >= 0.0);
    CHECK(rms_error(a, c) <= rms_error(a, b) + rms_error(b, c) + 1e-12);
    CHECK(rms_error(a, a) == 0.0);
  }
}

TEST_CASE("classification against the three-percent threshold") {
  std::vector<MitigationOutcome> outcomes;
  outcomes.push_back({0.5, 0.1, 0.4, MitigationClass::None});    // strong improvement
  outcomes.push_back({0.4, 0.39, 0.01, MitigationClass::None});  // below threshold
  outcomes.push_back({0.2, 0.3, -0.1, MitigationClass::None});   // worsened

  const auto classified = classify(outcomes);
  // threshold = 0.03 * 0.5 = 0.015
  CHECK(classified[0].classification == MitigationClass::Positive);
  CHECK(classified[1].classification == MitigationClass::None);
  CHECK(classified[2].classification == MitigationClass::Negative);

  CHECK_THROWS_AS(classify({}), std::invalid_argument);
}

TEST_CASE("negative deviations below threshold also count as none") {
  std::vector<MitigationOutcome> outcomes;
  outcomes.push_back({0.5, 0.1, 0.4, MitigationClass::None});
  outcomes.push_back({0.3, 0.31, -0.01, MitigationClass::None});  // |dg| < 0.015
  const auto classified = classify(outcomes);
  CHECK(classified[1].classification == MitigationClass::None);
}

TEST_CASE("classification is invariant under uniform rescaling") {
  Rng rng(73);
  std::vector<MitigationOutcome> outcomes;
  for (int i = 0; i < 20; ++i) {
    const double dv = rng.uniform(0.0, 0.6);
    const double dx = rng.uniform(0.0, 0.6);
    outcomes.push_back({dv, dx, dv - dx, MitigationClass::None});
  }
  const auto base = classify(outcomes);
  std::vector<MitigationOutcome> scaled = outcomes;
  for (auto& o : scaled) {
    o.delta_v *= 3.5;
    o.delta_x *= 3.5;
    o.delta_g *= 3.5;
  }
  const auto rescaled = classify(scaled);
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(base[i].classification == rescaled[i].classification);
  }
}

TEST_CASE("column distinguishability spans uniform to identity") {
  CHECK(column_distinguishability(CalibrationMatrix::identity(2, CalibrationKind::QEM)) == 1.0);

  const CalibrationMatrix uniform(2, CalibrationKind::QEM,
                                  Eigen::MatrixXd::Constant(4, 4, 0.25));
  CHECK(column_distinguishability(uniform) == 0.0);

  const CalibrationMatrix sample(2, CalibrationKind::QEM,
                                 gem::testing::measured_calibration_matrix());
  CHECK(column_distinguishability(sample) > 0.3);
  CHECK(column_distinguishability(sample) < 1.0);
}

TEST_CASE("condition number diagnoses singular calibration data") {
  CHECK(condition_number(CalibrationMatrix::identity(2, CalibrationKind::QEM)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const CalibrationMatrix uniform(1, CalibrationKind::QEM,
                                  Eigen::MatrixXd::Constant(2, 2, 0.5));
  CHECK(std::isinf(condition_number(uniform)));
}
