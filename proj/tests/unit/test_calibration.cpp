#include <doctest.h>

#include <cmath>

#include "gem/basis.hpp"
#include "gem/calibration.hpp"
#include "gem/rng.hpp"
#include "gem/simulator.hpp"
#include "gem/transpile.hpp"
#include "support/reference_data.hpp"

using namespace gem;

namespace {

Distribution measured(const Circuit& c, const std::optional<NoiseModel>& noise,
                      std::uint64_t seed, long shots = 8192) {
  return sample_counts(c, shots, noise, seed);
}

Eigen::Matrix2d skewed_readout() {
  Eigen::Matrix2d m;
  m << 0.9, 0.2, 0.1, 0.8;
  return m;
}

}  // namespace

TEST_CASE("QEM calibration circuits are bare preparations in ascending order") {
  const auto circuits = qem_calibration_circuits(2);
  REQUIRE(circuits.size() == 4);
  CHECK(circuits[0].gates == std::vector<Gate>{Gate::measure(0), Gate::measure(1)});
  CHECK(circuits[1].gates ==
        std::vector<Gate>{Gate::x(1), Gate::measure(0), Gate::measure(1)});
  CHECK(circuits[2].gates ==
        std::vector<Gate>{Gate::x(0), Gate::measure(0), Gate::measure(1)});
  CHECK(circuits[3].gates ==
        std::vector<Gate>{Gate::x(0), Gate::x(1), Gate::measure(0), Gate::measure(1)});
  for (std::size_t k = 0; k < circuits.size(); ++k) {
    const Distribution out = exact_probabilities(circuits[k]);
    CHECK(out.probs[static_cast<Eigen::Index>(k)] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("half-and-inverse calibration circuits for the [H, Y] example") {
  const Circuit target(1, {Gate::h(0), Gate::y(0)});
  const auto [first, second] = gem_calibration_circuits(target);
  REQUIRE(first.size() == 2);
  REQUIRE(second.size() == 2);

  CHECK(first[0].gates == std::vector<Gate>{Gate::h(0), Gate::h(0), Gate::measure(0)});
  CHECK(first[1].gates ==
        std::vector<Gate>{Gate::x(0), Gate::h(0), Gate::h(0), Gate::measure(0)});
  CHECK(second[0].gates == std::vector<Gate>{Gate::y(0), Gate::y(0), Gate::measure(0)});
  CHECK(second[1].gates ==
        std::vector<Gate>{Gate::x(0), Gate::y(0), Gate::y(0), Gate::measure(0)});
}

TEST_CASE("calibration circuits of an empty target reduce to preparations") {
  const auto [first, second] = gem_calibration_circuits(Circuit(2));
  const auto qem = qem_calibration_circuits(2);
  for (std::size_t k = 0; k < qem.size(); ++k) {
    CHECK(first[k].gates == qem[k].gates);
    CHECK(second[k].gates == qem[k].gates);
  }
}

TEST_CASE("calibration circuits compose to the identity on a noiseless device") {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c(2);
    for (int g = 0; g < 12; ++g) {
      static const GateKind kinds[] = {GateKind::H, GateKind::S, GateKind::T, GateKind::X,
                                       GateKind::Y, GateKind::Z, GateKind::CNOT};
      const GateKind kind = kinds[rng.uniform_index(std::size(kinds))];
      if (kind == GateKind::CNOT) {
        const bool flip = rng.uniform_index(2) == 1;
        c.append(Gate::cnot(flip ? 1 : 0, flip ? 0 : 1));
      } else {
        c.append(Gate(kind, {static_cast<int>(rng.uniform_index(2))}));
      }
    }
    const auto [first, second] = gem_calibration_circuits(c);
    for (const auto& list : {first, second}) {
      for (std::size_t k = 0; k < list.size(); ++k) {
        const Distribution out = exact_probabilities(list[k]);
        CHECK(out.probs[static_cast<Eigen::Index>(k)] == doctest::Approx(1.0).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("calibration circuit depth tracks the target circuit") {
  Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c(2);
    const int gates = 4 + static_cast<int>(rng.uniform_index(30));
    for (int g = 0; g < gates; ++g) {
      c.append(Gate(GateKind::T, {static_cast<int>(rng.uniform_index(2))}));
    }
    const int d = depth(c);
    const auto [first, second] = gem_calibration_circuits(c);
    // the identity block alone stays within one layer of the target depth;
    // the preparation layer can add one more
    for (const auto& list : {first, second}) {
      for (const Circuit& cal : list) {
        const int cal_depth = depth(cal);
        CHECK(cal_depth >= d - 1);
        CHECK(cal_depth <= d + 2);
      }
    }
  }
}

TEST_CASE("build_matrix places column j at prepared state j") {
  std::vector<Distribution> columns;
  for (std::size_t k = 0; k < 4; ++k) {
    columns.push_back(Distribution::delta(2, k));
  }
  const CalibrationMatrix m = build_matrix(columns, CalibrationKind::QEM);
  CHECK(m.entries == Eigen::MatrixXd::Identity(4, 4));
  m.validate();

  Eigen::VectorXd left(2), right(2);
  left << 0.75, 0.25;
  right << 0.4, 0.6;
  const CalibrationMatrix m1 =
      build_matrix({Distribution{1, left}, Distribution{1, right}}, CalibrationKind::GemHalf1);
  CHECK(m1.entries(0, 0) == 0.75);  // first circuit fills the left column
  CHECK(m1.entries(1, 0) == 0.25);
  CHECK(m1.entries(0, 1) == 0.4);
  CHECK(m1.entries(1, 1) == 0.6);

  CHECK_THROWS_AS(build_matrix({Distribution::delta(1, 0)}, CalibrationKind::QEM),
                  std::invalid_argument);
}

TEST_CASE("the measured example matrix is column-stochastic to its rounding") {
  CalibrationMatrix m(2, CalibrationKind::QEM, testing::measured_calibration_matrix());
  m.validate(1e-4);  // columns carry seven-digit rounding
  CHECK_THROWS_AS(m.validate(1e-9), std::invalid_argument);
  for (Eigen::Index j = 0; j < 4; ++j) {
    CHECK(std::abs(m.entries.col(j).sum() - 1.0) < 1e-4);
  }
}

TEST_CASE("combine averages entrywise") {
  const CalibrationMatrix identity = CalibrationMatrix::identity(1, CalibrationKind::GemHalf1);
  CHECK(combine(identity, identity).entries == Eigen::MatrixXd::Identity(2, 2));
  CHECK(combine(identity, identity).kind == CalibrationKind::GemCombined);

  Eigen::MatrixXd a(2, 2), b(2, 2);
  a << 0.9, 0.2, 0.1, 0.8;
  b << 0.7, 0.4, 0.3, 0.6;
  const CalibrationMatrix ma(1, CalibrationKind::GemHalf1, a);
  const CalibrationMatrix mb(1, CalibrationKind::GemHalf2, b);
  CHECK(combine(ma, mb).entries(0, 0) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(combine(ma, ma).entries == a);
  CHECK(combine(ma, mb).entries == combine(mb, ma).entries);

  // entrywise between the arguments' bounds
  const Eigen::MatrixXd c = combine(ma, mb).entries;
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      CHECK(c(i, j) >= std::min(a(i, j), b(i, j)));
      CHECK(c(i, j) <= std::max(a(i, j), b(i, j)));
    }
  }
  combine(ma, mb).validate(1e-12);
}

TEST_CASE("reduced_matrix identity-fills missing columns") {
  CHECK(reduced_matrix({}, 2).entries == Eigen::MatrixXd::Identity(4, 4));
  CHECK(reduced_matrix({}, 2).kind == CalibrationKind::Reduced);

  Eigen::VectorXd col(2);
  col << 0.9, 0.1;
  const CalibrationMatrix m = reduced_matrix({{0, Distribution{1, col}}}, 1);
  Eigen::MatrixXd expected(2, 2);
  expected << 0.9, 0.0, 0.1, 1.0;
  CHECK(m.entries == expected);

  std::map<std::size_t, Distribution> all;
  std::vector<Distribution> columns;
  for (std::size_t k = 0; k < 4; ++k) {
    Eigen::VectorXd p = Eigen::VectorXd::Constant(4, 0.1);
    p[static_cast<Eigen::Index>(k)] = 0.7;
    all.emplace(k, Distribution{2, p});
    columns.push_back(Distribution{2, p});
  }
  CHECK(reduced_matrix(all, 2).entries == build_matrix(columns, CalibrationKind::QEM).entries);
}

TEST_CASE("direct strategy pairs columns with ideal outputs") {
  const Circuit flip(1, {Gate::x(0)});
  const auto circuits = direct_calibration_circuits(flip);
  REQUIRE(circuits.size() == 2);
  CHECK(circuits[0].gates == std::vector<Gate>{Gate::x(0), Gate::measure(0)});
  CHECK(circuits[1].gates == std::vector<Gate>{Gate::x(0), Gate::x(0), Gate::measure(0)});

  const DirectPairing pairing = direct_output_pairing(flip);
  CHECK(pairing.output_state == std::vector<std::size_t>{1, 0});
  CHECK(pairing.min_peak_probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pairing.linearly_independent());

  // superposition outputs flag the strategy as unsound
  const DirectPairing bad = direct_output_pairing(Circuit(1, {Gate::h(0)}));
  CHECK(bad.min_peak_probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(!bad.linearly_independent());

  const auto empty_case = direct_calibration_circuits(Circuit(2));
  const auto qem = qem_calibration_circuits(2);
  for (std::size_t k = 0; k < qem.size(); ++k) {
    CHECK(empty_case[k].gates == qem[k].gates);
  }
}

TEST_CASE("noiseless sampled calibration matrices are exactly the identity") {
  const Circuit target(2, {Gate::h(0), Gate::cnot(0, 1), Gate::t(1), Gate::h(0)});
  const auto [first, second] = gem_calibration_circuits(target);
  std::vector<Distribution> cols1, cols2;
  for (std::size_t k = 0; k < first.size(); ++k) {
    cols1.push_back(measured(transpile(first[k]), std::nullopt, 100 + k));
    cols2.push_back(measured(transpile(second[k]), std::nullopt, 200 + k));
  }
  const CalibrationMatrix m = combine(build_matrix(cols1, CalibrationKind::GemHalf1),
                                      build_matrix(cols2, CalibrationKind::GemHalf2));
  CHECK((m.entries - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("exact-probability calibration matrices are the identity without noise") {
  const Circuit target(2, {Gate::s(0), Gate::cnot(1, 0), Gate::tdg(1)});
  const auto [first, second] = gem_calibration_circuits(target);
  std::vector<Distribution> gem_cols, qem_cols;
  for (const Circuit& c : first) {
    gem_cols.push_back(exact_probabilities(transpile(c)));
  }
  for (const Circuit& c : qem_calibration_circuits(2)) {
    qem_cols.push_back(exact_probabilities(transpile(c)));
  }
  for (const auto& cols : {gem_cols, qem_cols}) {
    const CalibrationMatrix m = build_matrix(cols, CalibrationKind::QEM);
    CHECK((m.entries - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("QEM matrix under readout-only noise matches the confusion tensor product") {
  const NoiseModel noise = NoiseModel::readout_only(2, skewed_readout());
  std::vector<Distribution> cols;
  const auto circuits = qem_calibration_circuits(2);
  for (std::size_t k = 0; k < circuits.size(); ++k) {
    cols.push_back(measured(transpile(circuits[k]), noise, 4000 + k));
  }
  const CalibrationMatrix m = build_matrix(cols, CalibrationKind::QEM);

  Eigen::MatrixXd expected(4, 4);
  const Eigen::Matrix2d a = skewed_readout();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      expected(i, j) = a(qubit_bit(static_cast<std::size_t>(i), 0, 2),
                         qubit_bit(static_cast<std::size_t>(j), 0, 2)) *
                       a(qubit_bit(static_cast<std::size_t>(i), 1, 2),
                         qubit_bit(static_cast<std::size_t>(j), 1, 2));
    }
  }
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      const double q = expected(i, j);
      const double sigma = std::sqrt(q * (1.0 - q) / 8192.0);
      CHECK(std::abs(m.entries(i, j) - q) <= 3.0 * sigma + 1e-12);
    }
  }
}
