#include "gem/simulator.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "gem/basis.hpp"
#include "gem/rng.hpp"

namespace gem {

namespace {

using complexd = std::complex<double>;

constexpr int kMaxQubits = 8;

Eigen::Matrix2cd u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const complexd i(0.0, 1.0);
  Eigen::Matrix2cd u;
  u << c, -std::exp(i * lambda) * s, std::exp(i * phi) * s, std::exp(i * (phi + lambda)) * c;
  return u;
}

Eigen::Matrix2cd fixed_gate_matrix(GateKind kind) {
  const complexd i(0.0, 1.0);
  const double isq = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd u;
  switch (kind) {
    case GateKind::Id:
      return Eigen::Matrix2cd::Identity();
    case GateKind::X:
      u << 0, 1, 1, 0;
      return u;
    case GateKind::Y:
      u << 0, -i, i, 0;
      return u;
    case GateKind::Z:
      u << 1, 0, 0, -1;
      return u;
    case GateKind::H:
      u << isq, isq, isq, -isq;
      return u;
    case GateKind::S:
      u << 1, 0, 0, i;
      return u;
    case GateKind::Sdg:
      u << 1, 0, 0, -i;
      return u;
    case GateKind::T:
      u << 1, 0, 0, std::exp(i * (std::numbers::pi / 4));
      return u;
    case GateKind::Tdg:
      u << 1, 0, 0, std::exp(-i * (std::numbers::pi / 4));
      return u;
    default:
      throw std::invalid_argument("not a fixed single-qubit unitary: " + gate_name(kind));
  }
}

/// Over-rotated variant of a parameterized gate's matrix. U1 rotates about Z
/// by its angle; U2 is U3 with implicit theta = pi/2; U3/Rx/Ry carry theta
/// explicitly.
Eigen::Matrix2cd rotated_matrix(const Gate& g, double extra) {
  const complexd i(0.0, 1.0);
  switch (g.kind) {
    case GateKind::U1: {
      Eigen::Matrix2cd u;
      u << 1, 0, 0, std::exp(i * (g.params[0] + extra));
      return u;
    }
    case GateKind::U2:
      return u3_matrix(std::numbers::pi / 2 + extra, g.params[0], g.params[1]);
    case GateKind::U3:
      return u3_matrix(g.params[0] + extra, g.params[1], g.params[2]);
    case GateKind::Rx: {
      const double t = g.params[0] + extra;
      Eigen::Matrix2cd u;
      u << std::cos(t / 2), -i * std::sin(t / 2), -i * std::sin(t / 2), std::cos(t / 2);
      return u;
    }
    case GateKind::Ry: {
      const double t = g.params[0] + extra;
      Eigen::Matrix2cd u;
      u << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
      return u;
    }
    default:
      throw std::invalid_argument("gate is not parameterized: " + gate_name(g.kind));
  }
}

Eigen::Matrix4cd cnot_matrix() {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = 1;  // |00> -> |00>
  u(1, 1) = 1;  // |01> -> |01>
  u(2, 3) = 1;  // |11> -> |10>
  u(3, 2) = 1;  // |10> -> |11>
  return u;
}

/// Density-matrix state with in-place local gate application and noise
/// channels. Index bit order follows basis.hpp (qubit 0 most significant).
class DensityMatrix {
 public:
  DensityMatrix(int num_qubits, std::size_t basis_state)
      : n_(num_qubits), dim_(static_cast<Eigen::Index>(dimension(num_qubits))) {
    rho_ = Eigen::MatrixXcd::Zero(dim_, dim_);
    rho_(static_cast<Eigen::Index>(basis_state), static_cast<Eigen::Index>(basis_state)) = 1.0;
  }

  void apply_1q(const Eigen::Matrix2cd& u, int qubit) {
    const auto mask = static_cast<Eigen::Index>(qubit_mask(qubit, n_));
    // rho <- U rho, then rho <- rho U^dagger, touching only index pairs that
    // differ in the target bit.
    for (Eigen::Index base = 0; base < dim_; ++base) {
      if (base & mask) continue;
      for (Eigen::Index col = 0; col < dim_; ++col) {
        const complexd a = rho_(base, col);
        const complexd b = rho_(base | mask, col);
        rho_(base, col) = u(0, 0) * a + u(0, 1) * b;
        rho_(base | mask, col) = u(1, 0) * a + u(1, 1) * b;
      }
    }
    for (Eigen::Index base = 0; base < dim_; ++base) {
      if (base & mask) continue;
      for (Eigen::Index row = 0; row < dim_; ++row) {
        const complexd a = rho_(row, base);
        const complexd b = rho_(row, base | mask);
        rho_(row, base) = a * std::conj(u(0, 0)) + b * std::conj(u(0, 1));
        rho_(row, base | mask) = a * std::conj(u(1, 0)) + b * std::conj(u(1, 1));
      }
    }
  }

  void apply_2q(const Eigen::Matrix4cd& u, int q_hi, int q_lo) {
    const auto mask_hi = static_cast<Eigen::Index>(qubit_mask(q_hi, n_));
    const auto mask_lo = static_cast<Eigen::Index>(qubit_mask(q_lo, n_));
    const Eigen::Index offs[4] = {0, mask_lo, mask_hi, mask_hi | mask_lo};
    for (Eigen::Index base = 0; base < dim_; ++base) {
      if (base & (mask_hi | mask_lo)) continue;
      for (Eigen::Index col = 0; col < dim_; ++col) {
        Eigen::Vector4cd v;
        for (int k = 0; k < 4; ++k) v[k] = rho_(base | offs[k], col);
        const Eigen::Vector4cd w = u * v;
        for (int k = 0; k < 4; ++k) rho_(base | offs[k], col) = w[k];
      }
    }
    const Eigen::Matrix4cd ud = u.adjoint();
    for (Eigen::Index base = 0; base < dim_; ++base) {
      if (base & (mask_hi | mask_lo)) continue;
      for (Eigen::Index row = 0; row < dim_; ++row) {
        Eigen::RowVector4cd v;
        for (int k = 0; k < 4; ++k) v[k] = rho_(row, base | offs[k]);
        const Eigen::RowVector4cd w = v * ud;
        for (int k = 0; k < 4; ++k) rho_(row, base | offs[k]) = w[k];
      }
    }
  }

  /// Depolarizing channel on the given qubits:
  /// rho <- (1-p) rho + p (I/2^k tensor Tr_qs rho).
  void depolarize(const std::vector<int>& qubits, double p) {
    if (p <= 0.0) return;
    std::size_t support = 0;
    for (int q : qubits) support |= qubit_mask(q, n_);
    const double inv = 1.0 / static_cast<double>(std::size_t{1} << qubits.size());
    const auto dim = static_cast<std::size_t>(dim_);

    Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(dim_, dim_);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        if ((i & support) != (j & support)) continue;  // off-diagonal in the mixed slot
        const std::size_t i0 = i & ~support;
        const std::size_t j0 = j & ~support;
        complexd trace = 0.0;
        std::size_t b = 0;
        while (true) {  // enumerate subsets of the support mask
          trace += rho_(static_cast<Eigen::Index>(i0 | b), static_cast<Eigen::Index>(j0 | b));
          if (b == support) break;
          b = (b - support) & support;
        }
        mixed(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = inv * trace;
      }
    }
    rho_ = (1.0 - p) * rho_ + p * mixed;
  }

  Eigen::VectorXd diagonal_probabilities() const {
    Eigen::VectorXd probs(dim_);
    for (Eigen::Index i = 0; i < dim_; ++i) {
      probs[i] = std::max(rho_(i, i).real(), 0.0);
    }
    return probs;
  }

 private:
  int n_;
  Eigen::Index dim_;
  Eigen::MatrixXcd rho_;
};

Eigen::VectorXd apply_readout(const Eigen::VectorXd& probs,
                              const std::vector<Eigen::Matrix2d>& readout, int n) {
  // Contract the per-qubit confusion matrix along each qubit axis in turn.
  Eigen::VectorXd p = probs;
  for (int q = 0; q < n; ++q) {
    const Eigen::Matrix2d& a = readout[static_cast<std::size_t>(q)];
    const auto mask = static_cast<Eigen::Index>(qubit_mask(q, n));
    Eigen::VectorXd next = p;
    for (Eigen::Index base = 0; base < p.size(); ++base) {
      if (base & mask) continue;
      const double p0 = p[base];
      const double p1 = p[base | mask];
      next[base] = a(0, 0) * p0 + a(0, 1) * p1;
      next[base | mask] = a(1, 0) * p0 + a(1, 1) * p1;
    }
    p = std::move(next);
  }
  return p;
}

}  // namespace

Eigen::MatrixXcd gate_matrix(const Gate& g) {
  if (g.is_measure()) {
    throw std::invalid_argument("Measure has no unitary");
  }
  if (g.kind == GateKind::CNOT) {
    return cnot_matrix();
  }
  if (g.is_parameterized()) {
    return rotated_matrix(g, 0.0);
  }
  return fixed_gate_matrix(g.kind);
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  if (c.num_qubits > kMaxQubits) {
    throw std::length_error("circuit too wide for a dense unitary");
  }
  const auto dim = static_cast<Eigen::Index>(dimension(c.num_qubits));
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Gate& g : c.gates) {
    if (g.is_measure()) {
      throw std::invalid_argument("circuit_unitary requires a measurement-free circuit");
    }
    const Eigen::MatrixXcd local = gate_matrix(g);
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
    if (g.qubits.size() == 1) {
      const auto mask = static_cast<Eigen::Index>(qubit_mask(g.qubits[0], c.num_qubits));
      for (Eigen::Index col = 0; col < dim; ++col) {
        const Eigen::Index row0 = col & ~mask;
        const int b = (col & mask) ? 1 : 0;
        full(row0, col) = local(0, b);
        full(row0 | mask, col) = local(1, b);
      }
    } else {
      const auto mask_hi = static_cast<Eigen::Index>(qubit_mask(g.qubits[0], c.num_qubits));
      const auto mask_lo = static_cast<Eigen::Index>(qubit_mask(g.qubits[1], c.num_qubits));
      const Eigen::Index offs[4] = {0, mask_lo, mask_hi, mask_hi | mask_lo};
      for (Eigen::Index col = 0; col < dim; ++col) {
        const Eigen::Index base = col & ~(mask_hi | mask_lo);
        int b = 0;
        if (col & mask_hi) b |= 2;
        if (col & mask_lo) b |= 1;
        for (int k = 0; k < 4; ++k) {
          full(base | offs[k], col) = local(k, b);
        }
      }
    }
    u = full * u;
  }
  return u;
}

Distribution exact_probabilities(const Circuit& c, const std::optional<NoiseModel>& noise) {
  if (c.num_qubits > kMaxQubits) {
    throw std::length_error("density-matrix simulation is limited to 8 qubits");
  }
  if (noise) {
    noise->validate(c.num_qubits);
  }
  const double overrot = noise ? noise->overrotation : 0.0;

  DensityMatrix state(c.num_qubits, basis_index(c.initial_state));
  for (const Gate& g : c.gates) {
    if (g.is_measure()) {
      continue;  // measurement is terminal and handled via the diagonal
    }
    if (g.kind == GateKind::CNOT) {
      state.apply_2q(cnot_matrix(), g.qubits[0], g.qubits[1]);
      if (noise) {
        state.depolarize(g.qubits, noise->p2);
      }
      continue;
    }
    const Eigen::Matrix2cd u =
        g.is_parameterized() ? rotated_matrix(g, overrot) : fixed_gate_matrix(g.kind);
    state.apply_1q(u, g.qubits[0]);
    if (noise) {
      state.depolarize(g.qubits, noise->p1);
    }
  }

  Eigen::VectorXd probs = state.diagonal_probabilities();
  if (noise && noise->has_readout()) {
    probs = apply_readout(probs, noise->readout, c.num_qubits);
  }
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    probs[i] = std::max(probs[i], 0.0);
  }
  return {c.num_qubits, std::move(probs)};
}

Distribution sample_counts(const Circuit& c, long shots, const std::optional<NoiseModel>& noise,
                           std::uint64_t seed) {
  const Distribution exact = exact_probabilities(c, noise);
  Rng rng(seed);
  Eigen::VectorXd counts = multinomial_counts(exact.probs, shots, rng);
  return {c.num_qubits, counts / static_cast<double>(shots)};
}

}  // namespace gem
