#pragma once

#include <cstdint>
#include <optional>

#include "gem/circuit.hpp"
#include "gem/distribution.hpp"
#include "gem/noise_model.hpp"
#include "gem/simulator.hpp"

namespace gem {

/// Execution surface the harness drives: one circuit in, relative frequencies
/// out. Remote-hardware adapters would implement this.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual Distribution execute(const Circuit& c, long shots, std::uint64_t seed) = 0;
};

/// The synthetic noisy device: shot-sampled density-matrix simulation.
class SimulatorBackend final : public Backend {
 public:
  explicit SimulatorBackend(std::optional<NoiseModel> noise) : noise_(std::move(noise)) {}

  Distribution execute(const Circuit& c, long shots, std::uint64_t seed) override {
    ++executions_;
    return sample_counts(c, shots, noise_, seed);
  }

  long executions() const { return executions_; }

 private:
  std::optional<NoiseModel> noise_;
  long executions_ = 0;
};

}  // namespace gem
