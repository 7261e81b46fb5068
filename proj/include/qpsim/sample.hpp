// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qpsim/circuit.hpp"
#include "qpsim/product_state.hpp"

namespace qpsim {

struct QuasiEstimate {
  double p_pos = 0.0;          // fraction of shots with sign +1 and matching outcome
  double p_neg = 0.0;          // fraction with sign -1 and matching outcome
  double amplification = 1.0;  // 3^N
  double estimate = 0.0;       // 3^N * (p_pos - p_neg)
  std::uint64_t shots = 0;
  double std_error = 0.0;      // 3^N * sample stddev of the signed indicator / sqrt(shots)

  bool operator==(const QuasiEstimate&) const = default;
};

// Signed Monte Carlo over trajectories. Deterministic given (seed, shots):
// trajectory t draws from the counter substream (seed, t), and the reduction
// is a plain integer sum, so any worker count produces bitwise-identical
// estimates. workers = 0 means use the available hardware parallelism.
std::vector<QuasiEstimate> sample_circuit(const Circuit& c, const ProductState& input,
                                          const std::vector<Observable>& observables,
                                          std::uint64_t shots, std::uint64_t seed,
                                          int workers = 0);

}  // namespace qpsim
