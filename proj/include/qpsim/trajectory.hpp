// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qpsim/circuit.hpp"
#include "qpsim/local_ops.hpp"
#include "qpsim/product_state.hpp"
#include "qpsim/rng.hpp"

namespace qpsim {

struct WeightedState {
  ProductState state;
  double weight;
};

// Deterministic expansion of both branches with exact weights (Born or 1/2).
// Weights sum to 1; branches below 1e-15 are pruned.
std::vector<WeightedState> expand_branches(const ProductState& state, const LocalOperation& op,
                                           int control, int target);

// Samples one branch (Born or uniform 1/2), applies it in place, renormalizes
// the two touched qubits, and returns the branch index.
int apply_local_op(ProductState& state, const LocalOperation& op, int control, int target,
                   SplitMix64& rng);

struct TrajectoryRecord {
  SequenceChoice choice;                // per-CNOT operation kinds
  std::vector<int> branch_outcomes;     // per-CNOT branch index
  int sign = +1;                        // parity of L3bar count
  ProductState final_state;
  std::vector<int> observable_outcomes; // per queried observable, when requested
};

// One +-1 parity outcome drawn from the per-qubit Born probabilities of the
// non-identity letters.
int sample_parity_outcome(const ProductState& state, const PauliString& p, SplitMix64& rng);

// One signed trajectory: local gates applied exactly, each CNOT replaced by a
// uniformly drawn operation whose internal branch is then sampled.
TrajectoryRecord run_trajectory(const Circuit& c, const ProductState& input, SplitMix64& rng);

// Same, also sampling one outcome per observable from the final state.
TrajectoryRecord run_trajectory(const Circuit& c, const ProductState& input,
                                const std::vector<Observable>& observables, SplitMix64& rng);

// Same, reusing the record's storage across shots.
void run_trajectory_into(TrajectoryRecord& rec, const Circuit& c, const ProductState& input,
                         SplitMix64& rng);

}  // namespace qpsim
