// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qpsim/channel.hpp"

namespace qpsim {

enum class LocalOpKind : int { L1 = 0, L2 = 1, L3bar = 2 };

// Born branches are selected with the squared-norm probability of the applied
// operators; Half branches are an even classical mixture of two unitaries.
enum class BranchRule { Born, Half };

// One Kraus branch factored over the gate's two qubits.
struct LocalBranch {
  Eigen::Matrix2cd control_op;
  Eigen::Matrix2cd target_op;
};

// One of the three local replacements of a CNOT, with its signed weight:
//   L1 (+1): measure Z on control, flip target on -1.
//   L2 (+1): measure X on target, phase-flip control on -1.
//   L3bar (-1): even mixture of a correlated pi/2 rotation pair and its inverse.
struct LocalOperation {
  LocalOpKind kind;
  int weight;
  BranchRule rule;
  std::array<LocalBranch, 2> branches;
};

// The three operations whose signed sum equals CNOT conjugation.
const std::array<LocalOperation, 3>& decompose_cnot();

const LocalOperation& local_operation(LocalOpKind kind);

// Two-qubit channel form (control = first tensor factor). The channel itself
// is positive; the -1 of L3bar stays in LocalOperation::weight.
Channel to_channel(const LocalOperation& op);

std::string kind_label(LocalOpKind kind);

// One operation choice per CNOT, in circuit order.
using SequenceChoice = std::vector<LocalOpKind>;

// -1 iff the number of L3bar entries is odd.
int sequence_sign(const SequenceChoice& choice);

std::string sequence_label(const SequenceChoice& choice);

// Positive/negative sequence counts over all 3^N choices, tallied by direct
// parity counting and cross-checked against ((3^N+1)/2, (3^N-1)/2).
std::pair<std::uint64_t, std::uint64_t> sequence_census(int n_cnots);

// Sampling overhead sum|p(i)| / sum p(i) = 3^N.
double overhead_ratio(int n_cnots);

// 3^N as a double (exact integer arithmetic up to N = 38).
double amplification_factor(int n_cnots);

}  // namespace qpsim
