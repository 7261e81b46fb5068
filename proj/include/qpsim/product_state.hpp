// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qpsim/pauli.hpp"
#include "qpsim/statevector.hpp"

namespace qpsim {

// Per-qubit pure states; the trajectory engine never entangles them, so cost
// stays linear in the register size.
struct ProductState {
  std::vector<Eigen::Vector2cd> qubits;

  static ProductState zeros(int n_qubits);

  int n_qubits() const { return static_cast<int>(qubits.size()); }

  // Max deviation of any per-qubit norm from 1.
  double norm_residual() const;
};

// <psi|sigma|psi> for a single qubit.
double letter_expectation(const Eigen::Vector2cd& q, PauliLetter letter);

// Kronecker expansion, for oracle comparisons (subject to the dense cap).
StateVector to_statevector(const ProductState& s);

}  // namespace qpsim
