// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qpsim/pauli.hpp"
#include "qpsim/statevector.hpp"

namespace qpsim {

struct DensityMatrix {
  int n_qubits = 0;
  Eigen::MatrixXcd mat;

  DensityMatrix() = default;
  DensityMatrix(int n_qubits, Eigen::MatrixXcd m);

  static DensityMatrix from_state(const StateVector& s);

  // Hermitian within 1e-12, trace 1 within 1e-12, eigenvalues >= -1e-10.
  // Signed-channel outputs are intentionally exempt from this check.
  void validate_physical() const;
};

struct KrausBranch {
  Eigen::MatrixXcd op;
  double weight = 1.0;
};

// Weighted operator-sum map rho -> sum_m w_m K_m rho K_m^dagger. Weights may
// be signed so decomposition identities can be expressed as channel equalities.
struct Channel {
  int n_qubits = 0;
  std::vector<KrausBranch> branches;
};

DensityMatrix apply_channel(const Channel& ch, const DensityMatrix& rho);

Channel identity_channel(int n_qubits);

// The CNOT unitary as the coherent superposition (II + ZI + IX - ZX)/2,
// asserted against the basis permutation matrix on construction.
Channel cnot_channel();
Eigen::Matrix4cd cnot_matrix();

// Max entrywise deviation of sum_m w_m K_m^dagger K_m from the identity.
double completeness_residual(const Channel& ch);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace qpsim
