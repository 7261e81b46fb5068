// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "qpsim/channel.hpp"

namespace qpsim {

// Process matrix over the unnormalized two-qubit Pauli product basis, ordered
// II, IX, IY, IZ, XI, ..., ZZ (first-qubit letter major). With eigenvalue-±1
// basis operators the 1/4 normalization factors live in the chi entries, so
// the CNOT superposition coefficients of ±1/2 appear literally as ±1/4 here.
struct ChiMatrix {
  Eigen::Matrix<cplx, 16, 16> m;

  double hermiticity_residual() const;
};

// The 16 basis operators A_i = sigma_a (x) sigma_b.
const std::array<Eigen::Matrix4cd, 16>& pauli_product_basis();
std::string pauli_product_label(int i);
int pauli_product_index(const std::string& label);

// chi_ij with apply_channel(ch, rho) == sum_ij chi_ij A_i rho A_j; the
// reconstruction is validated to 1e-10 before returning.
ChiMatrix chi_of_channel(const Channel& ch);

// sum_ij chi_ij A_i rho A_j.
DensityMatrix chi_apply(const ChiMatrix& chi, const DensityMatrix& rho);

// Diagonal support: indices i with |chi_ii| > tol.
std::vector<int> chi_support(const ChiMatrix& chi, double tol = 1e-12);

}  // namespace qpsim
