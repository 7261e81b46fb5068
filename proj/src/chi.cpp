// SPDX-License-Identifier: Apache-2.0
#include "qpsim/chi.hpp"

#include <stdexcept>

#include "qpsim/rng.hpp"

namespace qpsim {

namespace {

constexpr const char* kLetters = "IXYZ";

Eigen::Matrix4cd basis_op(int i) {
  const auto a = static_cast<PauliLetter>(kLetters[i / 4]);
  const auto b = static_cast<PauliLetter>(kLetters[i % 4]);
  return kron(pauli_matrix(a), pauli_matrix(b));
}

// Deterministic probe states for the reconstruction self-check.
Eigen::Matrix4cd probe_density(SplitMix64& rng) {
  Eigen::Matrix4cd g;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) g(r, c) = cplx(rng.uniform() - 0.5, rng.uniform() - 0.5);
  }
  Eigen::Matrix4cd rho = g * g.adjoint();
  return rho / rho.trace();
}

}  // namespace

const std::array<Eigen::Matrix4cd, 16>& pauli_product_basis() {
  static const std::array<Eigen::Matrix4cd, 16> basis = [] {
    std::array<Eigen::Matrix4cd, 16> b;
    for (int i = 0; i < 16; ++i) b[i] = basis_op(i);
    return b;
  }();
  return basis;
}

std::string pauli_product_label(int i) {
  if (i < 0 || i >= 16) throw std::out_of_range("pauli product index");
  return {kLetters[i / 4], kLetters[i % 4]};
}

int pauli_product_index(const std::string& label) {
  if (label.size() != 2) throw std::invalid_argument("pauli product label must have 2 letters");
  const auto pos = [](char c) {
    for (int k = 0; k < 4; ++k) {
      if (kLetters[k] == c) return k;
    }
    throw std::invalid_argument("invalid pauli letter in product label");
  };
  return 4 * pos(label[0]) + pos(label[1]);
}

double ChiMatrix::hermiticity_residual() const {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ChiMatrix chi_of_channel(const Channel& ch) {
  if (ch.n_qubits != 2) throw std::invalid_argument("chi matrix is defined for 2-qubit channels");
  const auto& basis = pauli_product_basis();

  ChiMatrix chi{Eigen::Matrix<cplx, 16, 16>::Zero()};
  for (const KrausBranch& b : ch.branches) {
    if (b.op.rows() != 4 || b.op.cols() != 4) {
      throw std::invalid_argument("chi matrix needs 4x4 kraus operators");
    }
    // K = sum_i a_i A_i with a_i = tr(A_i K)/4 (tr A_i A_j = 4 delta_ij).
    Eigen::Matrix<cplx, 16, 1> a;
    for (int i = 0; i < 16; ++i) a(i) = (basis[i] * b.op).trace() / 4.0;
    chi.m += b.weight * (a * a.adjoint());
  }

  if (chi.hermiticity_residual() > 1e-10) {
    throw std::logic_error("chi matrix is not hermitian");
  }
  SplitMix64 rng(0x5eedc0de);
  for (int probe = 0; probe < 3; ++probe) {
    const DensityMatrix rho(2, probe_density(rng));
    const Eigen::MatrixXcd direct = apply_channel(ch, rho).mat;
    const Eigen::MatrixXcd rebuilt = chi_apply(chi, rho).mat;
    if ((direct - rebuilt).cwiseAbs().maxCoeff() > 1e-10) {
      throw std::logic_error("chi reconstruction residual exceeds 1e-10");
    }
  }
  return chi;
}

DensityMatrix chi_apply(const ChiMatrix& chi, const DensityMatrix& rho) {
  if (rho.n_qubits != 2) throw std::invalid_argument("chi matrix acts on 2-qubit states");
  const auto& basis = pauli_product_basis();
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 16; ++i) {
    if ((chi.m.row(i).cwiseAbs().maxCoeff()) == 0.0) continue;
    const Eigen::Matrix4cd left = basis[i] * rho.mat;
    for (int j = 0; j < 16; ++j) {
      if (chi.m(i, j) == cplx(0.0, 0.0)) continue;
      out += chi.m(i, j) * (left * basis[j]);
    }
  }
  return DensityMatrix(2, out);
}

std::vector<int> chi_support(const ChiMatrix& chi, double tol) {
  std::vector<int> support;
  for (int i = 0; i < 16; ++i) {
    if (std::abs(chi.m(i, i)) > tol) support.push_back(i);
  }
  return support;
}

}  // namespace qpsim
