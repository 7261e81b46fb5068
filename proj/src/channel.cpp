// SPDX-License-Identifier: Apache-2.0
#include "qpsim/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "qpsim/pauli.hpp"

namespace qpsim {

DensityMatrix::DensityMatrix(int n_qubits, Eigen::MatrixXcd m) : n_qubits(n_qubits), mat(std::move(m)) {
  const Eigen::Index d = Eigen::Index(1) << n_qubits;
  if (mat.rows() != d || mat.cols() != d) {
    throw std::invalid_argument("density matrix dimension does not match qubit count");
  }
}

DensityMatrix DensityMatrix::from_state(const StateVector& s) {
  const Eigen::VectorXcd& a = s.amplitudes();
  return DensityMatrix(s.n_qubits(), a * a.adjoint());
}

void DensityMatrix::validate_physical() const {
  if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::logic_error("density matrix is not hermitian");
  }
  if (std::abs(mat.trace().real() - 1.0) > 1e-12 || std::abs(mat.trace().imag()) > 1e-12) {
    throw std::logic_error("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw std::logic_error("density matrix has a negative eigenvalue");
  }
}

DensityMatrix apply_channel(const Channel& ch, const DensityMatrix& rho) {
  if (ch.n_qubits != rho.n_qubits) {
    throw std::invalid_argument("channel and state act on different registers");
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.mat.rows(), rho.mat.cols());
  for (const KrausBranch& b : ch.branches) {
    if (b.op.rows() != rho.mat.rows() || b.op.cols() != rho.mat.cols()) {
      throw std::invalid_argument("kraus operator dimension mismatch");
    }
    out += b.weight * (b.op * rho.mat * b.op.adjoint());
  }
  return DensityMatrix(rho.n_qubits, std::move(out));
}

Channel identity_channel(int n_qubits) {
  const Eigen::Index d = Eigen::Index(1) << n_qubits;
  return Channel{n_qubits, {{Eigen::MatrixXcd::Identity(d, d), 1.0}}};
}

Eigen::Matrix4cd cnot_matrix() {
  const Eigen::Matrix2cd eye = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd x = pauli_matrix(PauliLetter::X);
  const Eigen::Matrix2cd z = pauli_matrix(PauliLetter::Z);
  const Eigen::Matrix4cd u =
      0.5 * (kron(eye, eye) + kron(z, eye) + kron(eye, x) - kron(z, x));

  Eigen::Matrix4cd perm = Eigen::Matrix4cd::Zero();
  perm(0, 0) = perm(1, 1) = perm(2, 3) = perm(3, 2) = 1.0;
  if ((u - perm).cwiseAbs().maxCoeff() > 1e-15) {
    throw std::logic_error("cnot superposition does not match the permutation matrix");
  }
  return u;
}

Channel cnot_channel() { return Channel{2, {{cnot_matrix(), 1.0}}}; }

double completeness_residual(const Channel& ch) {
  const Eigen::Index d = Eigen::Index(1) << ch.n_qubits;
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
  for (const KrausBranch& b : ch.branches) sum += b.weight * (b.op.adjoint() * b.op);
  return (sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace qpsim
