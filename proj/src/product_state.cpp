// SPDX-License-Identifier: Apache-2.0
#include "qpsim/product_state.hpp"

#include <cmath>

namespace qpsim {

ProductState ProductState::zeros(int n_qubits) {
  ProductState s;
  s.qubits.assign(n_qubits, Eigen::Vector2cd(1.0, 0.0));
  return s;
}

double ProductState::norm_residual() const {
  double worst = 0.0;
  for (const auto& q : qubits) worst = std::max(worst, std::abs(q.norm() - 1.0));
  return worst;
}

double letter_expectation(const Eigen::Vector2cd& q, PauliLetter letter) {
  const cplx a = q(0), b = q(1);
  switch (letter) {
    case PauliLetter::I: return 1.0;
    case PauliLetter::X: return 2.0 * (std::conj(a) * b).real();
    case PauliLetter::Y: return 2.0 * (std::conj(a) * b).imag();
    case PauliLetter::Z: return std::norm(a) - std::norm(b);
  }
  return 0.0;
}

StateVector to_statevector(const ProductState& s) {
  const int n = s.n_qubits();
  Eigen::VectorXcd amps = Eigen::VectorXcd::Ones(1);
  // Prepend factors so qubit 0 ends up most significant.
  for (int k = n - 1; k >= 0; --k) {
    Eigen::VectorXcd next(amps.size() * 2);
    next.head(amps.size()) = s.qubits[k](0) * amps;
    next.tail(amps.size()) = s.qubits[k](1) * amps;
    amps = std::move(next);
  }
  return StateVector(n, std::move(amps));
}

}  // namespace qpsim
