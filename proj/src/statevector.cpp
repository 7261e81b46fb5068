// SPDX-License-Identifier: Apache-2.0
#include "qpsim/statevector.hpp"

#include <cmath>
#include <stdexcept>

#include "qpsim/errors.hpp"

namespace qpsim {

namespace {

// Residual above rounding noise on a "real" expectation means a logic bug.
constexpr double kImagResidueTol = 1e-10;

void check_register(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("state needs at least one qubit");
  if (n_qubits > kMaxOracleQubits) {
    throw BudgetError("dense oracle supports at most " + std::to_string(kMaxOracleQubits) +
                      " qubits, got " + std::to_string(n_qubits));
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_register(n_qubits);
  amps_ = Eigen::VectorXcd::Zero(std::int64_t(1) << n_qubits);
  amps_(0) = 1.0;
}

StateVector::StateVector(int n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  check_register(n_qubits);
  if (amps_.size() != (std::int64_t(1) << n_qubits)) {
    throw std::invalid_argument("amplitude vector has dimension " + std::to_string(amps_.size()) +
                                ", expected 2^" + std::to_string(n_qubits));
  }
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= (std::uint64_t(1) << n_qubits)) {
    throw std::invalid_argument("basis index out of range");
  }
  s.amps_(0) = 0.0;
  s.amps_(static_cast<Eigen::Index>(index)) = 1.0;
  return s;
}

void StateVector::apply_local(int qubit, const Eigen::Matrix2cd& u) {
  if (qubit < 0 || qubit >= n_qubits_) throw std::invalid_argument("qubit index out of range");
  // Qubit k lives in bit (n-1-k) of the amplitude index.
  const std::uint64_t stride = std::uint64_t(1) << (n_qubits_ - 1 - qubit);
  const std::uint64_t d = std::uint64_t(1) << n_qubits_;
  for (std::uint64_t base = 0; base < d; ++base) {
    if (base & stride) continue;
    const cplx a0 = amps_(static_cast<Eigen::Index>(base));
    const cplx a1 = amps_(static_cast<Eigen::Index>(base | stride));
    amps_(static_cast<Eigen::Index>(base)) = u(0, 0) * a0 + u(0, 1) * a1;
    amps_(static_cast<Eigen::Index>(base | stride)) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void StateVector::apply_cnot(int control, int target) {
  if (control < 0 || control >= n_qubits_ || target < 0 || target >= n_qubits_) {
    throw std::invalid_argument("qubit index out of range");
  }
  if (control == target) throw std::invalid_argument("cnot control equals target");
  const std::uint64_t cmask = std::uint64_t(1) << (n_qubits_ - 1 - control);
  const std::uint64_t tmask = std::uint64_t(1) << (n_qubits_ - 1 - target);
  const std::uint64_t d = std::uint64_t(1) << n_qubits_;
  for (std::uint64_t b = 0; b < d; ++b) {
    if ((b & cmask) && !(b & tmask)) {
      std::swap(amps_(static_cast<Eigen::Index>(b)), amps_(static_cast<Eigen::Index>(b | tmask)));
    }
  }
}

void StateVector::apply_gate(const Gate& g) {
  if (g.kind == Gate::Kind::Cnot) {
    apply_cnot(g.control, g.target);
  } else {
    apply_local(g.qubit, g.matrix);
  }
}

StateVector run_exact(const Circuit& c, const StateVector& input) {
  if (input.n_qubits() != c.n_qubits) {
    throw std::invalid_argument("input state has " + std::to_string(input.n_qubits()) +
                                " qubits, circuit has " + std::to_string(c.n_qubits));
  }
  StateVector out = input;
  for (const Gate& g : c.gates) out.apply_gate(g);
  return out;
}

StateVector apply_pauli(const StateVector& state, const PauliString& p) {
  if (p.size() != state.n_qubits()) {
    throw std::invalid_argument("pauli string length does not match register");
  }
  StateVector out = state;
  for (int k = 0; k < p.size(); ++k) {
    if (p.letters[k] == PauliLetter::I) continue;
    out.apply_local(k, pauli_matrix(p.letters[k]));
  }
  return out;
}

double pauli_expectation(const StateVector& state, const PauliString& p) {
  const StateVector ps = apply_pauli(state, p);
  const cplx v = state.amplitudes().dot(ps.amplitudes());
  if (std::abs(v.imag()) > kImagResidueTol) {
    throw std::logic_error("pauli expectation has imaginary residue " +
                           std::to_string(v.imag()));
  }
  return v.real();
}

double parity_probability(const StateVector& state, const PauliString& p, int parity) {
  if (parity != +1 && parity != -1) throw std::invalid_argument("parity must be +1 or -1");
  if (p.all_identity()) {
    throw std::invalid_argument("parity probability needs a non-identity pauli string");
  }
  const double e = pauli_expectation(state, p);
  const double prob = 0.5 * (1.0 + parity * e);
  return std::min(1.0, std::max(0.0, prob));
}

}  // namespace qpsim
