// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "qpsim/circuit.hpp"
#include "qpsim/pauli.hpp"

namespace qpsim {

// Dense oracle only; the quasi-probability engine has no qubit cap.
inline constexpr int kMaxOracleQubits = 12;

// Basis-state labels put qubit 0 in the most significant position: amplitude
// index b carries qubit k in bit (n-1-k), so |q0 q1 ... q_{n-1}> reads
// left-to-right like the ket.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int n_qubits);  // |0...0>
  StateVector(int n_qubits, Eigen::VectorXcd amplitudes);

  static StateVector basis_state(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  std::int64_t dim() const { return amps_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  cplx amplitude(std::uint64_t index) const { return amps_(static_cast<Eigen::Index>(index)); }
  double norm() const { return amps_.norm(); }

  void apply_local(int qubit, const Eigen::Matrix2cd& u);
  void apply_cnot(int control, int target);
  void apply_gate(const Gate& g);

 private:
  int n_qubits_ = 0;
  Eigen::VectorXcd amps_;
};

StateVector run_exact(const Circuit& c, const StateVector& input);

// P|psi> by per-qubit application of the letters.
StateVector apply_pauli(const StateVector& state, const PauliString& p);

// <psi|P|psi>, asserted real to 1e-10.
double pauli_expectation(const StateVector& state, const PauliString& p);

// Probability that the product of the per-qubit measurement outcomes of p
// equals parity. Satisfies p(+1) - p(-1) = pauli_expectation.
double parity_probability(const StateVector& state, const PauliString& p, int parity);

}  // namespace qpsim
