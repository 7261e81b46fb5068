// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include "qpsim/pauli.hpp"

namespace qpsim {

// A gate is either a single-qubit unitary or a CNOT. Other entangling gates
// must be compiled into CNOT + locals before they reach this IR.
struct Gate {
  enum class Kind { LocalUnitary, Cnot };

  Kind kind = Kind::LocalUnitary;
  int qubit = 0;               // LocalUnitary
  Eigen::Matrix2cd matrix;     // LocalUnitary
  std::string name;            // mnemonic if built from a named gate, else empty
  int control = 0, target = 0;  // Cnot

  static Gate local(int qubit, const Eigen::Matrix2cd& m, std::string name = {});
  static Gate cnot(int control, int target);

  bool operator==(const Gate& other) const;
};

// Ordered gate list over a fixed register. Immutable after construction; safe
// to share across threads.
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  bool operator==(const Circuit&) const = default;
};

// Number of CNOT gates (the N of the 3^N sequence space).
int cnot_count(const Circuit& c);

// Text format, one instruction per line:
//   qubits <n>
//   h|x|y|z|s|sdg|t|tdg <q>
//   u <q> <re00> <im00> <re01> <im01> <re10> <im10> <re11> <im11>
//   cnot <control> <target>
// '#' starts a comment line; blank lines are ignored.
Circuit parse_circuit(std::string_view text);

// Canonical emitter; parse_circuit(render_circuit(c)) == c.
std::string render_circuit(const Circuit& c);

// Index-range and unitarity validation for programmatically built circuits.
void validate_circuit(const Circuit& c);

}  // namespace qpsim
