// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "qpsim/circuit.hpp"
#include "qpsim/enumerate.hpp"
#include "qpsim/statevector.hpp"

namespace qpsim {

// H(0), CNOT(0,1), CNOT(0,2): |000> -> (|000> + |111>)/sqrt(2).
Circuit ghz_circuit();

// The four certain GHZ correlations: XXX=+1, XYY=-1, YXY=-1, YYX=-1.
std::vector<Observable> ghz_observables();

struct ClassicalFrequency {
  double p_pos = 0.0;           // uniform-weight frequency over positive sequences
  double p_neg = 0.0;           // same over negative sequences
  double amplification = 9.0;   // 3^2
  double reconstruction = 0.0;  // amplification * (p_pos - p_neg)
};

struct GhzRow {
  std::string label;  // "L1-L1" ... "L3bar-L3bar", first CNOT first
  int sign;
  std::array<double, 4> conditionals;
};

struct GhzReport {
  std::vector<Observable> observables;
  std::vector<GhzRow> rows;  // 9 rows
  std::array<double, 4> recombined;
  std::array<ClassicalFrequency, 4> classical;
};

// The nine-sequence breakdown of the GHZ circuit: per-sequence signs and
// conditional probabilities for the four correlations plus their recombination.
GhzReport ghz_table();

// Uniform 1/9-weight frequencies of the classical simulation; reconstruction
// is checked against the recombined totals to 1e-12.
std::array<ClassicalFrequency, 4> ghz_classical_frequencies();

// Largest squared Schmidt coefficient of a normalized two-qubit pure state,
// i.e. the best product-state overlap max |<a,b|psi>|^2.
double max_product_fidelity(const StateVector& two_qubit_state);

struct NegativityBoundReport {
  double bell_fidelity = 0.0;         // overlap of the decomposition output with the Bell state
  double achieved_negativity = 0.0;   // total magnitude of negative weights
  double required_negativity = 0.0;   // 2F - 1
  double output_residual = 0.0;       // max entrywise deviation from the Bell projector
  bool saturated = false;
};

// Applies the signed decomposition to |+0> and checks that the Bell output is
// reproduced with negative weight exactly 1, saturating n >= 2F - 1 at F = 1.
NegativityBoundReport negativity_lower_bound_check();

}  // namespace qpsim
