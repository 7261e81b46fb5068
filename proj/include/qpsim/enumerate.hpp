// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qpsim/circuit.hpp"
#include "qpsim/local_ops.hpp"
#include "qpsim/product_state.hpp"

namespace qpsim {

// Refuse enumerations whose worst-case weighted branch count 3^N * 2^N
// exceeds this many leaves.
inline constexpr double kDefaultBranchBudget = 1e8;

struct SequenceRow {
  SequenceChoice choice;
  int sign;
  std::vector<double> conditionals;  // p(m|i), one per observable
};

struct EnumerationReport {
  int n_qubits = 0;
  int n_cnots = 0;
  std::vector<Observable> observables;
  std::vector<SequenceRow> rows;  // all 3^N sequences, first CNOT most significant
  std::vector<double> totals;     // sum_i p(i) p(m|i), one per observable
  double amplification = 1.0;     // 3^N
};

// Exhaustive signed enumeration: every sequence of local operations, every
// internal branch, recombined as sum_i p(m|i) p(i). Exact up to rounding.
EnumerationReport enumerate_sequences(const Circuit& c, const ProductState& input,
                                      const std::vector<Observable>& observables,
                                      double branch_budget = kDefaultBranchBudget);

}  // namespace qpsim
