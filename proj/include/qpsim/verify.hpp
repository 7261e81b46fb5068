// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace qpsim {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

// The operator-identity and bookkeeping checks behind the simulator: Kraus
// completeness, branch unitarity, the CNOT superposition identity, the signed
// decomposition equality (channel and chi form), chi support, the sequence
// census closed forms, and the fidelity/negativity bound.
std::vector<CheckResult> run_verification_suite(double tolerance_scale = 1.0);

}  // namespace qpsim
