// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

namespace qpsim {

// 2x2 constants for the named single-qubit gates: h x y z s sdg t tdg.
std::optional<Eigen::Matrix2cd> named_gate_matrix(const std::string& name);

// Max entrywise deviation of U U^dagger from the identity.
double unitarity_residual(const Eigen::Matrix2cd& u);

}  // namespace qpsim
