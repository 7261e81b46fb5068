// SPDX-License-Identifier: Apache-2.0
#include "qpsim/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "qpsim/channel.hpp"
#include "qpsim/gates.hpp"
#include "qpsim/local_ops.hpp"

namespace qpsim {

Circuit ghz_circuit() {
  Circuit c;
  c.n_qubits = 3;
  c.gates.push_back(Gate::local(0, *named_gate_matrix("h"), "h"));
  c.gates.push_back(Gate::cnot(0, 1));
  c.gates.push_back(Gate::cnot(0, 2));
  return c;
}

std::vector<Observable> ghz_observables() {
  return {
      {parse_pauli("XXX", 3), +1},
      {parse_pauli("XYY", 3), -1},
      {parse_pauli("YXY", 3), -1},
      {parse_pauli("YYX", 3), -1},
  };
}

GhzReport ghz_table() {
  const Circuit c = ghz_circuit();
  const std::vector<Observable> obs = ghz_observables();
  const EnumerationReport e = enumerate_sequences(c, ProductState::zeros(3), obs);

  GhzReport report;
  report.observables = obs;
  report.rows.reserve(e.rows.size());
  for (const SequenceRow& row : e.rows) {
    GhzRow r;
    r.label = sequence_label(row.choice);
    r.sign = row.sign;
    for (int o = 0; o < 4; ++o) r.conditionals[o] = row.conditionals[o];
    report.rows.push_back(std::move(r));
  }
  for (int o = 0; o < 4; ++o) report.recombined[o] = e.totals[o];

  // Classical view: every sequence run with the same positive frequency 1/9.
  const double uniform = 1.0 / static_cast<double>(e.rows.size());
  for (int o = 0; o < 4; ++o) {
    ClassicalFrequency f;
    f.amplification = e.amplification;
    for (const SequenceRow& row : e.rows) {
      (row.sign > 0 ? f.p_pos : f.p_neg) += row.conditionals[o] * uniform;
    }
    f.reconstruction = f.amplification * (f.p_pos - f.p_neg);
    if (std::abs(f.reconstruction - report.recombined[o]) > 1e-12) {
      throw std::logic_error("classical-frequency reconstruction disagrees with recombination");
    }
    report.classical[o] = f;
  }
  return report;
}

std::array<ClassicalFrequency, 4> ghz_classical_frequencies() { return ghz_table().classical; }

double max_product_fidelity(const StateVector& two_qubit_state) {
  if (two_qubit_state.n_qubits() != 2) {
    throw std::invalid_argument("product fidelity is defined for two-qubit states");
  }
  if (std::abs(two_qubit_state.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("state is not normalized");
  }
  // Fold |psi> into the 2x2 coefficient matrix M(q0, q1); the squared largest
  // singular value is the best product overlap.
  Eigen::Matrix2cd m;
  m << two_qubit_state.amplitude(0), two_qubit_state.amplitude(1),
       two_qubit_state.amplitude(2), two_qubit_state.amplitude(3);
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
  const double top = svd.singularValues()(0);
  return top * top;
}

NegativityBoundReport negativity_lower_bound_check() {
  // |+0>: the input whose CNOT image is the maximally entangled Bell state.
  Eigen::Vector4cd plus_zero;
  const double s = 1.0 / std::sqrt(2.0);
  plus_zero << s, 0.0, s, 0.0;
  const DensityMatrix input(2, plus_zero * plus_zero.adjoint());

  Eigen::Matrix4cd signed_sum = Eigen::Matrix4cd::Zero();
  double achieved_negativity = 0.0;
  for (const LocalOperation& op : decompose_cnot()) {
    signed_sum += op.weight * apply_channel(to_channel(op), input).mat;
    if (op.weight < 0) achieved_negativity += -op.weight;
  }

  Eigen::Vector4cd bell;
  bell << s, 0.0, 0.0, s;
  const Eigen::Matrix4cd bell_proj = bell * bell.adjoint();

  NegativityBoundReport report;
  report.bell_fidelity = (bell.adjoint() * signed_sum * bell)(0).real();
  report.achieved_negativity = achieved_negativity;
  report.required_negativity = 2.0 * report.bell_fidelity - 1.0;
  report.output_residual = (signed_sum - bell_proj).cwiseAbs().maxCoeff();
  report.saturated = report.output_residual <= 1e-10 &&
                     std::abs(report.achieved_negativity - report.required_negativity) <= 1e-9;
  return report;
}

}  // namespace qpsim
