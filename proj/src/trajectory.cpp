// SPDX-License-Identifier: Apache-2.0
#include "qpsim/trajectory.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace qpsim {

namespace {

constexpr double kPruneTol = 1e-15;

void check_gate_qubits(const ProductState& state, int control, int target) {
  const int n = state.n_qubits();
  if (control < 0 || control >= n || target < 0 || target >= n) {
    throw std::invalid_argument("qubit index out of range");
  }
  if (control == target) throw std::invalid_argument("control equals target");
}

}  // namespace

std::vector<WeightedState> expand_branches(const ProductState& state, const LocalOperation& op,
                                           int control, int target) {
  check_gate_qubits(state, control, target);
  std::vector<WeightedState> out;
  out.reserve(2);
  for (const LocalBranch& b : op.branches) {
    Eigen::Vector2cd cs = b.control_op * state.qubits[control];
    Eigen::Vector2cd ts = b.target_op * state.qubits[target];
    const double nc = cs.squaredNorm(), nt = ts.squaredNorm();
    const double w = op.rule == BranchRule::Born ? nc * nt : 0.5;
    if (w < kPruneTol) continue;
    WeightedState ws{state, w};
    ws.state.qubits[control] = cs / std::sqrt(nc);
    ws.state.qubits[target] = ts / std::sqrt(nt);
    out.push_back(std::move(ws));
  }
  return out;
}

int apply_local_op(ProductState& state, const LocalOperation& op, int control, int target,
                   SplitMix64& rng) {
  check_gate_qubits(state, control, target);
  int pick;
  if (op.rule == BranchRule::Half) {
    pick = rng.uniform() < 0.5 ? 0 : 1;
  } else {
    const LocalBranch& b0 = op.branches[0];
    double p0 = (b0.control_op * state.qubits[control]).squaredNorm() *
                (b0.target_op * state.qubits[target]).squaredNorm();
    p0 = std::min(1.0, std::max(0.0, p0));
    // Degenerate branches are never drawn; renormalization below stays safe.
    if (p0 < kPruneTol) {
      pick = 1;
    } else if (1.0 - p0 < kPruneTol) {
      pick = 0;
    } else {
      pick = rng.uniform() < p0 ? 0 : 1;
    }
  }
  const LocalBranch& b = op.branches[pick];
  Eigen::Vector2cd cs = b.control_op * state.qubits[control];
  Eigen::Vector2cd ts = b.target_op * state.qubits[target];
  const double nc = cs.norm(), nt = ts.norm();
  assert(nc > 0.0 && nt > 0.0);
  state.qubits[control] = cs / nc;
  state.qubits[target] = ts / nt;
  return pick;
}

int sample_parity_outcome(const ProductState& state, const PauliString& p, SplitMix64& rng) {
  if (p.size() != state.n_qubits()) {
    throw std::invalid_argument("pauli string length does not match register");
  }
  int outcome = +1;
  for (int k = 0; k < p.size(); ++k) {
    if (p.letters[k] == PauliLetter::I) continue;
    const double p_up = 0.5 * (1.0 + letter_expectation(state.qubits[k], p.letters[k]));
    outcome *= rng.uniform() < p_up ? +1 : -1;
  }
  return outcome;
}

void run_trajectory_into(TrajectoryRecord& rec, const Circuit& c, const ProductState& input,
                         SplitMix64& rng) {
  if (input.n_qubits() != c.n_qubits) {
    throw std::invalid_argument("input state does not match circuit register");
  }
  rec.choice.clear();
  rec.branch_outcomes.clear();
  rec.observable_outcomes.clear();
  rec.sign = +1;
  rec.final_state = input;
  for (const Gate& g : c.gates) {
    if (g.kind == Gate::Kind::LocalUnitary) {
      rec.final_state.qubits[g.qubit] = g.matrix * rec.final_state.qubits[g.qubit];
      continue;
    }
    const auto kind = static_cast<LocalOpKind>(rng.uniform_int(3));
    const LocalOperation& op = local_operation(kind);
    const int branch = apply_local_op(rec.final_state, op, g.control, g.target, rng);
    rec.choice.push_back(kind);
    rec.branch_outcomes.push_back(branch);
    if (kind == LocalOpKind::L3bar) rec.sign = -rec.sign;
  }
}

TrajectoryRecord run_trajectory(const Circuit& c, const ProductState& input, SplitMix64& rng) {
  TrajectoryRecord rec;
  run_trajectory_into(rec, c, input, rng);
  return rec;
}

TrajectoryRecord run_trajectory(const Circuit& c, const ProductState& input,
                                const std::vector<Observable>& observables, SplitMix64& rng) {
  TrajectoryRecord rec;
  run_trajectory_into(rec, c, input, rng);
  rec.observable_outcomes.reserve(observables.size());
  for (const Observable& ob : observables) {
    rec.observable_outcomes.push_back(sample_parity_outcome(rec.final_state, ob.pauli, rng));
  }
  return rec;
}

}  // namespace qpsim
