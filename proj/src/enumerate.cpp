// SPDX-License-Identifier: Apache-2.0
#include "qpsim/enumerate.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "qpsim/errors.hpp"
#include "qpsim/trajectory.hpp"

namespace qpsim {

namespace {

constexpr double kPruneTol = 1e-15;

// P(product of per-qubit outcomes equals the queried parity), by sequential
// convolution of the per-qubit two-point distributions. Identity letters
// contribute +1 deterministically.
double parity_match_probability(const ProductState& state, const Observable& ob) {
  double p_plus = 1.0, p_minus = 0.0;
  for (int k = 0; k < ob.pauli.size(); ++k) {
    const PauliLetter letter = ob.pauli.letters[k];
    if (letter == PauliLetter::I) continue;
    const double q = 0.5 * (1.0 + letter_expectation(state.qubits[k], letter));
    const double plus = p_plus * q + p_minus * (1.0 - q);
    p_minus = p_plus * (1.0 - q) + p_minus * q;
    p_plus = plus;
  }
  return ob.parity > 0 ? p_plus : p_minus;
}

struct Enumerator {
  const Circuit& circuit;
  const std::vector<Observable>& observables;
  std::vector<std::uint64_t> pow3_suffix;  // 3^(cnots remaining after position k)
  std::vector<double> conditionals;        // [sequence][observable], weight-accumulated
  std::vector<double> weights;             // [sequence], should each reach 1
  ProductState state;

  void leaf(std::uint64_t seq, double weight) {
    double* row = &conditionals[seq * observables.size()];
    for (size_t o = 0; o < observables.size(); ++o) {
      row[o] += weight * parity_match_probability(state, observables[o]);
    }
    weights[seq] += weight;
  }

  void walk(size_t gate_index, int cnot_index, std::uint64_t seq, double weight) {
    if (gate_index == circuit.gates.size()) {
      leaf(seq, weight);
      return;
    }
    const Gate& g = circuit.gates[gate_index];
    if (g.kind == Gate::Kind::LocalUnitary) {
      const Eigen::Vector2cd saved = state.qubits[g.qubit];
      state.qubits[g.qubit] = g.matrix * saved;
      walk(gate_index + 1, cnot_index, seq, weight);
      state.qubits[g.qubit] = saved;
      return;
    }
    const std::uint64_t digit = pow3_suffix[cnot_index];
    for (int k = 0; k < 3; ++k) {
      const LocalOperation& op = decompose_cnot()[k];
      const std::uint64_t child_seq = seq + static_cast<std::uint64_t>(k) * digit;
      const Eigen::Vector2cd saved_c = state.qubits[g.control];
      const Eigen::Vector2cd saved_t = state.qubits[g.target];
      for (const LocalBranch& b : op.branches) {
        Eigen::Vector2cd cs = b.control_op * saved_c;
        Eigen::Vector2cd ts = b.target_op * saved_t;
        const double nc = cs.squaredNorm(), nt = ts.squaredNorm();
        const double w = op.rule == BranchRule::Born ? nc * nt : 0.5;
        if (w < kPruneTol) continue;
        state.qubits[g.control] = cs / std::sqrt(nc);
        state.qubits[g.target] = ts / std::sqrt(nt);
        walk(gate_index + 1, cnot_index + 1, child_seq, weight * w);
      }
      state.qubits[g.control] = saved_c;
      state.qubits[g.target] = saved_t;
    }
  }
};

SequenceChoice decode_choice(std::uint64_t seq, int n_cnots) {
  SequenceChoice choice(n_cnots);
  for (int k = n_cnots - 1; k >= 0; --k) {
    choice[k] = static_cast<LocalOpKind>(seq % 3);
    seq /= 3;
  }
  return choice;
}

}  // namespace

EnumerationReport enumerate_sequences(const Circuit& c, const ProductState& input,
                                      const std::vector<Observable>& observables,
                                      double branch_budget) {
  if (input.n_qubits() != c.n_qubits) {
    throw std::invalid_argument("input state does not match circuit register");
  }
  for (const Observable& ob : observables) {
    if (ob.pauli.size() != c.n_qubits) {
      throw std::invalid_argument("observable '" + ob.to_string() +
                                  "' does not match circuit register");
    }
  }
  const int n_cnots = cnot_count(c);
  const double worst_case = std::pow(6.0, n_cnots);  // 3^N sequences x 2^N branches
  if (worst_case > branch_budget) {
    throw BudgetError("enumeration needs a branch budget of at least " +
                      std::to_string(worst_case) + " (3^N * 2^N with N = " +
                      std::to_string(n_cnots) + "), configured " +
                      std::to_string(branch_budget));
  }

  std::uint64_t n_sequences = 1;
  for (int k = 0; k < n_cnots; ++k) n_sequences *= 3;

  Enumerator e{c, observables, {}, {}, {}, input};
  // First CNOT owns the most significant base-3 digit.
  e.pow3_suffix.resize(n_cnots);
  for (std::uint64_t k = 0, v = n_sequences; k < static_cast<std::uint64_t>(n_cnots); ++k) {
    v /= 3;
    e.pow3_suffix[k] = v;
  }
  e.conditionals.assign(n_sequences * observables.size(), 0.0);
  e.weights.assign(n_sequences, 0.0);
  e.walk(0, 0, 0, 1.0);

  EnumerationReport report;
  report.n_qubits = c.n_qubits;
  report.n_cnots = n_cnots;
  report.observables = observables;
  report.amplification = amplification_factor(n_cnots);
  report.rows.reserve(n_sequences);
  report.totals.assign(observables.size(), 0.0);
  for (std::uint64_t seq = 0; seq < n_sequences; ++seq) {
    assert(std::abs(e.weights[seq] - 1.0) < 1e-9);
    SequenceRow row;
    row.choice = decode_choice(seq, n_cnots);
    row.sign = sequence_sign(row.choice);
    row.conditionals.assign(e.conditionals.begin() + seq * observables.size(),
                            e.conditionals.begin() + (seq + 1) * observables.size());
    for (size_t o = 0; o < observables.size(); ++o) {
      report.totals[o] += row.sign * row.conditionals[o];
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace qpsim
