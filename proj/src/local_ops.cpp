// SPDX-License-Identifier: Apache-2.0
#include "qpsim/local_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace qpsim {

namespace {

using Eigen::Matrix2cd;

constexpr int kBruteForceCensusMax = 14;  // 3^14 ~ 4.8M sequences
constexpr int kCensusOverflowMax = 38;    // 3^39 overflows int64

Matrix2cd projector_z(int outcome) {
  Matrix2cd m = Matrix2cd::Zero();
  m(outcome, outcome) = 1.0;
  return m;
}

Matrix2cd projector_x(int sign) {
  Matrix2cd m;
  const double s = sign > 0 ? 0.5 : -0.5;
  m << 0.5, s, s, 0.5;
  return m;
}

// (I + i s Z)/sqrt(2) and (I + i s X)/sqrt(2): the pi/2 rotations of the
// negative-weight operation.
Matrix2cd half_turn_z(double s) {
  const cplx i{0.0, 1.0};
  Matrix2cd m = Matrix2cd::Identity();
  m(0, 0) += i * s;
  m(1, 1) -= i * s;
  return m / std::sqrt(2.0);
}

Matrix2cd half_turn_x(double s) {
  const cplx i{0.0, 1.0};
  Matrix2cd m = Matrix2cd::Identity() / std::sqrt(2.0);
  m(0, 1) = i * s / std::sqrt(2.0);
  m(1, 0) = i * s / std::sqrt(2.0);
  return m;
}

std::array<LocalOperation, 3> build_decomposition() {
  const Matrix2cd eye = Matrix2cd::Identity();
  const Matrix2cd x = pauli_matrix(PauliLetter::X);
  const Matrix2cd z = pauli_matrix(PauliLetter::Z);

  LocalOperation l1{LocalOpKind::L1, +1, BranchRule::Born,
                    {LocalBranch{projector_z(0), eye}, LocalBranch{projector_z(1), x}}};
  LocalOperation l2{LocalOpKind::L2, +1, BranchRule::Born,
                    {LocalBranch{eye, projector_x(+1)}, LocalBranch{z, projector_x(-1)}}};
  LocalOperation l3{LocalOpKind::L3bar, -1, BranchRule::Half,
                    {LocalBranch{half_turn_z(+1.0), half_turn_x(-1.0)},
                     LocalBranch{half_turn_z(-1.0), half_turn_x(+1.0)}}};
  return {l1, l2, l3};
}

std::uint64_t pow3(int n) {
  std::uint64_t v = 1;
  for (int k = 0; k < n; ++k) v *= 3;
  return v;
}

}  // namespace

const std::array<LocalOperation, 3>& decompose_cnot() {
  static const std::array<LocalOperation, 3> ops = build_decomposition();
  return ops;
}

const LocalOperation& local_operation(LocalOpKind kind) {
  return decompose_cnot()[static_cast<int>(kind)];
}

Channel to_channel(const LocalOperation& op) {
  const double branch_weight = op.rule == BranchRule::Half ? 0.5 : 1.0;
  Channel ch{2, {}};
  for (const LocalBranch& b : op.branches) {
    ch.branches.push_back({kron(b.control_op, b.target_op), branch_weight});
  }
  return ch;
}

std::string kind_label(LocalOpKind kind) {
  switch (kind) {
    case LocalOpKind::L1: return "L1";
    case LocalOpKind::L2: return "L2";
    case LocalOpKind::L3bar: return "L3bar";
  }
  throw std::logic_error("unreachable");
}

int sequence_sign(const SequenceChoice& choice) {
  int sign = +1;
  for (LocalOpKind k : choice) {
    if (k == LocalOpKind::L3bar) sign = -sign;
  }
  return sign;
}

std::string sequence_label(const SequenceChoice& choice) {
  if (choice.empty()) return "(none)";
  std::string s = kind_label(choice[0]);
  for (size_t i = 1; i < choice.size(); ++i) s += "-" + kind_label(choice[i]);
  return s;
}

std::pair<std::uint64_t, std::uint64_t> sequence_census(int n_cnots) {
  if (n_cnots < 0) throw std::invalid_argument("cnot count must be non-negative");
  if (n_cnots > kCensusOverflowMax) {
    throw std::overflow_error("sequence census overflows 64-bit counts beyond N = " +
                              std::to_string(kCensusOverflowMax));
  }

  std::uint64_t positive = 0, negative = 0;
  if (n_cnots <= kBruteForceCensusMax) {
    const std::uint64_t total = pow3(n_cnots);
    for (std::uint64_t seq = 0; seq < total; ++seq) {
      int l3_count = 0;
      for (std::uint64_t v = seq; v != 0; v /= 3) l3_count += (v % 3 == 2);
      (l3_count % 2 == 0 ? positive : negative) += 1;
    }
  } else {
    // Appending one more gate keeps parity for L1/L2 and flips it for L3bar.
    positive = 1;
    for (int k = 0; k < n_cnots; ++k) {
      const std::uint64_t p = positive, n = negative;
      positive = 2 * p + n;
      negative = 2 * n + p;
    }
  }

  const std::uint64_t total = pow3(n_cnots);
  if (positive != (total + 1) / 2 || negative != (total - 1) / 2) {
    throw std::logic_error("sequence census disagrees with the closed form");
  }
  return {positive, negative};
}

double overhead_ratio(int n_cnots) {
  if (n_cnots < 0) throw std::invalid_argument("cnot count must be non-negative");
  if (n_cnots <= kCensusOverflowMax) {
    const auto [positive, negative] = sequence_census(n_cnots);
    return static_cast<double>(positive + negative) / static_cast<double>(positive - negative);
  }
  return std::pow(3.0, n_cnots);
}

double amplification_factor(int n_cnots) {
  if (n_cnots < 0) throw std::invalid_argument("cnot count must be non-negative");
  if (n_cnots <= kCensusOverflowMax) return static_cast<double>(pow3(n_cnots));
  return std::pow(3.0, n_cnots);
}

}  // namespace qpsim
