// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>

#include "qpsim/channel.hpp"
#include "qpsim/chi.hpp"
#include "qpsim/local_ops.hpp"
#include "test_util.hpp"

using namespace qpsim;

namespace {

// Reference operators built from scratch, independent of local_ops.cpp.
struct ReferenceOps {
  Eigen::Matrix4cd m_z0, m_z1, m_x0, m_x1, u_a, u_b;

  ReferenceOps() {
    Eigen::Matrix2cd eye = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd x, z;
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    const cplx i{0.0, 1.0};
    m_z0 = kron(0.5 * (eye + z), eye);
    m_z1 = kron(0.5 * (eye - z), x);
    m_x0 = kron(eye, 0.5 * (eye + x));
    m_x1 = kron(z, 0.5 * (eye - x));
    u_a = 0.5 * kron(eye + i * z, eye - i * x);
    u_b = u_a.inverse();
  }

  Eigen::Matrix4cd l1(const Eigen::Matrix4cd& rho) const {
    return m_z0 * rho * m_z0.adjoint() + m_z1 * rho * m_z1.adjoint();
  }
  Eigen::Matrix4cd l2(const Eigen::Matrix4cd& rho) const {
    return m_x0 * rho * m_x0.adjoint() + m_x1 * rho * m_x1.adjoint();
  }
  Eigen::Matrix4cd l3bar(const Eigen::Matrix4cd& rho) const {
    return 0.5 * u_a * rho * u_a.adjoint() + 0.5 * u_b * rho * u_b.adjoint();
  }
};

DensityMatrix random_density(SplitMix64& rng, int n_qubits) {
  const Eigen::Index d = Eigen::Index(1) << n_qubits;
  Eigen::MatrixXcd g(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) g(r, c) = cplx(test::gaussian(rng), test::gaussian(rng));
  }
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(n_qubits, rho);
}

}  // namespace

TEST_CASE("cnot channel equals the coherent superposition and the permutation") {
  const Eigen::Matrix4cd u = cnot_matrix();
  Eigen::Matrix4cd perm = Eigen::Matrix4cd::Zero();
  perm(0, 0) = perm(1, 1) = perm(2, 3) = perm(3, 2) = 1.0;
  CHECK(test::max_abs_diff(u, perm) <= 1e-15);

  // |00> -> |00>, |10> -> |11>
  Eigen::Vector4cd e00 = Eigen::Vector4cd::Zero(), e10 = Eigen::Vector4cd::Zero();
  e00(0) = 1.0;
  e10(2) = 1.0;
  CHECK(std::abs((u * e00)(0) - 1.0) < 1e-15);
  CHECK(std::abs((u * e10)(3) - 1.0) < 1e-15);
}

TEST_CASE("apply_channel: L1 examples against hand Kraus sums") {
  const ReferenceOps ref;
  const Channel l1 = to_channel(local_operation(LocalOpKind::L1));

  // |00><00| is a fixed point.
  Eigen::Vector4cd e00 = Eigen::Vector4cd::Zero();
  e00(0) = 1.0;
  const DensityMatrix rho00(2, e00 * e00.adjoint());
  CHECK(test::max_abs_diff(apply_channel(l1, rho00).mat, rho00.mat) < 1e-15);

  // |+0><+0| -> (|00><00| + |11><11|)/2.
  Eigen::Vector4cd plus0;
  const double s = 1.0 / std::sqrt(2.0);
  plus0 << s, 0, s, 0;
  const DensityMatrix rho_plus0(2, plus0 * plus0.adjoint());
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
  expected(0, 0) = 0.5;
  expected(3, 3) = 0.5;
  CHECK(test::max_abs_diff(apply_channel(l1, rho_plus0).mat, expected) < 1e-15);
  CHECK(test::max_abs_diff(ref.l1(rho_plus0.mat), expected) < 1e-15);

  // Identity channel.
  SplitMix64 rng(3);
  const DensityMatrix rho = random_density(rng, 2);
  CHECK(test::max_abs_diff(apply_channel(identity_channel(2), rho).mat, rho.mat) < 1e-15);
  CHECK_THROWS_AS(apply_channel(l1, random_density(rng, 1)), std::invalid_argument);
}

TEST_CASE("decomposition operators match the reference construction") {
  const ReferenceOps ref;
  const auto& ops = decompose_cnot();
  CHECK(test::max_abs_diff(kron(ops[0].branches[0].control_op, ops[0].branches[0].target_op),
                           ref.m_z0) < 1e-15);
  CHECK(test::max_abs_diff(kron(ops[0].branches[1].control_op, ops[0].branches[1].target_op),
                           ref.m_z1) < 1e-15);
  CHECK(test::max_abs_diff(kron(ops[1].branches[0].control_op, ops[1].branches[0].target_op),
                           ref.m_x0) < 1e-15);
  CHECK(test::max_abs_diff(kron(ops[1].branches[1].control_op, ops[1].branches[1].target_op),
                           ref.m_x1) < 1e-15);
  CHECK(test::max_abs_diff(kron(ops[2].branches[0].control_op, ops[2].branches[0].target_op),
                           ref.u_a) < 1e-15);
  CHECK(test::max_abs_diff(kron(ops[2].branches[1].control_op, ops[2].branches[1].target_op),
                           ref.u_b) < 1e-12);
}

TEST_CASE("CPTP structure of the local operations") {
  CHECK(completeness_residual(to_channel(local_operation(LocalOpKind::L1))) <= 1e-12);
  CHECK(completeness_residual(to_channel(local_operation(LocalOpKind::L2))) <= 1e-12);
  const auto& l3 = local_operation(LocalOpKind::L3bar);
  const Eigen::Matrix4cd ua = kron(l3.branches[0].control_op, l3.branches[0].target_op);
  const Eigen::Matrix4cd ub = kron(l3.branches[1].control_op, l3.branches[1].target_op);
  CHECK(test::max_abs_diff(ua * ua.adjoint(), Eigen::Matrix4cd::Identity()) <= 1e-12);
  CHECK(test::max_abs_diff(ub, ua.adjoint()) <= 1e-12);
  CHECK(test::max_abs_diff(ua * ub, Eigen::Matrix4cd::Identity()) <= 1e-12);
}

TEST_CASE("channel equality on all 16 pauli-product basis inputs") {
  const Eigen::Matrix4cd u = cnot_matrix();
  const auto& ops = decompose_cnot();
  double worst = 0.0;
  for (const Eigen::Matrix4cd& basis : pauli_product_basis()) {
    Eigen::Matrix4cd lhs = Eigen::Matrix4cd::Zero();
    for (const LocalOperation& op : ops) {
      const Channel ch = to_channel(op);
      for (const KrausBranch& b : ch.branches) {
        lhs += static_cast<double>(op.weight) * b.weight * (b.op * basis * b.op.adjoint());
      }
    }
    worst = std::max(worst, test::max_abs_diff(lhs, Eigen::Matrix4cd(u * basis * u.adjoint())));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("signed channel sum reproduces cnot on random densities") {
  SplitMix64 rng(21);
  const Channel cnot = cnot_channel();
  for (int it = 0; it < 20; ++it) {
    const DensityMatrix rho = random_density(rng, 2);
    Eigen::Matrix4cd lhs = Eigen::Matrix4cd::Zero();
    for (const LocalOperation& op : decompose_cnot()) {
      lhs += static_cast<double>(op.weight) * apply_channel(to_channel(op), rho).mat;
    }
    CHECK(test::max_abs_diff(lhs, apply_channel(cnot, rho).mat) < 1e-12);
  }
}

TEST_CASE("chi of the identity channel") {
  const ChiMatrix chi = chi_of_channel(identity_channel(2));
  CHECK(std::abs(chi.m(0, 0) - 1.0) < 1e-14);
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      if (i == 0 && j == 0) continue;
      CHECK(std::abs(chi.m(i, j)) < 1e-14);
    }
  }
}

TEST_CASE("chi of cnot: rank-1 with support {II, IX, ZI, ZX}") {
  const ChiMatrix chi = chi_of_channel(cnot_channel());
  const auto support = chi_support(chi, 1e-12);
  REQUIRE(support.size() == 4);
  CHECK(support[0] == pauli_product_index("II"));
  CHECK(support[1] == pauli_product_index("IX"));
  CHECK(support[2] == pauli_product_index("ZI"));
  CHECK(support[3] == pauli_product_index("ZX"));
  for (int i : support) {
    for (int j : support) CHECK(std::abs(std::abs(chi.m(i, j)) - 0.25) < 1e-12);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<cplx, 16, 16>> es(chi.m, Eigen::EigenvaluesOnly);
  CHECK(std::abs(es.eigenvalues()(15) - 1.0) < 1e-12);
  CHECK(std::abs(es.eigenvalues()(14)) < 1e-12);
}

TEST_CASE("chi decomposition identity: chi(L1)+chi(L2)-chi(L3bar) = chi(cnot)") {
  Eigen::Matrix<cplx, 16, 16> sum = Eigen::Matrix<cplx, 16, 16>::Zero();
  for (const LocalOperation& op : decompose_cnot()) {
    sum += static_cast<double>(op.weight) * chi_of_channel(to_channel(op)).m;
  }
  CHECK(test::max_abs_diff(sum, chi_of_channel(cnot_channel()).m) <= 1e-10);
}

TEST_CASE("chi reconstruction reproduces apply_channel on random densities") {
  SplitMix64 rng(22);
  std::vector<Channel> channels = {cnot_channel(), identity_channel(2)};
  for (const LocalOperation& op : decompose_cnot()) channels.push_back(to_channel(op));
  // A couple of random two-qubit unitary channels as well.
  for (int k = 0; k < 2; ++k) {
    channels.push_back(
        Channel{2, {{kron(test::random_unitary(rng), test::random_unitary(rng)), 1.0}}});
  }
  for (const Channel& ch : channels) {
    const ChiMatrix chi = chi_of_channel(ch);
    CHECK(chi.hermiticity_residual() <= 1e-10);
    for (int it = 0; it < 20; ++it) {
      const DensityMatrix rho = random_density(rng, 2);
      CHECK(test::max_abs_diff(chi_apply(chi, rho).mat, apply_channel(ch, rho).mat) < 1e-9);
    }
  }
}

TEST_CASE("density matrix validation") {
  SplitMix64 rng(23);
  random_density(rng, 2).validate_physical();
  DensityMatrix bad(1, Eigen::Matrix2cd::Identity());  // trace 2
  CHECK_THROWS_AS(bad.validate_physical(), std::logic_error);
  CHECK_THROWS_AS(DensityMatrix(2, Eigen::Matrix2cd::Identity()), std::invalid_argument);
  CHECK_THROWS_AS(chi_of_channel(identity_channel(1)), std::invalid_argument);
}
