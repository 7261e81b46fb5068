// SPDX-License-Identifier: Apache-2.0
#include "qpsim/gates.hpp"

#include <cmath>
#include <complex>

namespace qpsim {

namespace {

using Eigen::Matrix2cd;
using std::complex;

const complex<double> kI{0.0, 1.0};

Matrix2cd make(complex<double> a, complex<double> b, complex<double> c, complex<double> d) {
  Matrix2cd m;
  m << a, b, c, d;
  return m;
}

}  // namespace

std::optional<Eigen::Matrix2cd> named_gate_matrix(const std::string& name) {
  static const double s = 1.0 / std::sqrt(2.0);
  if (name == "h") return make(s, s, s, -s);
  if (name == "x") return make(0, 1, 1, 0);
  if (name == "y") return make(0, -kI, kI, 0);
  if (name == "z") return make(1, 0, 0, -1);
  if (name == "s") return make(1, 0, 0, kI);
  if (name == "sdg") return make(1, 0, 0, -kI);
  if (name == "t") return make(1, 0, 0, std::polar(1.0, M_PI / 4));
  if (name == "tdg") return make(1, 0, 0, std::polar(1.0, -M_PI / 4));
  return std::nullopt;
}

double unitarity_residual(const Eigen::Matrix2cd& u) {
  return (u * u.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
}

}  // namespace qpsim
