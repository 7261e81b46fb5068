// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace qpsim {

using cplx = std::complex<double>;

enum class PauliLetter : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

Eigen::Matrix2cd pauli_matrix(PauliLetter p);

// One Pauli letter per qubit, e.g. "XXX". Immutable after construction.
struct PauliString {
  std::vector<PauliLetter> letters;

  int size() const { return static_cast<int>(letters.size()); }
  bool all_identity() const;
  std::string to_string() const;

  bool operator==(const PauliString&) const = default;
};

// Parses n letters from {I,X,Y,Z}, case-insensitive. When require_non_identity
// is set (parity observables), the all-I string is rejected.
PauliString parse_pauli(const std::string& text, int n, bool require_non_identity = true);

// A Pauli string together with the parity (+1/-1) whose probability is queried.
struct Observable {
  PauliString pauli;
  int parity = +1;

  std::string to_string() const;
  bool operator==(const Observable&) const = default;
};

// Accepts "XXX", "XXX=+1", "XXX=-1", "XXX=1".
Observable parse_observable(const std::string& text, int n);

}  // namespace qpsim
