// SPDX-License-Identifier: Apache-2.0
#include "qpsim/pauli.hpp"

#include <algorithm>
#include <cctype>

#include "qpsim/errors.hpp"

namespace qpsim {

Eigen::Matrix2cd pauli_matrix(PauliLetter p) {
  Eigen::Matrix2cd m;
  const cplx i{0.0, 1.0};
  switch (p) {
    case PauliLetter::I: m << 1, 0, 0, 1; break;
    case PauliLetter::X: m << 0, 1, 1, 0; break;
    case PauliLetter::Y: m << 0, -i, i, 0; break;
    case PauliLetter::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

bool PauliString::all_identity() const {
  return std::all_of(letters.begin(), letters.end(),
                     [](PauliLetter l) { return l == PauliLetter::I; });
}

std::string PauliString::to_string() const {
  std::string s;
  s.reserve(letters.size());
  for (PauliLetter l : letters) s.push_back(static_cast<char>(l));
  return s;
}

PauliString parse_pauli(const std::string& text, int n, bool require_non_identity) {
  if (static_cast<int>(text.size()) != n) {
    throw ParseError("pauli string '" + text + "' has length " + std::to_string(text.size()) +
                     ", expected " + std::to_string(n));
  }
  PauliString p;
  p.letters.reserve(text.size());
  for (char c : text) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'I': p.letters.push_back(PauliLetter::I); break;
      case 'X': p.letters.push_back(PauliLetter::X); break;
      case 'Y': p.letters.push_back(PauliLetter::Y); break;
      case 'Z': p.letters.push_back(PauliLetter::Z); break;
      default:
        throw ParseError(std::string("invalid pauli letter '") + c + "' in '" + text + "'");
    }
  }
  if (require_non_identity && p.all_identity()) {
    throw ParseError("parity observable needs at least one non-identity letter: '" + text + "'");
  }
  return p;
}

std::string Observable::to_string() const {
  return pauli.to_string() + (parity > 0 ? "=+1" : "=-1");
}

Observable parse_observable(const std::string& text, int n) {
  std::string pauli_part = text;
  int parity = +1;
  if (auto eq = text.find('='); eq != std::string::npos) {
    pauli_part = text.substr(0, eq);
    const std::string parity_part = text.substr(eq + 1);
    if (parity_part == "+1" || parity_part == "1") {
      parity = +1;
    } else if (parity_part == "-1") {
      parity = -1;
    } else {
      throw ParseError("observable parity must be +1 or -1, got '" + parity_part + "'");
    }
  }
  return Observable{parse_pauli(pauli_part, n, /*require_non_identity=*/true), parity};
}

}  // namespace qpsim
