// SPDX-License-Identifier: Apache-2.0
#include "qpsim/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "qpsim/errors.hpp"
#include "qpsim/gates.hpp"

namespace qpsim {

namespace {

// User-entered decimals get a looser unitarity tolerance than the built-in
// gate constants.
constexpr double kUserUnitarityTol = 1e-9;

std::string lowercased(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

int parse_index(const std::string& token, int line) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(token, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a qubit index, got '" + token + "'");
  }
  if (pos != token.size() || v < 0) {
    throw ParseError(line, "expected a non-negative qubit index, got '" + token + "'");
  }
  return static_cast<int>(v);
}

double parse_real(const std::string& token, int line) {
  size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + token + "'");
  }
  if (pos != token.size()) throw ParseError(line, "expected a number, got '" + token + "'");
  return v;
}

void check_qubit(int q, int n, int line) {
  if (q >= n) {
    throw ParseError(line, "qubit " + std::to_string(q) + " out of range for register of " +
                               std::to_string(n));
  }
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Gate Gate::local(int qubit, const Eigen::Matrix2cd& m, std::string name) {
  Gate g;
  g.kind = Kind::LocalUnitary;
  g.qubit = qubit;
  g.matrix = m;
  g.name = std::move(name);
  return g;
}

Gate Gate::cnot(int control, int target) {
  Gate g;
  g.kind = Kind::Cnot;
  g.control = control;
  g.target = target;
  return g;
}

bool Gate::operator==(const Gate& other) const {
  if (kind != other.kind) return false;
  if (kind == Kind::Cnot) return control == other.control && target == other.target;
  return qubit == other.qubit && name == other.name && matrix == other.matrix;
}

int cnot_count(const Circuit& c) {
  return static_cast<int>(
      std::count_if(c.gates.begin(), c.gates.end(),
                    [](const Gate& g) { return g.kind == Gate::Kind::Cnot; }));
}

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::istringstream tokens(line);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;

    const std::string cmd = lowercased(tok[0]);
    if (!have_header) {
      if (cmd != "qubits") throw ParseError(line_no, "first instruction must be 'qubits <n>'");
      if (tok.size() != 2) throw ParseError(line_no, "usage: qubits <n>");
      const int n = parse_index(tok[1], line_no);
      if (n < 1) throw ParseError(line_no, "register size must be at least 1");
      c.n_qubits = n;
      have_header = true;
      continue;
    }

    if (cmd == "qubits") {
      throw ParseError(line_no, "duplicate 'qubits' header");
    } else if (cmd == "cnot") {
      if (tok.size() != 3) throw ParseError(line_no, "usage: cnot <control> <target>");
      const int control = parse_index(tok[1], line_no);
      const int target = parse_index(tok[2], line_no);
      check_qubit(control, c.n_qubits, line_no);
      check_qubit(target, c.n_qubits, line_no);
      if (control == target) throw ParseError(line_no, "cnot control equals target");
      c.gates.push_back(Gate::cnot(control, target));
    } else if (cmd == "u") {
      if (tok.size() != 10) {
        throw ParseError(line_no, "usage: u <q> <re00> <im00> <re01> <im01> <re10> <im10> "
                                  "<re11> <im11>");
      }
      const int q = parse_index(tok[1], line_no);
      check_qubit(q, c.n_qubits, line_no);
      double v[8];
      for (int i = 0; i < 8; ++i) v[i] = parse_real(tok[2 + i], line_no);
      Eigen::Matrix2cd m;
      m << cplx(v[0], v[1]), cplx(v[2], v[3]), cplx(v[4], v[5]), cplx(v[6], v[7]);
      if (unitarity_residual(m) > kUserUnitarityTol) {
        throw ParseError(line_no, "matrix is not unitary");
      }
      c.gates.push_back(Gate::local(q, m));
    } else if (auto m = named_gate_matrix(cmd)) {
      if (tok.size() != 2) throw ParseError(line_no, "usage: " + cmd + " <q>");
      const int q = parse_index(tok[1], line_no);
      check_qubit(q, c.n_qubits, line_no);
      c.gates.push_back(Gate::local(q, *m, cmd));
    } else {
      throw ParseError(line_no, "unknown instruction '" + tok[0] + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'qubits' header");
  return c;
}

std::string render_circuit(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.n_qubits) + "\n";
  for (const Gate& g : c.gates) {
    if (g.kind == Gate::Kind::Cnot) {
      out += "cnot " + std::to_string(g.control) + " " + std::to_string(g.target) + "\n";
    } else if (!g.name.empty()) {
      out += g.name + " " + std::to_string(g.qubit) + "\n";
    } else {
      out += "u " + std::to_string(g.qubit);
      for (int r = 0; r < 2; ++r) {
        for (int col = 0; col < 2; ++col) {
          out += " " + format_real(g.matrix(r, col).real());
          out += " " + format_real(g.matrix(r, col).imag());
        }
      }
      out += "\n";
    }
  }
  return out;
}

void validate_circuit(const Circuit& c) {
  if (c.n_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
  for (size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const std::string where = "gate " + std::to_string(i);
    if (g.kind == Gate::Kind::Cnot) {
      if (g.control == g.target) throw std::invalid_argument(where + ": control equals target");
      if (g.control < 0 || g.control >= c.n_qubits || g.target < 0 || g.target >= c.n_qubits) {
        throw std::invalid_argument(where + ": qubit index out of range");
      }
    } else {
      if (g.qubit < 0 || g.qubit >= c.n_qubits) {
        throw std::invalid_argument(where + ": qubit index out of range");
      }
      if (unitarity_residual(g.matrix) > kUserUnitarityTol) {
        throw std::invalid_argument(where + ": matrix is not unitary");
      }
    }
  }
}

}  // namespace qpsim
