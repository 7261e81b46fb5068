// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "qpsim/circuit.hpp"
#include "qpsim/errors.hpp"
#include "qpsim/gates.hpp"
#include "test_util.hpp"

using namespace qpsim;

TEST_CASE("parse: GHZ circuit") {
  const Circuit c = parse_circuit("qubits 3\nh 0\ncnot 0 1\ncnot 0 2");
  CHECK(c.n_qubits == 3);
  REQUIRE(c.gates.size() == 3);
  CHECK(c.gates[0].kind == Gate::Kind::LocalUnitary);
  CHECK(c.gates[0].qubit == 0);
  CHECK(c.gates[0].name == "h");
  CHECK(c.gates[1].kind == Gate::Kind::Cnot);
  CHECK(c.gates[1].control == 0);
  CHECK(c.gates[1].target == 1);
  CHECK(c.gates[2].control == 0);
  CHECK(c.gates[2].target == 2);
  CHECK(cnot_count(c) == 2);
}

TEST_CASE("parse: empty circuit and comments") {
  const Circuit c = parse_circuit("# a comment\n\nqubits 1\n# trailing comment\n");
  CHECK(c.n_qubits == 1);
  CHECK(c.gates.empty());
  CHECK(cnot_count(c) == 0);
}

TEST_CASE("parse: custom unitary") {
  const double s = 1.0 / std::sqrt(2.0);
  char text[256];
  std::snprintf(text, sizeof(text), "qubits 2\nu 1 %.17g 0 %.17g 0 %.17g 0 %.17g 0", s, s, s, -s);
  const Circuit c = parse_circuit(text);
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0].qubit == 1);
  CHECK(test::max_abs_diff(c.gates[0].matrix, *named_gate_matrix("h")) < 1e-15);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_circuit("qubits 2\ncnot 0 0"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\ncnot 0 2"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nh 5"), ParseError);
  CHECK_THROWS_AS(parse_circuit("h 0\nqubits 2"), ParseError);
  CHECK_THROWS_AS(parse_circuit(""), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nfoo 1"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nqubits 3"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nu 0 1 0 0 0 0 0 1 1"), ParseError);  // non-unitary
  CHECK_THROWS_AS(parse_circuit("qubits 0"), ParseError);

  try {
    parse_circuit("qubits 2\ncnot 0 0");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("control equals target") != std::string::npos);
  }
}

TEST_CASE("named gates are unitary to 1e-15") {
  for (const char* name : {"h", "x", "y", "z", "s", "sdg", "t", "tdg"}) {
    const auto m = named_gate_matrix(name);
    REQUIRE(m.has_value());
    CHECK(unitarity_residual(*m) <= 1e-15);
  }
  CHECK(!named_gate_matrix("cz").has_value());
}

TEST_CASE("render/parse round trip") {
  SplitMix64 rng(2024);
  for (int it = 0; it < 25; ++it) {
    Circuit c = test::random_circuit(rng, 1 + rng.uniform_int(4), rng.uniform_int(4),
                                     rng.uniform_int(5));
    if (c.n_qubits == 1) {
      c.gates.erase(std::remove_if(c.gates.begin(), c.gates.end(),
                                   [](const Gate& g) { return g.kind == Gate::Kind::Cnot; }),
                    c.gates.end());
    }
    const Circuit reparsed = parse_circuit(render_circuit(c));
    CHECK(reparsed == c);
  }
  // Named gates keep their mnemonics through the round trip.
  const Circuit ghz = parse_circuit("qubits 3\nh 0\ncnot 0 1\ncnot 0 2");
  CHECK(parse_circuit(render_circuit(ghz)) == ghz);
  CHECK(render_circuit(ghz) == "qubits 3\nh 0\ncnot 0 1\ncnot 0 2\n");
}

TEST_CASE("parser rejects out-of-range indices (fuzz)") {
  SplitMix64 rng(77);
  for (int it = 0; it < 200; ++it) {
    const int n = 1 + rng.uniform_int(5);
    const int bad = n + rng.uniform_int(10);
    std::string text = "qubits " + std::to_string(n) + "\n";
    switch (rng.uniform_int(3)) {
      case 0: text += "h " + std::to_string(bad); break;
      case 1: text += "cnot " + std::to_string(bad) + " 0"; break;
      default: text += "cnot 0 " + std::to_string(bad); break;
    }
    CHECK_THROWS_AS(parse_circuit(text), ParseError);
  }
}

TEST_CASE("cnot_count counts only cnots") {
  SplitMix64 rng(5);
  Circuit c = test::random_circuit(rng, 4, 5, 3);
  CHECK(cnot_count(c) == 5);
  CHECK(cnot_count(Circuit{2, {}}) == 0);
}

TEST_CASE("validate_circuit rejects bad programmatic circuits") {
  Circuit c{2, {Gate::cnot(0, 0)}};
  CHECK_THROWS_AS(validate_circuit(c), std::invalid_argument);
  Circuit c2{2, {Gate::local(0, Eigen::Matrix2cd::Ones())}};
  CHECK_THROWS_AS(validate_circuit(c2), std::invalid_argument);
  SplitMix64 rng(1);
  Circuit ok = test::random_circuit(rng, 3, 2, 2);
  CHECK_NOTHROW(validate_circuit(ok));
}
