// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>

#include "qpsim/analysis.hpp"
#include "test_util.hpp"

using namespace qpsim;

namespace {

StateVector two_qubit_state(cplx a00, cplx a01, cplx a10, cplx a11) {
  Eigen::Vector4cd v;
  v << a00, a01, a10, a11;
  return StateVector(2, v);
}

// Dense grid over product states (cos t, e^{ip} sin t) x 2, as an independent
// cross-check of the SVD route.
double grid_search_product_fidelity(const StateVector& s) {
  const int steps = 48;
  double best = 0.0;
  for (int ta = 0; ta <= steps; ++ta) {
    const double a = M_PI / 2 * ta / steps;
    for (int pa = 0; pa < steps; ++pa) {
      const double fa = 2 * M_PI * pa / steps;
      const cplx a0 = std::cos(a), a1 = std::polar(std::sin(a), fa);
      for (int tb = 0; tb <= steps; ++tb) {
        const double b = M_PI / 2 * tb / steps;
        for (int pb = 0; pb < steps; ++pb) {
          const double fb = 2 * M_PI * pb / steps;
          const cplx b0 = std::cos(b), b1 = std::polar(std::sin(b), fb);
          const cplx amp = std::conj(a0 * b0) * s.amplitude(0) +
                           std::conj(a0 * b1) * s.amplitude(1) +
                           std::conj(a1 * b0) * s.amplitude(2) +
                           std::conj(a1 * b1) * s.amplitude(3);
          best = std::max(best, std::norm(amp));
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("ghz_table matches the nine-sequence breakdown") {
  const GhzReport r = ghz_table();
  REQUIRE(r.rows.size() == 9);

  int sign_sum = 0;
  for (const GhzRow& row : r.rows) sign_sum += row.sign;
  CHECK(sign_sum == 1);

  // Column structure: one special cell (0 or 1) per observable, eight halves.
  for (int o = 0; o < 4; ++o) {
    int halves = 0, special = 0;
    for (const GhzRow& row : r.rows) {
      const double v = row.conditionals[o];
      if (std::abs(v - 0.5) < 1e-9) {
        ++halves;
      } else if (std::abs(v - 1.0) < 1e-9 || std::abs(v) < 1e-9) {
        ++special;
      }
    }
    CHECK(halves == 8);
    CHECK(special == 1);
    CHECK(r.recombined[o] == doctest::Approx(1.0).epsilon(1e-9));
  }

  // Spot rows.
  CHECK(r.rows[0].label == "L1-L1");
  CHECK(r.rows[0].sign == +1);
  for (double v : r.rows[0].conditionals) CHECK(v == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.rows[7].label == "L3bar-L2");
  CHECK(r.rows[7].sign == -1);
  CHECK(r.rows[7].conditionals[3] == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("classical frequencies: 3/9 vs 2/9 for XXX, reconstruction 1") {
  const auto classical = ghz_classical_frequencies();
  CHECK(classical[0].p_pos == doctest::Approx(3.0 / 9.0).epsilon(1e-12));
  CHECK(classical[0].p_neg == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
  for (const ClassicalFrequency& f : classical) {
    CHECK(f.amplification == 9.0);
    CHECK(f.reconstruction == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(9.0 * (f.p_pos - f.p_neg) == doctest::Approx(1.0).epsilon(1e-12));
  }
  const GhzReport r = ghz_table();
  for (int o = 0; o < 4; ++o) {
    CHECK(std::abs(r.classical[o].reconstruction - r.recombined[o]) < 1e-12);
  }
}

TEST_CASE("max_product_fidelity examples") {
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(max_product_fidelity(two_qubit_state(s, 0, 0, s)) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(max_product_fidelity(two_qubit_state(0, 1, 0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  const StateVector tilted = two_qubit_state(std::sqrt(0.9), 0, 0, std::sqrt(0.1));
  CHECK(max_product_fidelity(tilted) == doctest::Approx(0.9).epsilon(1e-12));
  // Grid-search cross-check (coarse grid, loose tolerance).
  CHECK(std::abs(grid_search_product_fidelity(tilted) - 0.9) < 5e-3);
  CHECK_THROWS_AS(max_product_fidelity(two_qubit_state(1, 1, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(max_product_fidelity(StateVector(3)), std::invalid_argument);
}

TEST_CASE("max_product_fidelity is invariant under local unitaries") {
  SplitMix64 rng(61);
  for (int it = 0; it < 20; ++it) {
    Eigen::Vector4cd v;
    for (int k = 0; k < 4; ++k) v(k) = cplx(test::gaussian(rng), test::gaussian(rng));
    v /= v.norm();
    const StateVector base(2, v);
    const double f = max_product_fidelity(base);

    StateVector rotated = base;
    rotated.apply_local(0, test::random_unitary(rng));
    rotated.apply_local(1, test::random_unitary(rng));
    CHECK(max_product_fidelity(rotated) == doctest::Approx(f).epsilon(1e-10));
  }
}

TEST_CASE("negativity bound is saturated by the decomposition") {
  const NegativityBoundReport r = negativity_lower_bound_check();
  CHECK(r.achieved_negativity == 1.0);
  CHECK(r.bell_fidelity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.required_negativity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.output_residual <= 1e-10);
  CHECK(r.saturated);
}
