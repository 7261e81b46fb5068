// SPDX-License-Identifier: Apache-2.0
#include "qpsim/sample.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "qpsim/local_ops.hpp"
#include "qpsim/rng.hpp"
#include "qpsim/trajectory.hpp"

namespace qpsim {

namespace {

// Per-observable match counters split by trajectory sign. Everything reduced
// across workers is an integer count, so the merge is exact and the result is
// independent of the partition.
struct Tally {
  std::vector<std::uint64_t> pos_match;
  std::vector<std::uint64_t> neg_match;

  explicit Tally(size_t n_obs) : pos_match(n_obs, 0), neg_match(n_obs, 0) {}

  void merge(const Tally& other) {
    for (size_t o = 0; o < pos_match.size(); ++o) {
      pos_match[o] += other.pos_match[o];
      neg_match[o] += other.neg_match[o];
    }
  }
};

void run_range(const Circuit& c, const ProductState& input,
               const std::vector<Observable>& observables, std::uint64_t seed,
               std::uint64_t begin, std::uint64_t end, Tally& tally) {
  TrajectoryRecord rec;
  for (std::uint64_t t = begin; t < end; ++t) {
    SplitMix64 rng = substream(seed, t);
    run_trajectory_into(rec, c, input, rng);
    for (size_t o = 0; o < observables.size(); ++o) {
      const int outcome = sample_parity_outcome(rec.final_state, observables[o].pauli, rng);
      if (outcome == observables[o].parity) {
        (rec.sign > 0 ? tally.pos_match : tally.neg_match)[o] += 1;
      }
    }
  }
}

}  // namespace

std::vector<QuasiEstimate> sample_circuit(const Circuit& c, const ProductState& input,
                                          const std::vector<Observable>& observables,
                                          std::uint64_t shots, std::uint64_t seed, int workers) {
  if (shots == 0) throw std::invalid_argument("sampling needs at least one shot");
  if (input.n_qubits() != c.n_qubits) {
    throw std::invalid_argument("input state does not match circuit register");
  }
  for (const Observable& ob : observables) {
    if (ob.pauli.size() != c.n_qubits) {
      throw std::invalid_argument("observable '" + ob.to_string() +
                                  "' does not match circuit register");
    }
  }

  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  const std::uint64_t n_workers =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), shots);

  std::vector<Tally> tallies(n_workers, Tally(observables.size()));
  {
    std::vector<std::thread> threads;
    threads.reserve(n_workers - 1);
    const std::uint64_t chunk = shots / n_workers, extra = shots % n_workers;
    std::uint64_t begin = 0;
    for (std::uint64_t w = 0; w < n_workers; ++w) {
      const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
      if (w + 1 == n_workers) {
        run_range(c, input, observables, seed, begin, end, tallies[w]);
      } else {
        threads.emplace_back([&, w, begin, end] {
          run_range(c, input, observables, seed, begin, end, tallies[w]);
        });
      }
      begin = end;
    }
    for (auto& th : threads) th.join();
  }
  Tally total(observables.size());
  for (const Tally& t : tallies) total.merge(t);

  const double amplification = amplification_factor(cnot_count(c));
  std::vector<QuasiEstimate> estimates;
  estimates.reserve(observables.size());
  const double n = static_cast<double>(shots);
  for (size_t o = 0; o < observables.size(); ++o) {
    QuasiEstimate est;
    est.shots = shots;
    est.amplification = amplification;
    est.p_pos = static_cast<double>(total.pos_match[o]) / n;
    est.p_neg = static_cast<double>(total.neg_match[o]) / n;
    est.estimate = amplification * (est.p_pos - est.p_neg);
    // Signed indicator x_t in {-1,0,+1}: sum x = pos-neg, sum x^2 = pos+neg.
    if (shots > 1) {
      const double sum_x = static_cast<double>(total.pos_match[o]) -
                           static_cast<double>(total.neg_match[o]);
      const double sum_x2 = static_cast<double>(total.pos_match[o]) +
                            static_cast<double>(total.neg_match[o]);
      const double variance = std::max(0.0, (sum_x2 - sum_x * sum_x / n) / (n - 1.0));
      est.std_error = amplification * std::sqrt(variance / n);
    }
    estimates.push_back(est);
  }
  return estimates;
}

}  // namespace qpsim
