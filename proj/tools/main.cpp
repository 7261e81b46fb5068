// SPDX-License-Identifier: Apache-2.0
//
// qpsim command line: exact oracle runs, signed enumeration, signed Monte
// Carlo sampling, the built-in GHZ breakdown, and the identity check suite.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qpsim/analysis.hpp"
#include "qpsim/channel.hpp"
#include "qpsim/circuit.hpp"
#include "qpsim/enumerate.hpp"
#include "qpsim/errors.hpp"
#include "qpsim/local_ops.hpp"
#include "qpsim/sample.hpp"
#include "qpsim/statevector.hpp"
#include "qpsim/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qpsim;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerifyFailed = 3;

struct RunConfig {
  std::string circuit_path;
  std::vector<std::string> observable_specs;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 0;
  std::string format = "pretty";
  double budget = kDefaultBranchBudget;
  bool budget_set = false;
  int workers = 0;
  double tolerance_scale = 1.0;
  std::string output_path;
};

// Reports carry 12 significant digits: below the assertion tolerances, above
// the rounding noise.
std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double round12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open circuit file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_circuit(buffer.str());
}

std::vector<Observable> parse_observables(const RunConfig& cfg, int n_qubits) {
  if (cfg.observable_specs.empty()) {
    throw ParseError("at least one --obs observable is required");
  }
  std::vector<Observable> obs;
  obs.reserve(cfg.observable_specs.size());
  for (const std::string& spec : cfg.observable_specs) {
    obs.push_back(parse_observable(spec, n_qubits));
  }
  return obs;
}

double effective_budget(const RunConfig& cfg) {
  if (cfg.budget_set) return cfg.budget;
  if (const char* env = std::getenv("QPSIM_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return kDefaultBranchBudget;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output_path);
  if (!out) throw std::runtime_error("cannot write to '" + cfg.output_path + "'");
  out << text;
}

// ---- exact ----------------------------------------------------------------

int cmd_exact(const RunConfig& cfg) {
  const Circuit c = load_circuit(cfg.circuit_path);
  const std::vector<Observable> obs = parse_observables(cfg, c.n_qubits);
  const StateVector out = run_exact(c, StateVector(c.n_qubits));

  std::ostringstream text;
  if (cfg.format == "json") {
    json j;
    j["command"] = "exact";
    j["n_qubits"] = c.n_qubits;
    j["n_cnots"] = cnot_count(c);
    json list = json::array();
    for (const Observable& ob : obs) {
      json e;
      e["observable"] = ob.to_string();
      e["probability"] = round12(parity_probability(out, ob.pauli, ob.parity));
      e["expectation"] = round12(pauli_expectation(out, ob.pauli));
      list.push_back(e);
    }
    j["observables"] = list;
    text << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    text << "observable,parity,probability,expectation\n";
    for (const Observable& ob : obs) {
      text << ob.pauli.to_string() << "," << (ob.parity > 0 ? "+1" : "-1") << ","
           << fmt12(parity_probability(out, ob.pauli, ob.parity)) << ","
           << fmt12(pauli_expectation(out, ob.pauli)) << "\n";
    }
  } else {
    text << "exact oracle: " << cfg.circuit_path << " (" << c.n_qubits << " qubits, "
         << cnot_count(c) << " cnots)\n";
    text << "observable      probability     expectation\n";
    for (const Observable& ob : obs) {
      char line[128];
      std::snprintf(line, sizeof(line), "%-14s  %-14s  %s\n", ob.to_string().c_str(),
                    fmt12(parity_probability(out, ob.pauli, ob.parity)).c_str(),
                    fmt12(pauli_expectation(out, ob.pauli)).c_str());
      text << line;
    }
  }
  emit(cfg, text.str());
  return kExitOk;
}

// ---- enumerate / ghz-table ------------------------------------------------

json sequences_json(const EnumerationReport& r) {
  json j;
  j["n_qubits"] = r.n_qubits;
  j["n_cnots"] = r.n_cnots;
  json rows = json::array();
  for (const SequenceRow& row : r.rows) {
    json e;
    e["label"] = sequence_label(row.choice);
    e["sign"] = row.sign;
    json cond;
    for (size_t o = 0; o < r.observables.size(); ++o) {
      cond[r.observables[o].to_string()] = round12(row.conditionals[o]);
    }
    e["conditionals"] = cond;
    rows.push_back(e);
  }
  j["sequences"] = rows;
  json totals;
  for (size_t o = 0; o < r.observables.size(); ++o) {
    totals[r.observables[o].to_string()] = round12(r.totals[o]);
  }
  j["totals"] = totals;
  j["amplification"] = round12(r.amplification);
  return j;
}

void sequences_pretty(std::ostream& os, const EnumerationReport& r) {
  os << "sequences: " << r.rows.size() << "   amplification (3^N): " << fmt12(r.amplification)
     << "\n";
  os << "sequence           p(i)";
  for (const Observable& ob : r.observables) {
    char cell[32];
    std::snprintf(cell, sizeof(cell), "  %12s", ob.to_string().c_str());
    os << cell;
  }
  os << "\n";
  for (const SequenceRow& row : r.rows) {
    char head[48];
    std::snprintf(head, sizeof(head), "%-18s %+4d", sequence_label(row.choice).c_str(), row.sign);
    os << head;
    for (double v : row.conditionals) {
      char cell[32];
      std::snprintf(cell, sizeof(cell), "  %12s", fmt12(v).c_str());
      os << cell;
    }
    os << "\n";
  }
  os << "TOTAL                  ";
  for (double v : r.totals) {
    char cell[32];
    std::snprintf(cell, sizeof(cell), "  %12s", fmt12(v).c_str());
    os << cell;
  }
  os << "\n";
}

void sequences_csv(std::ostream& os, const EnumerationReport& r) {
  os << "sequence,sign";
  for (const Observable& ob : r.observables) os << "," << ob.to_string();
  os << "\n";
  for (const SequenceRow& row : r.rows) {
    os << sequence_label(row.choice) << "," << row.sign;
    for (double v : row.conditionals) os << "," << fmt12(v);
    os << "\n";
  }
  os << "TOTAL,";
  for (double v : r.totals) os << "," << fmt12(v);
  os << "\n";
}

int cmd_enumerate(const RunConfig& cfg) {
  const Circuit c = load_circuit(cfg.circuit_path);
  const std::vector<Observable> obs = parse_observables(cfg, c.n_qubits);
  const EnumerationReport r =
      enumerate_sequences(c, ProductState::zeros(c.n_qubits), obs, effective_budget(cfg));

  std::ostringstream text;
  if (cfg.format == "json") {
    text << sequences_json(r).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    sequences_csv(text, r);
  } else {
    sequences_pretty(text, r);
  }
  emit(cfg, text.str());
  return kExitOk;
}

int cmd_ghz_table(const RunConfig& cfg) {
  const GhzReport r = ghz_table();
  const EnumerationReport e = enumerate_sequences(ghz_circuit(), ProductState::zeros(3),
                                                  ghz_observables(), effective_budget(cfg));

  std::ostringstream text;
  if (cfg.format == "json") {
    json j = sequences_json(e);
    json classical;
    for (int o = 0; o < 4; ++o) {
      json f;
      f["p_pos"] = round12(r.classical[o].p_pos);
      f["p_neg"] = round12(r.classical[o].p_neg);
      f["amplification"] = round12(r.classical[o].amplification);
      f["reconstruction"] = round12(r.classical[o].reconstruction);
      classical[r.observables[o].to_string()] = f;
    }
    j["classical"] = classical;
    text << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    sequences_csv(text, e);
    text << "\nobservable,p_pos,p_neg,amplification,reconstruction\n";
    for (int o = 0; o < 4; ++o) {
      text << r.observables[o].to_string() << "," << fmt12(r.classical[o].p_pos) << ","
           << fmt12(r.classical[o].p_neg) << "," << fmt12(r.classical[o].amplification) << ","
           << fmt12(r.classical[o].reconstruction) << "\n";
    }
  } else {
    sequences_pretty(text, e);
    text << "\nclassical frequencies (uniform 1/9 per sequence):\n";
    text << "observable      p_pos         p_neg         amplification  reconstruction\n";
    for (int o = 0; o < 4; ++o) {
      char line[160];
      std::snprintf(line, sizeof(line), "%-14s  %-12s  %-12s  %-13s  %s\n",
                    r.observables[o].to_string().c_str(), fmt12(r.classical[o].p_pos).c_str(),
                    fmt12(r.classical[o].p_neg).c_str(),
                    fmt12(r.classical[o].amplification).c_str(),
                    fmt12(r.classical[o].reconstruction).c_str());
      text << line;
    }
  }
  emit(cfg, text.str());
  return kExitOk;
}

// ---- sample ---------------------------------------------------------------

int cmd_sample(const RunConfig& cfg) {
  if (cfg.shots == 0) throw ParseError("--shots must be at least 1");
  const Circuit c = load_circuit(cfg.circuit_path);
  const std::vector<Observable> obs = parse_observables(cfg, c.n_qubits);
  const std::vector<QuasiEstimate> estimates =
      sample_circuit(c, ProductState::zeros(c.n_qubits), obs, cfg.shots, cfg.seed, cfg.workers);

  std::ostringstream text;
  if (cfg.format == "json") {
    json j;
    j["command"] = "sample";
    j["n_qubits"] = c.n_qubits;
    j["n_cnots"] = cnot_count(c);
    j["shots"] = cfg.shots;
    j["seed"] = cfg.seed;
    j["amplification"] = round12(estimates.empty() ? 1.0 : estimates[0].amplification);
    json list = json::array();
    for (size_t o = 0; o < obs.size(); ++o) {
      const QuasiEstimate& est = estimates[o];
      json e;
      e["observable"] = obs[o].to_string();
      e["p_pos"] = round12(est.p_pos);
      e["p_neg"] = round12(est.p_neg);
      e["amplification"] = round12(est.amplification);
      e["estimate"] = round12(est.estimate);
      e["std_error"] = round12(est.std_error);
      e["shots"] = est.shots;
      e["seed"] = cfg.seed;
      list.push_back(e);
    }
    j["estimates"] = list;
    text << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    text << "observable,p_pos,p_neg,amplification,estimate,std_error,shots,seed\n";
    for (size_t o = 0; o < obs.size(); ++o) {
      const QuasiEstimate& est = estimates[o];
      text << obs[o].to_string() << "," << fmt12(est.p_pos) << "," << fmt12(est.p_neg) << ","
           << fmt12(est.amplification) << "," << fmt12(est.estimate) << ","
           << fmt12(est.std_error) << "," << est.shots << "," << cfg.seed << "\n";
    }
  } else {
    text << "signed sampling: " << cfg.circuit_path << " (" << c.n_qubits << " qubits, "
         << cnot_count(c) << " cnots), shots=" << cfg.shots << ", seed=" << cfg.seed << "\n";
    text << "overhead (3^N): "
         << fmt12(estimates.empty() ? 1.0 : estimates[0].amplification) << "\n";
    text << "observable      p_pos         p_neg         estimate      std_error\n";
    for (size_t o = 0; o < obs.size(); ++o) {
      const QuasiEstimate& est = estimates[o];
      char line[160];
      std::snprintf(line, sizeof(line), "%-14s  %-12s  %-12s  %-12s  %s\n",
                    obs[o].to_string().c_str(), fmt12(est.p_pos).c_str(),
                    fmt12(est.p_neg).c_str(), fmt12(est.estimate).c_str(),
                    fmt12(est.std_error).c_str());
      text << line;
    }
  }
  emit(cfg, text.str());
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const RunConfig& cfg) {
  const std::vector<CheckResult> checks = run_verification_suite(cfg.tolerance_scale);
  bool all_pass = true;

  std::ostringstream text;
  if (cfg.format == "json") {
    json j;
    j["command"] = "verify";
    json list = json::array();
    for (const CheckResult& r : checks) {
      all_pass = all_pass && r.pass;
      json e;
      e["name"] = r.name;
      e["residual"] = round12(r.residual);
      e["tolerance"] = r.tolerance;
      e["pass"] = r.pass;
      if (!r.detail.empty()) e["detail"] = r.detail;
      list.push_back(e);
    }
    j["checks"] = list;
    j["all_pass"] = all_pass;
    text << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    text << "name,residual,tolerance,pass\n";
    for (const CheckResult& r : checks) {
      all_pass = all_pass && r.pass;
      text << "\"" << r.name << "\"," << fmt12(r.residual) << "," << fmt12(r.tolerance) << ","
           << (r.pass ? "true" : "false") << "\n";
    }
  } else {
    for (const CheckResult& r : checks) {
      all_pass = all_pass && r.pass;
      char line[256];
      std::snprintf(line, sizeof(line), "%s  %-46s residual=%-12s tol=%g%s%s\n",
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), fmt12(r.residual).c_str(),
                    r.tolerance, r.detail.empty() ? "" : "  ", r.detail.c_str());
      text << line;
    }
    text << (all_pass ? "all checks passed\n" : "VERIFICATION FAILED\n");
  }
  emit(cfg, text.str());
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-probability simulator for circuits of CNOTs and local unitaries"};
  app.require_subcommand(1);

  RunConfig cfg;
  const auto add_common = [&](CLI::App* sub, bool needs_circuit, bool needs_obs) {
    if (needs_circuit) {
      sub->add_option("--circuit", cfg.circuit_path, "circuit file")->required();
    }
    if (needs_obs) {
      sub->add_option("--obs", cfg.observable_specs,
                      "observable as PAULIS=PARITY, e.g. XXX=+1 (repeatable)");
    }
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->default_val("pretty");
    sub->add_option("--output", cfg.output_path, "write the report to a file instead of stdout");
  };

  CLI::App* exact = app.add_subcommand("exact", "dense oracle probabilities and expectations");
  add_common(exact, true, true);

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "exhaustive signed enumeration of all 3^N operation sequences");
  add_common(enumerate, true, true);
  enumerate->add_option("--budget", cfg.budget, "max weighted branches 3^N * 2^N")
      ->check(CLI::PositiveNumber)
      ->each([&](const std::string&) { cfg.budget_set = true; });
  enumerate->add_option("--workers", cfg.workers, "worker threads (0 = auto)");

  CLI::App* sample = app.add_subcommand("sample", "signed Monte Carlo estimate");
  add_common(sample, true, true);
  sample->add_option("--shots", cfg.shots, "number of trajectories")->default_val(100000);
  sample->add_option("--seed", cfg.seed, "random seed")->default_val(0);
  sample->add_option("--workers", cfg.workers, "worker threads (0 = auto)");

  CLI::App* ghz = app.add_subcommand("ghz-table",
                                     "per-sequence breakdown of the built-in GHZ circuit");
  add_common(ghz, false, false);

  CLI::App* verify = app.add_subcommand("verify", "run the identity check suite");
  add_common(verify, false, false);
  verify->add_option("--tol-scale", cfg.tolerance_scale,
                     "multiply every check tolerance by this factor")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (exact->parsed()) return cmd_exact(cfg);
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (sample->parsed()) return cmd_sample(cfg);
    if (ghz->parsed()) return cmd_ghz_table(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
