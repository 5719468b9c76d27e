// Copyright 2026 The phavqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "phavqe/ansatz.hpp"
#include "phavqe/exact.hpp"
#include "phavqe/experiment.hpp"
#include "phavqe/fermion.hpp"
#include "phavqe/hamiltonian.hpp"
#include "phavqe/simulator.hpp"
#include "phavqe/vqe.hpp"

namespace {

using namespace phavqe;

constexpr int kExitOk = 0;
constexpr int kExitNothingToReport = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;

std::string default_output_dir() {
  const char* env = std::getenv("PHAVQE_OUT");
  return env != nullptr ? env : "results";
}

VqeConfig config_from_flags(const std::string& setting, std::uint64_t seed,
                            int max_iterations, int shots, int /*layers*/) {
  VqeConfig cfg = setting == "ideal" ? VqeConfig::ideal(seed)
                                     : VqeConfig::noisy(seed, setting);
  if (max_iterations > 0) cfg.max_iterations = max_iterations;
  if (shots > 0) cfg.shots_per_group = shots;
  return cfg;
}

int cmd_transform(const std::string& in, const std::string& out,
                  const std::string& molecule) {
  const FermionHamiltonian integrals = load_fermion_hamiltonian(in);
  const QubitHamiltonian h = jw_transform(integrals, molecule, file_fnv1a_hex(in));
  save_hamiltonian(h, out);
  std::cout << "wrote " << h.term_count() << " terms on " << h.n_qubits()
            << " qubits to " << out << "\n";
  return kExitOk;
}

int cmd_partial(const std::string& in, const std::string& out, std::size_t k) {
  const QubitHamiltonian full = load_hamiltonian(in);
  const QubitHamiltonian partial = make_partial(full, PartialSpec{k});
  save_hamiltonian(partial, out);
  const auto groups = group_terms(partial.sum());
  std::cout << "kept " << partial.term_count() << " of " << full.term_count()
            << " terms (" << groups.size() << " measurement group"
            << (groups.size() == 1 ? "" : "s") << ") in " << out << "\n";
  return kExitOk;
}

int cmd_exact(const std::string& in, const std::string& eigenvector_out) {
  const QubitHamiltonian h = load_hamiltonian(in);
  const GroundState gs = ground_state(to_dense(h));
  std::cout.precision(12);
  std::cout << "ground energy: " << gs.energy << "\n";
  if (!eigenvector_out.empty()) {
    std::ofstream out(eigenvector_out);
    out.precision(17);
    out << "[";
    for (std::size_t i = 0; i < gs.vector.dimension(); ++i) {
      const auto amp = gs.vector.amplitude(i);
      out << (i ? ", " : "") << "[" << amp.real() << ", " << amp.imag() << "]";
    }
    out << "]\n";
    std::cout << "eigenvector written to " << eigenvector_out << "\n";
  }
  return kExitOk;
}

int cmd_vqe(const std::string& hamiltonian_path, const std::string& setting,
            std::uint64_t seed, int layers, int max_iterations, int shots,
            const std::string& cross_path, const std::string& out_path) {
  const QubitHamiltonian h = load_hamiltonian(hamiltonian_path);
  const int chosen_layers = layers > 0 ? layers : default_ansatz_layers(h.n_qubits());
  const Circuit circuit = hardware_efficient_ansatz(h.n_qubits(), chosen_layers);
  const VqeConfig cfg =
      config_from_flags(setting, seed, max_iterations, shots, chosen_layers);

  VqeRunRecord record = vqe_minimize(h, circuit, cfg);
  std::cout.precision(12);
  std::cout << "energy on objective: " << record.e_on_objective << " ("
            << record.iterations << " iterations)\n";
  if (!cross_path.empty()) {
    const QubitHamiltonian h_full = load_hamiltonian(cross_path);
    const double cross = cross_evaluate(record, circuit, h_full);
    std::cout << "cross energy on " << cross_path << ": " << cross << "\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << record_to_json(record);
    std::cout << "run record written to " << out_path << "\n";
  }
  return kExitOk;
}

int cmd_batch(const std::string& config_path, ExperimentSpec spec,
              bool spec_from_flags) {
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ParseError("cannot open config: " + config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    spec = experiment_spec_from_json(buf.str());
    if (spec.output_dir.empty()) spec.output_dir = default_output_dir();
  } else if (!spec_from_flags) {
    throw ParseError("batch needs --config or --hamiltonian");
  }
  const ExperimentResult result = run_experiment(spec);
  std::size_t failed = 0;
  for (const auto& outcome : result.outcomes) {
    if (outcome.status != "ok") ++failed;
  }
  std::cout << result.outcomes.size() << " runs completed (" << failed
            << " failed) under " << spec.output_dir << "/" << result.molecule
            << "\n";
  return kExitOk;
}

int cmd_report(const std::string& dir, const std::vector<std::string>& term_counts,
               bool traces, const std::string& traces_selector) {
  bool produced = false;
  if (!term_counts.empty()) {
    std::cout << term_count_csv(term_count_report(term_counts));
    produced = true;
  }
  const auto rows = build_report(dir);
  if (!rows.empty()) {
    std::cout << report_csv(rows);
    produced = true;
  }
  if (traces) {
    // selector: molecule/setting/mode
    std::string molecule = "H2", setting = "ideal", mode = "full";
    if (!traces_selector.empty()) {
      std::istringstream parts(traces_selector);
      std::getline(parts, molecule, '/');
      std::getline(parts, setting, '/');
      std::getline(parts, mode, '/');
    }
    const std::string csv = traces_csv(dir, molecule, setting, mode);
    if (csv.find('\n') != csv.size() - 1) {  // more than the header line
      std::cout << csv;
      produced = true;
    }
  }
  if (!produced) {
    std::cout << report_csv({});
    return kExitNothingToReport;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qubit-Hamiltonian toolkit: second-quantized integrals to Pauli "
               "sums, I/Z partial Hamiltonians, statevector VQE and batch "
               "statistics"};
  app.require_subcommand(1);

  // transform
  auto* transform = app.add_subcommand(
      "transform", "Map an integral table to a qubit Hamiltonian");
  std::string t_in, t_out = "hamiltonian.json", t_molecule = "";
  transform->add_option("--in", t_in, "integral JSON")->required();
  transform->add_option("--out", t_out, "output Hamiltonian JSON");
  transform->add_option("--molecule", t_molecule, "molecule label");

  // partial
  auto* partial = app.add_subcommand(
      "partial", "Keep the identity and I/Z-only terms (plus k extra)");
  std::string p_in, p_out = "partial.json";
  std::size_t p_extra = 0;
  partial->add_option("--in", p_in, "Hamiltonian JSON or text")->required();
  partial->add_option("--out", p_out, "output JSON");
  partial->add_option("--extra-terms", p_extra,
                      "largest excluded terms to keep as augmentation");

  // exact
  auto* exact = app.add_subcommand("exact", "Dense ground-state oracle");
  std::string e_in, e_vec;
  exact->add_option("--in", e_in, "Hamiltonian JSON or text")->required();
  exact->add_option("--eigenvector", e_vec, "write the ground vector here");

  // vqe
  auto* vqe = app.add_subcommand("vqe", "One variational minimization run");
  std::string v_h, v_setting = "ideal", v_cross, v_out;
  std::uint64_t v_seed = 1;
  int v_layers = 0, v_iters = 0, v_shots = 0;
  vqe->add_option("--hamiltonian", v_h, "objective Hamiltonian")->required();
  vqe->add_option("--setting", v_setting, "ideal | noisy | realistic")
      ->check(CLI::IsMember({"ideal", "noisy", "realistic"}));
  vqe->add_option("--seed", v_seed, "64-bit run seed");
  vqe->add_option("--layers", v_layers, "ansatz layers (0 = width default)");
  vqe->add_option("--max-iters", v_iters, "iteration cap (0 = setting default)");
  vqe->add_option("--shots", v_shots, "shots per group in sampled mode");
  vqe->add_option("--cross", v_cross, "also score the state on this Hamiltonian");
  vqe->add_option("--out", v_out, "write the run record JSON here");

  // batch
  auto* batch = app.add_subcommand("batch", "Seeded multi-run experiment");
  std::string b_config;
  ExperimentSpec b_spec;
  b_spec.output_dir = default_output_dir();
  bool b_have_h = false;
  batch->add_option("--config", b_config, "experiment JSON (overrides flags)");
  batch->add_option("--hamiltonian", b_spec.hamiltonian_path, "Hamiltonian path")
      ->each([&](const std::string&) { b_have_h = true; });
  batch->add_option("--settings", b_spec.settings,
                    "subset of: ideal noisy realistic");
  batch->add_option("--modes", b_spec.modes, "subset of: full partial pha-init");
  batch->add_option("--runs", b_spec.runs, "runs per (setting, mode)");
  batch->add_option("--seed", b_spec.master_seed, "master seed");
  batch->add_option("--out", b_spec.output_dir, "output directory");
  batch->add_option("--jobs", b_spec.jobs, "concurrent runs");
  batch->add_option("--extra-terms", b_spec.extra_terms, "partial augmentation");
  batch->add_option("--layers", b_spec.layers, "ansatz layers (0 = default)");
  int b_iters = 0, b_shots = 0;
  batch->add_option("--max-iters", b_iters, "iteration cap override");
  batch->add_option("--shots", b_shots, "shots per group override");

  // report
  auto* report = app.add_subcommand("report", "Comparison and term-count tables");
  std::string r_dir = default_output_dir(), r_traces_selector;
  std::vector<std::string> r_term_counts;
  bool r_traces = false;
  report->add_option("--dir", r_dir, "results directory");
  report->add_option("--term-counts", r_term_counts,
                     "Hamiltonian files for the term-count table");
  report->add_flag("--traces", r_traces, "emit per-iteration energy traces");
  report->add_option("--traces-for", r_traces_selector,
                     "molecule/setting/mode selector for --traces");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*transform) return cmd_transform(t_in, t_out, t_molecule);
    if (*partial) return cmd_partial(p_in, p_out, p_extra);
    if (*exact) return cmd_exact(e_in, e_vec);
    if (*vqe) return cmd_vqe(v_h, v_setting, v_seed, v_layers, v_iters, v_shots,
                             v_cross, v_out);
    if (*batch) {
      if (b_iters > 0) b_spec.max_iterations = b_iters;
      if (b_shots > 0) b_spec.shots_per_group = b_shots;
      return cmd_batch(b_config, b_spec, b_have_h);
    }
    if (*report) return cmd_report(r_dir, r_term_counts, r_traces,
                                   r_traces_selector);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::out_of_range& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}
