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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phavqe/hamiltonian.hpp"
#include "phavqe/vqe.hpp"

namespace phavqe {

/// A batch: `runs` seeded VQE executions for every (setting, mode) pair.
/// Settings: ideal (CG, exact), noisy / realistic (SPSA, sampled under the
/// preset). Modes: full, partial, pha-init.
struct ExperimentSpec {
  std::string hamiltonian_path;
  std::size_t extra_terms = 0;                  // partial-Hamiltonian augmentation
  std::vector<std::string> settings = {"ideal"};
  std::vector<std::string> modes = {"full", "partial"};
  int runs = 100;
  std::uint64_t master_seed = 1;
  std::string output_dir;
  int jobs = 1;
  int layers = 0;                               // 0 = width-based default
  std::optional<int> max_iterations;            // override the setting default
  std::optional<int> shots_per_group;
  bool include_failed_in_stats = true;

  void validate() const;
};

ExperimentSpec experiment_spec_from_json(const std::string& text);
std::string experiment_spec_to_json(const ExperimentSpec& spec);

/// Notched box-plot statistics.
struct BoxStats {
  std::size_t n = 0;
  double mean = 0.0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double whisker_low = 0.0;
  double whisker_high = 0.0;
  double notch_low = 0.0;
  double notch_high = 0.0;
  std::vector<double> outliers;

  double iqr() const { return q3 - q1; }
};

// Quartiles by linear interpolation at p*(n-1); whiskers at the most
// extreme points within 1.5*IQR of the box; notch = median +/-
// 1.57*IQR/sqrt(n). Throws on an empty list.
BoxStats compute_box_stats(std::vector<double> values);

struct RunOutcome {
  int run_index;
  std::string setting;
  std::string mode;
  std::string status;               // "ok" or "failed: <reason>"
  double e_objective = 0.0;
  std::optional<double> e_cross;
  double e_report = 0.0;            // the full-Hamiltonian-evaluated energy
  int iterations = 0;
};

struct ExperimentResult {
  ExperimentSpec spec;
  std::string molecule;
  std::vector<RunOutcome> outcomes;

  std::vector<double> energies(const std::string& setting, const std::string& mode,
                               bool include_failed = true) const;
};

// Runs the batch, writing <out>/<molecule>/<setting>/<mode>/run_<i>.json
// plus summary.csv and energies.csv under <out>/<molecule>/. Per-run seeds
// derive from (master_seed, run_index); reruns with the same spec reproduce
// every CSV byte-for-byte. Failed runs are recorded, not fatal.
ExperimentResult run_experiment(const ExperimentSpec& spec);

std::string summary_csv(const ExperimentResult& result);
std::string energies_csv(const ExperimentResult& result);

struct ReportRow {
  std::string molecule;
  std::string setting;
  int qubits = 0;
  std::optional<double> full_mean;
  std::optional<double> pha_mean;   // mean cross energy of partial-mode runs
};

// Rebuilds the comparison table from a results directory (one molecule
// subdirectory per run_experiment call). Missing cells stay empty.
std::vector<ReportRow> build_report(const std::string& results_dir);
std::string report_csv(const std::vector<ReportRow>& rows);

// Per-iteration energy traces ("run,iteration,energy" rows) for plotting.
std::string traces_csv(const std::string& results_dir, const std::string& molecule,
                       const std::string& setting, const std::string& mode);

}  // namespace phavqe
