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

#include "phavqe/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "phavqe/ansatz.hpp"
#include "phavqe/rng.hpp"

namespace phavqe {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_value(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

const std::vector<std::string> kKnownSettings = {"ideal", "noisy", "realistic"};
const std::vector<std::string> kKnownModes = {"full", "partial", "pha-init"};

VqeConfig config_for_setting(const ExperimentSpec& spec, const std::string& setting,
                             std::uint64_t run_seed) {
  VqeConfig cfg = setting == "ideal" ? VqeConfig::ideal(run_seed)
                                     : VqeConfig::noisy(run_seed, setting);
  if (spec.max_iterations) cfg.max_iterations = *spec.max_iterations;
  if (spec.shots_per_group) cfg.shots_per_group = *spec.shots_per_group;
  return cfg;
}

}  // namespace

void ExperimentSpec::validate() const {
  if (runs < 1) throw std::invalid_argument("experiment needs runs >= 1");
  if (settings.empty()) throw std::invalid_argument("experiment needs a setting");
  if (modes.empty()) throw std::invalid_argument("experiment needs a mode");
  for (const auto& s : settings) {
    if (std::find(kKnownSettings.begin(), kKnownSettings.end(), s) ==
        kKnownSettings.end()) {
      throw std::invalid_argument("unknown setting: " + s);
    }
  }
  for (const auto& m : modes) {
    if (std::find(kKnownModes.begin(), kKnownModes.end(), m) == kKnownModes.end()) {
      throw std::invalid_argument("unknown mode: " + m);
    }
  }
  if (hamiltonian_path.empty()) {
    throw std::invalid_argument("experiment needs a Hamiltonian path");
  }
}

ExperimentSpec experiment_spec_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid experiment config: ") + e.what());
  }
  ExperimentSpec spec;
  spec.hamiltonian_path = doc.at("hamiltonian").get<std::string>();
  spec.extra_terms = doc.value("extra_terms", 0);
  if (doc.contains("settings")) {
    spec.settings = doc.at("settings").get<std::vector<std::string>>();
  }
  if (doc.contains("modes")) {
    spec.modes = doc.at("modes").get<std::vector<std::string>>();
  }
  spec.runs = doc.value("runs", 100);
  spec.master_seed = doc.value("master_seed", 1ull);
  spec.output_dir = doc.value("output_dir", "");
  spec.jobs = doc.value("jobs", 1);
  spec.layers = doc.value("layers", 0);
  if (doc.contains("max_iterations")) {
    spec.max_iterations = doc.at("max_iterations").get<int>();
  }
  if (doc.contains("shots_per_group")) {
    spec.shots_per_group = doc.at("shots_per_group").get<int>();
  }
  spec.include_failed_in_stats = doc.value("include_failed_in_stats", true);
  spec.validate();
  return spec;
}

std::string experiment_spec_to_json(const ExperimentSpec& spec) {
  json doc;
  doc["hamiltonian"] = spec.hamiltonian_path;
  doc["extra_terms"] = spec.extra_terms;
  doc["settings"] = spec.settings;
  doc["modes"] = spec.modes;
  doc["runs"] = spec.runs;
  doc["master_seed"] = spec.master_seed;
  doc["output_dir"] = spec.output_dir;
  doc["jobs"] = spec.jobs;
  doc["layers"] = spec.layers;
  if (spec.max_iterations) doc["max_iterations"] = *spec.max_iterations;
  if (spec.shots_per_group) doc["shots_per_group"] = *spec.shots_per_group;
  doc["include_failed_in_stats"] = spec.include_failed_in_stats;
  return doc.dump(2);
}

BoxStats compute_box_stats(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("compute_box_stats: empty list");
  }
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();

  const auto quantile = [&](double p) {
    const double position = p * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(position);
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = position - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[hi] * frac;
  };

  BoxStats stats;
  stats.n = n;
  for (const double v : values) stats.mean += v;
  stats.mean /= static_cast<double>(n);
  stats.median = quantile(0.5);
  stats.q1 = quantile(0.25);
  stats.q3 = quantile(0.75);

  const double iqr = stats.q3 - stats.q1;
  const double fence_low = stats.q1 - 1.5 * iqr;
  const double fence_high = stats.q3 + 1.5 * iqr;
  stats.whisker_low = stats.median;
  stats.whisker_high = stats.median;
  bool any_inside = false;
  for (const double v : values) {
    if (v < fence_low || v > fence_high) {
      stats.outliers.push_back(v);
    } else if (!any_inside) {
      stats.whisker_low = stats.whisker_high = v;
      any_inside = true;
    } else {
      stats.whisker_low = std::min(stats.whisker_low, v);
      stats.whisker_high = std::max(stats.whisker_high, v);
    }
  }
  const double notch = 1.57 * iqr / std::sqrt(static_cast<double>(n));
  stats.notch_low = stats.median - notch;
  stats.notch_high = stats.median + notch;
  return stats;
}

std::vector<double> ExperimentResult::energies(const std::string& setting,
                                               const std::string& mode,
                                               bool include_failed) const {
  std::vector<double> out;
  for (const auto& run : outcomes) {
    if (run.setting != setting || run.mode != mode) continue;
    if (!include_failed && run.status != "ok") continue;
    if (std::isfinite(run.e_report)) {
      out.push_back(run.e_report);
    }
  }
  return out;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const QubitHamiltonian full = load_hamiltonian(spec.hamiltonian_path);
  const QubitHamiltonian partial = make_partial(full, PartialSpec{spec.extra_terms});
  const int layers =
      spec.layers > 0 ? spec.layers : default_ansatz_layers(full.n_qubits());
  const Circuit circuit = hardware_efficient_ansatz(full.n_qubits(), layers);

  ExperimentResult result;
  result.spec = spec;
  result.molecule =
      full.source().molecule.empty() ? "molecule" : full.source().molecule;

  const fs::path base = fs::path(spec.output_dir) / result.molecule;
  for (const auto& setting : spec.settings) {
    for (const auto& mode : spec.modes) {
      fs::create_directories(base / setting / mode);
    }
  }

  struct Task {
    std::string setting;
    std::string mode;
    int run_index;
  };
  std::vector<Task> tasks;
  for (const auto& setting : spec.settings) {
    for (const auto& mode : spec.modes) {
      for (int run = 0; run < spec.runs; ++run) {
        tasks.push_back({setting, mode, run});
      }
    }
  }

  std::vector<RunOutcome> outcomes(tasks.size());
  std::atomic<std::size_t> next_task{0};
  std::mutex io_mutex;

  const auto worker = [&]() {
    while (true) {
      const std::size_t index = next_task.fetch_add(1);
      if (index >= tasks.size()) break;
      const Task& task = tasks[index];

      // Stream ids separate settings and modes so the same run index never
      // shares randomness across arms.
      std::uint64_t arm = 0;
      for (const char ch : task.setting + "/" + task.mode) {
        arm = arm * 131 + static_cast<unsigned char>(ch);
      }
      const std::uint64_t run_seed =
          RngStream::for_run(spec.master_seed, task.run_index).child(arm).next_u64();
      const VqeConfig cfg = config_for_setting(spec, task.setting, run_seed);

      RunOutcome outcome;
      outcome.run_index = task.run_index;
      outcome.setting = task.setting;
      outcome.mode = task.mode;

      VqeRunRecord record;
      try {
        if (task.mode == "full") {
          record = vqe_minimize(full, circuit, cfg);
          outcome.e_report = record.e_on_objective;
        } else if (task.mode == "partial") {
          record = vqe_minimize(partial, circuit, cfg);
          outcome.e_cross = cross_evaluate(record, circuit, full);
          outcome.e_report = *outcome.e_cross;
        } else {  // pha-init
          PhaInitResult pha = pha_initialized_vqe(full, partial, circuit, cfg);
          record = pha.stage2;
          record.iterations = pha.combined_iterations;
          outcome.e_report = record.e_on_objective;
        }
        outcome.status = record.status;
        outcome.e_objective = record.e_on_objective;
        outcome.iterations = record.iterations;
        if (record.e_cross) outcome.e_cross = record.e_cross;
      } catch (const std::exception& e) {
        outcome.status = std::string("failed: ") + e.what();
        outcome.e_objective = std::nan("");
        outcome.e_report = std::nan("");
        record.status = outcome.status;
      }

      const fs::path run_path = base / task.setting / task.mode /
                                ("run_" + std::to_string(task.run_index) + ".json");
      {
        std::lock_guard<std::mutex> lock(io_mutex);
        std::ofstream out(run_path);
        out << record_to_json(record);
      }
      outcomes[index] = std::move(outcome);
    }
  };

  const int jobs = std::max(1, spec.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }

  result.outcomes = std::move(outcomes);

  std::ofstream summary(base / "summary.csv");
  summary << summary_csv(result);
  std::ofstream energies(base / "energies.csv");
  energies << energies_csv(result);
  std::ofstream spec_out(base / "experiment.json");
  spec_out << experiment_spec_to_json(spec);
  return result;
}

std::string summary_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "molecule,setting,mode,n,n_failed,mean,median,q1,q3,whisker_low,"
         "whisker_high,notch_low,notch_high,outliers\n";
  for (const auto& setting : result.spec.settings) {
    for (const auto& mode : result.spec.modes) {
      const auto values =
          result.energies(setting, mode, result.spec.include_failed_in_stats);
      std::size_t failed = 0;
      for (const auto& run : result.outcomes) {
        if (run.setting == setting && run.mode == mode && run.status != "ok") {
          ++failed;
        }
      }
      out << result.molecule << "," << setting << "," << mode << ",";
      if (values.empty()) {
        out << "0," << failed << ",,,,,,,,,\n";
        continue;
      }
      const BoxStats stats = compute_box_stats(values);
      out << stats.n << "," << failed << "," << format_value(stats.mean) << ","
          << format_value(stats.median) << "," << format_value(stats.q1) << ","
          << format_value(stats.q3) << "," << format_value(stats.whisker_low) << ","
          << format_value(stats.whisker_high) << "," << format_value(stats.notch_low)
          << "," << format_value(stats.notch_high) << ",";
      for (std::size_t i = 0; i < stats.outliers.size(); ++i) {
        out << (i ? ";" : "") << format_value(stats.outliers[i]);
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string energies_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "setting,mode,run,status,iterations,e_objective,e_cross,e_report\n";
  for (const auto& run : result.outcomes) {
    out << run.setting << "," << run.mode << "," << run.run_index << ","
        << (run.status == "ok" ? "ok" : "failed") << "," << run.iterations << ","
        << format_value(run.e_objective) << ",";
    if (run.e_cross) out << format_value(*run.e_cross);
    out << "," << format_value(run.e_report) << "\n";
  }
  return out.str();
}

std::vector<ReportRow> build_report(const std::string& results_dir) {
  std::vector<ReportRow> rows;
  if (!fs::is_directory(results_dir)) return rows;

  std::vector<fs::path> molecule_dirs;
  for (const auto& entry : fs::directory_iterator(results_dir)) {
    if (entry.is_directory() && fs::exists(entry.path() / "energies.csv")) {
      molecule_dirs.push_back(entry.path());
    }
  }
  std::sort(molecule_dirs.begin(), molecule_dirs.end());

  for (const auto& dir : molecule_dirs) {
    // Qubit count from any run record in the tree.
    int qubits = 0;
    std::map<std::string, std::vector<double>> full_by_setting;
    std::map<std::string, std::vector<double>> pha_by_setting;

    std::ifstream in(dir / "energies.csv");
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string setting, mode, run, status, iterations, e_obj, e_cross, e_report;
      std::getline(fields, setting, ',');
      std::getline(fields, mode, ',');
      std::getline(fields, run, ',');
      std::getline(fields, status, ',');
      std::getline(fields, iterations, ',');
      std::getline(fields, e_obj, ',');
      std::getline(fields, e_cross, ',');
      std::getline(fields, e_report, ',');
      if (e_report.empty() || status != "ok") continue;
      const double value = std::strtod(e_report.c_str(), nullptr);
      if (!std::isfinite(value)) continue;
      if (mode == "full") {
        full_by_setting[setting].push_back(value);
      } else if (mode == "partial") {
        pha_by_setting[setting].push_back(value);
      }
    }

    for (const auto& setting : kKnownSettings) {
      const bool has_full = full_by_setting.count(setting) != 0;
      const bool has_pha = pha_by_setting.count(setting) != 0;
      if (!has_full && !has_pha) continue;
      ReportRow row;
      row.molecule = dir.filename().string();
      row.setting = setting;
      if (qubits == 0) {
        // Width comes from the Hamiltonian recorded in experiment.json.
        std::ifstream spec_in(dir / "experiment.json");
        if (spec_in) {
          std::stringstream buf;
          buf << spec_in.rdbuf();
          try {
            const ExperimentSpec spec = experiment_spec_from_json(buf.str());
            qubits = load_hamiltonian(spec.hamiltonian_path).n_qubits();
          } catch (const std::exception&) {
            // leave as 0 when the source file moved
          }
        }
      }
      row.qubits = qubits;
      if (has_full) {
        const auto& v = full_by_setting[setting];
        double mean = 0.0;
        for (const double x : v) mean += x;
        row.full_mean = mean / static_cast<double>(v.size());
      }
      if (has_pha) {
        const auto& v = pha_by_setting[setting];
        double mean = 0.0;
        for (const double x : v) mean += x;
        row.pha_mean = mean / static_cast<double>(v.size());
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "molecule,setting,qubits,full_mean,pha_mean\n";
  for (const auto& row : rows) {
    out << row.molecule << "," << row.setting << "," << row.qubits << ",";
    if (row.full_mean) out << format_value(*row.full_mean);
    out << ",";
    if (row.pha_mean) out << format_value(*row.pha_mean);
    out << "\n";
  }
  return out.str();
}

std::string traces_csv(const std::string& results_dir, const std::string& molecule,
                       const std::string& setting, const std::string& mode) {
  std::ostringstream out;
  out << "run,iteration,energy\n";
  const fs::path dir = fs::path(results_dir) / molecule / setting / mode;
  if (!fs::is_directory(dir)) return out.str();
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    auto index = [](const fs::path& p) {
      const std::string stem = p.stem().string();
      return std::strtol(stem.c_str() + 4, nullptr, 10);  // "run_<i>"
    };
    return index(a) < index(b);
  });
  for (const auto& file : files) {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      const VqeRunRecord record = record_from_json(buf.str());
      const std::string stem = file.stem().string();
      const long run = std::strtol(stem.c_str() + 4, nullptr, 10);
      for (std::size_t i = 0; i < record.energy_trace.size(); ++i) {
        out << run << "," << i << "," << format_value(record.energy_trace[i]) << "\n";
      }
    } catch (const std::exception&) {
      // skip unreadable records
    }
  }
  return out.str();
}

}  // namespace phavqe
