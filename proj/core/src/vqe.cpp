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

#include "phavqe/vqe.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "json.hpp"
#include "phavqe/rng.hpp"

namespace phavqe {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

// Improvement of the best-so-far value across the trailing 10 iterations.
bool converged(const std::vector<double>& best_trace, double tol, int window = 10) {
  const int n = static_cast<int>(best_trace.size());
  if (n < window) return false;
  return best_trace[n - window] - best_trace[n - 1] < tol;
}

void check_finite(double energy) {
  if (!std::isfinite(energy)) {
    throw std::runtime_error("VQE energy is not finite (numeric blow-up)");
  }
}

struct Objective {
  const QubitHamiltonian& h;
  const Circuit& circuit;
  const VqeConfig& cfg;
  MeasurementPlan plan;            // only used in sampled mode
  NoiseModel noise;
  std::uint64_t eval_counter = 0;
  std::uint64_t seed_base = 0;

  Objective(const QubitHamiltonian& h_in, const Circuit& c_in, const VqeConfig& cfg_in)
      : h(h_in), circuit(c_in), cfg(cfg_in) {
    if (cfg.evaluation_mode == EvaluationMode::Sampled) {
      plan = make_measurement_plan(h, cfg.shots_per_group);
    }
    noise = noise_preset(cfg.noise_preset);
    seed_base = RngStream(cfg.seed).child(0x0bceul).next_u64();
  }

  double operator()(std::span<const double> params) {
    double energy;
    if (cfg.evaluation_mode == EvaluationMode::Exact) {
      energy = expectation_exact(run_circuit(circuit, params), h);
    } else {
      const std::uint64_t eval_seed = seed_base + (eval_counter++);
      energy = expectation_sampled(circuit, params, h, plan,
                                   noise.is_noiseless() ? nullptr : &noise,
                                   eval_seed)
                   .energy;
    }
    check_finite(energy);
    return energy;
  }
};

std::vector<double> gradient_of(Objective& objective, std::vector<double> theta,
                                GradientMethod method) {
  std::vector<double> grad(theta.size());
  if (method == GradientMethod::ParameterShift) {
    for (std::size_t i = 0; i < theta.size(); ++i) {
      const double original = theta[i];
      theta[i] = original + kPi / 2.0;
      const double plus = objective(theta);
      theta[i] = original - kPi / 2.0;
      const double minus = objective(theta);
      theta[i] = original;
      grad[i] = 0.5 * (plus - minus);
    }
  } else {
    const double step = 1e-5;
    for (std::size_t i = 0; i < theta.size(); ++i) {
      const double original = theta[i];
      theta[i] = original + step;
      const double plus = objective(theta);
      theta[i] = original - step;
      const double minus = objective(theta);
      theta[i] = original;
      grad[i] = (plus - minus) / (2.0 * step);
    }
  }
  return grad;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Polak-Ribiere conjugate gradient with Armijo backtracking.
void minimize_cg(Objective& objective, std::vector<double>& theta,
                 const VqeConfig& cfg, std::vector<double>& trace) {
  const double armijo_c = 1e-4;
  const double shrink = 0.5;

  double energy = objective(theta);
  trace.push_back(energy);
  std::vector<double> best_trace{energy};

  std::vector<double> grad = gradient_of(objective, theta, cfg.gradient_method);
  std::vector<double> direction(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) direction[i] = -grad[i];

  for (int iter = 1; iter < cfg.max_iterations; ++iter) {
    const double slope = dot(grad, direction);
    if (slope >= 0.0 || dot(grad, grad) < 1e-18) {
      break;  // stationary point (or direction reset failed)
    }
    // Backtracking line search along `direction`.
    double step = 1.0;
    double candidate_energy = energy;
    std::vector<double> candidate(theta.size());
    bool accepted = false;
    for (int back = 0; back < 40; ++back) {
      for (std::size_t i = 0; i < theta.size(); ++i) {
        candidate[i] = theta[i] + step * direction[i];
      }
      candidate_energy = objective(candidate);
      if (candidate_energy <= energy + armijo_c * step * slope) {
        accepted = true;
        break;
      }
      step *= shrink;
    }
    if (!accepted) break;

    theta = candidate;
    energy = candidate_energy;
    trace.push_back(energy);
    best_trace.push_back(std::min(best_trace.back(), energy));

    std::vector<double> next_grad = gradient_of(objective, theta, cfg.gradient_method);
    double beta = 0.0;
    const double denom = dot(grad, grad);
    if (denom > 0.0) {
      double numer = 0.0;
      for (std::size_t i = 0; i < grad.size(); ++i) {
        numer += next_grad[i] * (next_grad[i] - grad[i]);
      }
      beta = std::max(0.0, numer / denom);
    }
    for (std::size_t i = 0; i < direction.size(); ++i) {
      direction[i] = -next_grad[i] + beta * direction[i];
    }
    grad = std::move(next_grad);
    if (dot(grad, direction) >= 0.0) {
      for (std::size_t i = 0; i < direction.size(); ++i) direction[i] = -grad[i];
    }
    if (converged(best_trace, cfg.convergence_tol)) break;
  }
}

void minimize_spsa(Objective& objective, std::vector<double>& theta,
                   const VqeConfig& cfg, std::vector<double>& trace,
                   RngStream& rng) {
  SpsaHyperparams hp = cfg.spsa;
  if (hp.big_a <= 0.0) hp.big_a = 0.1 * cfg.max_iterations;

  const std::size_t n = theta.size();
  std::vector<double> delta(n), plus(n), minus(n);

  auto estimate_gradient = [&](double ck) {
    for (std::size_t i = 0; i < n; ++i) {
      delta[i] = static_cast<double>(rng.bernoulli_pm());
      plus[i] = theta[i] + ck * delta[i];
      minus[i] = theta[i] - ck * delta[i];
    }
    const double e_plus = objective(plus);
    const double e_minus = objective(minus);
    std::vector<double> grad(n);
    for (std::size_t i = 0; i < n; ++i) {
      grad[i] = (e_plus - e_minus) / (2.0 * ck * delta[i]);
    }
    return std::tuple{grad, 0.5 * (e_plus + e_minus)};
  };

  if (hp.a <= 0.0) {
    // Calibrate so the first update moves each angle by about 0.1 rad.
    double magnitude = 0.0;
    const int probes = 5;
    for (int probe = 0; probe < probes; ++probe) {
      auto [grad, mid] = estimate_gradient(hp.c);
      double mean_abs = 0.0;
      for (const double g : grad) mean_abs += std::abs(g);
      magnitude += mean_abs / static_cast<double>(n);
    }
    magnitude /= probes;
    hp.a = magnitude > 1e-12
               ? 0.1 * std::pow(hp.big_a + 1.0, hp.alpha) / magnitude
               : 0.1;
  }

  std::vector<double> best_trace;
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    const double ak = hp.a / std::pow(hp.big_a + iter + 1.0, hp.alpha);
    const double ck = hp.c / std::pow(iter + 1.0, hp.gamma);
    auto [grad, midpoint] = estimate_gradient(ck);
    for (std::size_t i = 0; i < n; ++i) {
      theta[i] -= ak * grad[i];
    }
    trace.push_back(midpoint);
    best_trace.push_back(best_trace.empty() ? midpoint
                                            : std::min(best_trace.back(), midpoint));
    if (converged(best_trace, cfg.convergence_tol)) break;
  }
  // Score the final iterate; this closes the trace as the accepted value.
  const double final_energy = objective(theta);
  trace.push_back(final_energy);
}

}  // namespace

void VqeConfig::validate() const {
  if (max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be positive");
  }
  if (convergence_tol <= 0.0) {
    throw std::invalid_argument("convergence_tol must be positive");
  }
  if (evaluation_mode == EvaluationMode::Sampled && shots_per_group < 1) {
    throw std::invalid_argument("sampled evaluation needs at least one shot");
  }
  phavqe::noise_preset(noise_preset);  // throws on unknown preset names
}

VqeConfig VqeConfig::ideal(std::uint64_t seed) {
  VqeConfig cfg;
  cfg.optimizer = Optimizer::CG;
  cfg.max_iterations = 500;
  cfg.convergence_tol = 1e-6;
  cfg.evaluation_mode = EvaluationMode::Exact;
  cfg.noise_preset = "none";
  cfg.seed = seed;
  return cfg;
}

VqeConfig VqeConfig::noisy(std::uint64_t seed, const std::string& preset) {
  VqeConfig cfg;
  cfg.optimizer = Optimizer::SPSA;
  cfg.max_iterations = 1000;
  cfg.convergence_tol = 1e-3;
  cfg.evaluation_mode = EvaluationMode::Sampled;
  cfg.noise_preset = preset;
  cfg.seed = seed;
  return cfg;
}

VqeRunRecord vqe_minimize_from(const QubitHamiltonian& h, const Circuit& circuit,
                               const VqeConfig& cfg,
                               std::vector<double> initial_parameters) {
  cfg.validate();
  if (circuit.n_qubits != h.n_qubits()) {
    throw std::invalid_argument("vqe_minimize: circuit and Hamiltonian qubit counts differ");
  }
  if (static_cast<int>(initial_parameters.size()) != circuit.n_parameters) {
    throw std::invalid_argument("vqe_minimize: initial parameter length mismatch");
  }
  const auto t0 = std::chrono::steady_clock::now();

  VqeRunRecord record;
  record.config = cfg;
  record.initial_parameters = initial_parameters;

  Objective objective(h, circuit, cfg);
  std::vector<double> theta = std::move(initial_parameters);

  if (cfg.optimizer == Optimizer::CG) {
    minimize_cg(objective, theta, cfg, record.energy_trace);
  } else {
    RngStream rng = RngStream(cfg.seed).child(0x5b5aul);
    minimize_spsa(objective, theta, cfg, record.energy_trace, rng);
  }

  record.final_parameters = std::move(theta);
  record.e_on_objective = record.energy_trace.back();
  record.iterations = static_cast<int>(record.energy_trace.size());
  record.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return record;
}

VqeRunRecord vqe_minimize(const QubitHamiltonian& h, const Circuit& circuit,
                          const VqeConfig& cfg) {
  RngStream rng = RngStream(cfg.seed).child(0x1417ul);
  std::vector<double> theta(static_cast<std::size_t>(circuit.n_parameters));
  for (auto& value : theta) value = rng.uniform(-kPi, kPi);
  return vqe_minimize_from(h, circuit, cfg, std::move(theta));
}

SampledExpectation evaluate_energy(const QubitHamiltonian& h, const Circuit& circuit,
                                   std::span<const double> params,
                                   const VqeConfig& cfg, std::uint64_t eval_seed) {
  if (cfg.evaluation_mode == EvaluationMode::Exact) {
    return {expectation_exact(run_circuit(circuit, params), h), 0.0};
  }
  const MeasurementPlan plan = make_measurement_plan(h, cfg.shots_per_group);
  const NoiseModel noise = noise_preset(cfg.noise_preset);
  return expectation_sampled(circuit, params, h, plan,
                             noise.is_noiseless() ? nullptr : &noise, eval_seed);
}

double cross_evaluate(VqeRunRecord& record, const Circuit& circuit,
                      const QubitHamiltonian& h_full) {
  if (circuit.n_qubits != h_full.n_qubits()) {
    throw std::invalid_argument("cross_evaluate: dimension mismatch");
  }
  const std::uint64_t seed = RngStream(record.config.seed).child(0xc405ul).next_u64();
  const double energy =
      evaluate_energy(h_full, circuit, record.final_parameters, record.config, seed)
          .energy;
  check_finite(energy);
  record.e_cross = energy;
  return energy;
}

PhaInitResult pha_initialized_vqe(const QubitHamiltonian& h_full,
                                  const QubitHamiltonian& h_partial,
                                  const Circuit& circuit, const VqeConfig& cfg) {
  if (h_full.n_qubits() != h_partial.n_qubits()) {
    throw std::invalid_argument("pha_initialized_vqe: qubit counts differ");
  }
  PhaInitResult result;
  result.stage1 = vqe_minimize(h_partial, circuit, cfg);
  VqeConfig stage2_cfg = cfg;
  stage2_cfg.seed = RngStream(cfg.seed).child(0x57a6e2ul).next_u64();
  result.stage2 = vqe_minimize_from(h_full, circuit, stage2_cfg,
                                    result.stage1.final_parameters);
  result.combined_iterations = result.stage1.iterations + result.stage2.iterations;
  return result;
}

std::vector<double> vqe_gradient(const QubitHamiltonian& h, const Circuit& circuit,
                                 std::span<const double> params,
                                 GradientMethod method) {
  VqeConfig cfg;  // exact mode
  Objective objective(h, circuit, cfg);
  std::vector<double> theta(params.begin(), params.end());
  return gradient_of(objective, std::move(theta), method);
}

const char* optimizer_name(Optimizer opt) {
  return opt == Optimizer::CG ? "cg" : "spsa";
}

const char* evaluation_mode_name(EvaluationMode mode) {
  return mode == EvaluationMode::Exact ? "exact" : "sampled";
}

namespace {

json config_to_json(const VqeConfig& cfg) {
  json doc;
  doc["optimizer"] = optimizer_name(cfg.optimizer);
  doc["max_iterations"] = cfg.max_iterations;
  doc["gradient_method"] = cfg.gradient_method == GradientMethod::ParameterShift
                               ? "parameter-shift"
                               : "central-difference";
  doc["spsa"] = {{"a", cfg.spsa.a},       {"c", cfg.spsa.c},
                 {"A", cfg.spsa.big_a},   {"alpha", cfg.spsa.alpha},
                 {"gamma", cfg.spsa.gamma}};
  doc["convergence_tol"] = cfg.convergence_tol;
  doc["evaluation_mode"] = evaluation_mode_name(cfg.evaluation_mode);
  doc["noise_preset"] = cfg.noise_preset;
  doc["shots_per_group"] = cfg.shots_per_group;
  doc["seed"] = cfg.seed;
  return doc;
}

VqeConfig config_from_json(const json& doc) {
  VqeConfig cfg;
  cfg.optimizer = doc.at("optimizer").get<std::string>() == "cg" ? Optimizer::CG
                                                                 : Optimizer::SPSA;
  cfg.max_iterations = doc.at("max_iterations").get<int>();
  cfg.gradient_method =
      doc.at("gradient_method").get<std::string>() == "parameter-shift"
          ? GradientMethod::ParameterShift
          : GradientMethod::CentralDifference;
  const auto& spsa = doc.at("spsa");
  cfg.spsa = {spsa.at("a").get<double>(), spsa.at("c").get<double>(),
              spsa.at("A").get<double>(), spsa.at("alpha").get<double>(),
              spsa.at("gamma").get<double>()};
  cfg.convergence_tol = doc.at("convergence_tol").get<double>();
  cfg.evaluation_mode = doc.at("evaluation_mode").get<std::string>() == "exact"
                            ? EvaluationMode::Exact
                            : EvaluationMode::Sampled;
  cfg.noise_preset = doc.at("noise_preset").get<std::string>();
  cfg.shots_per_group = doc.at("shots_per_group").get<int>();
  cfg.seed = doc.at("seed").get<std::uint64_t>();
  return cfg;
}

}  // namespace

std::string record_to_json(const VqeRunRecord& record) {
  json doc;
  doc["config"] = config_to_json(record.config);
  doc["initial_parameters"] = record.initial_parameters;
  doc["energy_trace"] = record.energy_trace;
  doc["final_parameters"] = record.final_parameters;
  doc["e_on_objective"] = record.e_on_objective;
  if (record.e_cross) {
    doc["e_cross"] = *record.e_cross;
  }
  doc["wall_time_seconds"] = record.wall_time_seconds;
  doc["iterations"] = record.iterations;
  doc["status"] = record.status;
  return doc.dump(2);
}

VqeRunRecord record_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid run-record JSON: ") + e.what());
  }
  VqeRunRecord record;
  record.config = config_from_json(doc.at("config"));
  record.initial_parameters = doc.at("initial_parameters").get<std::vector<double>>();
  record.energy_trace = doc.at("energy_trace").get<std::vector<double>>();
  record.final_parameters = doc.at("final_parameters").get<std::vector<double>>();
  record.e_on_objective = doc.at("e_on_objective").get<double>();
  if (doc.contains("e_cross")) {
    record.e_cross = doc.at("e_cross").get<double>();
  }
  record.wall_time_seconds = doc.value("wall_time_seconds", 0.0);
  record.iterations = doc.value("iterations", 0);
  record.status = doc.value("status", "ok");
  return record;
}

}  // namespace phavqe
