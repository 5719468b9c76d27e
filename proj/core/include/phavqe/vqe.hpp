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

#include "phavqe/ansatz.hpp"
#include "phavqe/hamiltonian.hpp"
#include "phavqe/simulator.hpp"

namespace phavqe {

enum class Optimizer { CG, SPSA };
enum class GradientMethod { ParameterShift, CentralDifference };
enum class EvaluationMode { Exact, Sampled };

struct SpsaHyperparams {
  double a = 0.0;       // 0 = calibrate so the first step is ~0.1 rad
  double c = 0.1;
  double big_a = 0.0;   // 0 = 0.1 * max_iterations
  double alpha = 0.602;
  double gamma = 0.101;
};

struct VqeConfig {
  Optimizer optimizer = Optimizer::CG;
  int max_iterations = 500;
  GradientMethod gradient_method = GradientMethod::ParameterShift;
  SpsaHyperparams spsa;
  double convergence_tol = 1e-6;
  EvaluationMode evaluation_mode = EvaluationMode::Exact;
  std::string noise_preset = "none";
  int shots_per_group = 8192;
  std::uint64_t seed = 0;

  void validate() const;

  // The paper-setting bundles: ideal = CG on exact expectations,
  // noisy/realistic = SPSA on sampled expectations under the preset.
  static VqeConfig ideal(std::uint64_t seed);
  static VqeConfig noisy(std::uint64_t seed, const std::string& preset = "noisy");
};

struct VqeRunRecord {
  VqeConfig config;
  std::vector<double> initial_parameters;
  std::vector<double> energy_trace;      // objective value at each accepted iterate
  std::vector<double> final_parameters;
  double e_on_objective = 0.0;           // last accepted trace value
  std::optional<double> e_cross;         // objective state scored on the full H
  double wall_time_seconds = 0.0;
  int iterations = 0;
  std::string status = "ok";             // "ok" or "failed: <reason>"
};

// Minimizes <psi(theta)|H|psi(theta)> from uniform random theta in [-pi, pi]
// drawn from cfg.seed. The best-so-far trace is non-increasing; terminates
// when the best value improves by less than convergence_tol over a
// 10-iteration window, or at max_iterations. Deterministic given the seed.
// Throws std::runtime_error on non-finite energies.
VqeRunRecord vqe_minimize(const QubitHamiltonian& h, const Circuit& circuit,
                          const VqeConfig& cfg);

// As above but starting from the supplied parameters.
VqeRunRecord vqe_minimize_from(const QubitHamiltonian& h, const Circuit& circuit,
                               const VqeConfig& cfg,
                               std::vector<double> initial_parameters);

// Re-prepares |psi(theta_final)> and scores it on h_full in the record's
// evaluation mode; the result is also stored in record.e_cross.
double cross_evaluate(VqeRunRecord& record, const Circuit& circuit,
                      const QubitHamiltonian& h_full);

struct PhaInitResult {
  VqeRunRecord stage1;  // on the partial Hamiltonian, random start
  VqeRunRecord stage2;  // on the full Hamiltonian, warm start
  int combined_iterations = 0;
};

// Two-stage run: optimize h_partial first, then h_full from stage 1's
// optimum.
PhaInitResult pha_initialized_vqe(const QubitHamiltonian& h_full,
                                  const QubitHamiltonian& h_partial,
                                  const Circuit& circuit, const VqeConfig& cfg);

// Energy (and stderr in sampled mode) of |psi(theta)> on h under cfg.
SampledExpectation evaluate_energy(const QubitHamiltonian& h, const Circuit& circuit,
                                   std::span<const double> params,
                                   const VqeConfig& cfg, std::uint64_t eval_seed);

// Gradient of the exact-mode objective; parameter-shift uses
// g_i = [E(theta + pi/2 e_i) - E(theta - pi/2 e_i)] / 2.
std::vector<double> vqe_gradient(const QubitHamiltonian& h, const Circuit& circuit,
                                 std::span<const double> params,
                                 GradientMethod method);

std::string record_to_json(const VqeRunRecord& record);
VqeRunRecord record_from_json(const std::string& text);

const char* optimizer_name(Optimizer opt);
const char* evaluation_mode_name(EvaluationMode mode);

}  // namespace phavqe
