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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "phavqe/ansatz.hpp"
#include "phavqe/hamiltonian.hpp"
#include "phavqe/rng.hpp"

namespace phavqe {

/// Dense statevector of 2^n complex amplitudes, little-endian: qubit 0 is
/// the least-significant bit of the amplitude index.
class Statevector {
 public:
  explicit Statevector(int n_qubits);  // |0...0>

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }
  std::complex<double>& amplitude(std::size_t index) { return amps_[index]; }
  const std::complex<double>& amplitude(std::size_t index) const { return amps_[index]; }

  double norm() const;
  void normalize();

  // Collapses to the computational basis state |index>.
  void set_basis_state(std::size_t index);

  void apply_gate(const Gate& gate, std::span<const double> params);

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amps_;
};

/// Depolarizing-plus-readout noise. p1/p2 insert a uniform non-identity
/// Pauli after each 1-/2-qubit gate; p_readout flips each measured bit.
struct NoiseModel {
  double p1 = 0.0;
  double p2 = 0.0;
  double p_readout = 0.0;

  bool is_noiseless() const { return p1 == 0.0 && p2 == 0.0 && p_readout == 0.0; }
  void validate() const;
};

// Named presets: "none", "noisy" (1e-3, 1e-2, 2e-2) and
// "realistic" (3e-3, 2.5e-2, 3e-2).
NoiseModel noise_preset(const std::string& name);

/// How to sample a Hamiltonian: the qubit-wise-commuting groups (term-index
/// partition from group_terms) and a shot budget per group.
struct MeasurementPlan {
  std::vector<std::vector<std::size_t>> groups;
  int shots_per_group = 8192;
};

MeasurementPlan make_measurement_plan(const QubitHamiltonian& h,
                                      int shots_per_group = 8192);

// Applies gates in order to |0...0>. Throws on parameter-length mismatch.
Statevector run_circuit(const Circuit& c, std::span<const double> params);

// <psi|P|psi> for a single string.
double expectation_exact(const Statevector& psi, const PauliString& string);

// Sum of c_j <psi|P_j|psi>; the identity term contributes its coefficient
// exactly. Throws on dimension mismatch.
double expectation_exact(const Statevector& psi, const QubitHamiltonian& h);

struct SampledExpectation {
  double energy;
  double stderr;  // propagated per-group sample error
};

// Shot-based estimate: per group, append the basis rotation, simulate
// (one stochastic noise trajectory per shot when a model is given, readout
// flips on every sampled bit), and average eigenvalue products.
// Deterministic for a fixed seed.
SampledExpectation expectation_sampled(const Circuit& c,
                                       std::span<const double> params,
                                       const QubitHamiltonian& h,
                                       const MeasurementPlan& plan,
                                       const NoiseModel* noise,
                                       std::uint64_t seed);

// One stochastic realization of the depolarizing channel: after each gate,
// with probability p1 (p2 for two-qubit gates) inserts a uniformly chosen
// non-identity Pauli on the touched qubit(s).
Circuit apply_noise_trajectory(const Circuit& c, const NoiseModel& noise,
                               RngStream& rng);

}  // namespace phavqe
