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

#include "phavqe/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace phavqe {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

double resolve_angle(const Gate& gate, std::span<const double> params) {
  if (gate.parameter_index) {
    return params[static_cast<std::size_t>(*gate.parameter_index)];
  }
  return gate.fixed_angle;
}

// i^k for k = popcount(x&z) of a string; premultiplied once per term.
std::complex<double> y_phase(const PauliString& s) {
  switch (std::popcount(s.x_mask() & s.z_mask()) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

Statevector::Statevector(int n_qubits)
    : n_qubits_(n_qubits), amps_(1ull << n_qubits, {0.0, 0.0}) {
  if (n_qubits < 1 || n_qubits > 30) {
    throw std::invalid_argument("statevector qubit count must be in [1, 30]");
  }
  amps_[0] = 1.0;
}

double Statevector::norm() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void Statevector::normalize() {
  const double n = norm();
  if (n == 0.0) {
    throw std::runtime_error("cannot normalize the zero vector");
  }
  for (auto& a : amps_) a /= n;
}

void Statevector::set_basis_state(std::size_t index) {
  if (index >= amps_.size()) {
    throw std::out_of_range("basis state index out of range");
  }
  std::fill(amps_.begin(), amps_.end(), std::complex<double>{0.0, 0.0});
  amps_[index] = 1.0;
}

void Statevector::apply_gate(const Gate& gate, std::span<const double> params) {
  const std::size_t dim = amps_.size();
  const std::size_t mask0 = 1ull << gate.qubit0;
  switch (gate.kind) {
    case GateKind::RY: {
      const double half = 0.5 * resolve_angle(gate, params);
      const double c = std::cos(half), s = std::sin(half);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask0) continue;
        const auto a0 = amps_[i], a1 = amps_[i | mask0];
        amps_[i] = c * a0 - s * a1;
        amps_[i | mask0] = s * a0 + c * a1;
      }
      break;
    }
    case GateKind::RZ: {
      const double half = 0.5 * resolve_angle(gate, params);
      const std::complex<double> lo = std::exp(-kImag * half);
      const std::complex<double> hi = std::exp(kImag * half);
      for (std::size_t i = 0; i < dim; ++i) {
        amps_[i] *= (i & mask0) ? hi : lo;
      }
      break;
    }
    case GateKind::H: {
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask0) continue;
        const auto a0 = amps_[i], a1 = amps_[i | mask0];
        amps_[i] = inv_sqrt2 * (a0 + a1);
        amps_[i | mask0] = inv_sqrt2 * (a0 - a1);
      }
      break;
    }
    case GateKind::Sdg: {
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask0) amps_[i] *= -kImag;
      }
      break;
    }
    case GateKind::CZ: {
      const std::size_t mask1 = 1ull << gate.qubit1;
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & mask0) && (i & mask1)) amps_[i] = -amps_[i];
      }
      break;
    }
    case GateKind::CX: {
      const std::size_t target = 1ull << gate.qubit1;
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & mask0) && !(i & target)) {
          std::swap(amps_[i], amps_[i | target]);
        }
      }
      break;
    }
    case GateKind::X: {
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & mask0)) std::swap(amps_[i], amps_[i | mask0]);
      }
      break;
    }
    case GateKind::Y: {
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask0) continue;
        const auto a0 = amps_[i], a1 = amps_[i | mask0];
        amps_[i] = -kImag * a1;
        amps_[i | mask0] = kImag * a0;
      }
      break;
    }
    case GateKind::Z: {
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask0) amps_[i] = -amps_[i];
      }
      break;
    }
  }
#ifndef NDEBUG
  assert(std::abs(norm() - 1.0) < 1e-10);
#endif
}

void NoiseModel::validate() const {
  for (const double p : {p1, p2, p_readout}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("noise probabilities must lie in [0, 1]");
    }
  }
}

NoiseModel noise_preset(const std::string& name) {
  if (name == "none" || name.empty()) return {0.0, 0.0, 0.0};
  if (name == "noisy") return {0.001, 0.01, 0.02};
  if (name == "realistic") return {0.003, 0.025, 0.03};
  throw std::invalid_argument("unknown noise preset: " + name);
}

MeasurementPlan make_measurement_plan(const QubitHamiltonian& h, int shots_per_group) {
  return {group_terms(h.sum()), shots_per_group};
}

Statevector run_circuit(const Circuit& c, std::span<const double> params) {
  if (static_cast<int>(params.size()) != c.n_parameters) {
    throw std::invalid_argument("run_circuit: expected " +
                                std::to_string(c.n_parameters) + " parameters, got " +
                                std::to_string(params.size()));
  }
  Statevector psi(c.n_qubits);
  for (const auto& gate : c.gates) {
    psi.apply_gate(gate, params);
  }
  return psi;
}

double expectation_exact(const Statevector& psi, const PauliString& string) {
  if (string.n_qubits() != psi.n_qubits()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  // P|b> = i^y * (-1)^popcount(b & z) |b ^ x>, so <psi|P|psi> is one pass.
  const std::uint64_t x = string.x_mask();
  const std::uint64_t z = string.z_mask();
  const std::complex<double> phase = y_phase(string);
  std::complex<double> acc = 0.0;
  const auto amps = psi.amplitudes();
  for (std::size_t b = 0; b < amps.size(); ++b) {
    const double sign = std::popcount(b & z) % 2 ? -1.0 : 1.0;
    acc += std::conj(amps[b ^ x]) * (phase * sign) * amps[b];
  }
  if (std::abs(acc.imag()) > 1e-10) {
    throw std::runtime_error("Pauli expectation has imaginary part " +
                             std::to_string(acc.imag()));
  }
  return acc.real();
}

double expectation_exact(const Statevector& psi, const QubitHamiltonian& h) {
  if (h.n_qubits() != psi.n_qubits()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  double energy = 0.0;
  for (const auto& term : h.sum().terms()) {
    if (term.string.is_identity()) {
      energy += term.coefficient;
    } else {
      energy += term.coefficient * expectation_exact(psi, term.string);
    }
  }
  return energy;
}

Circuit apply_noise_trajectory(const Circuit& c, const NoiseModel& noise,
                               RngStream& rng) {
  noise.validate();
  Circuit out;
  out.n_qubits = c.n_qubits;
  out.n_parameters = c.n_parameters;
  out.gates.reserve(c.gates.size() * 2);
  constexpr GateKind paulis[3] = {GateKind::X, GateKind::Y, GateKind::Z};
  for (const auto& gate : c.gates) {
    out.gates.push_back(gate);
    if (gate.is_two_qubit()) {
      if (noise.p2 > 0.0 && rng.uniform() < noise.p2) {
        // Uniform over the 15 non-identity two-qubit Paulis.
        const std::uint64_t k = rng.below(15) + 1;
        const int first = static_cast<int>(k % 4);
        const int second = static_cast<int>(k / 4);
        if (first != 0) out.gates.push_back({paulis[first - 1], gate.qubit0});
        if (second != 0) out.gates.push_back({paulis[second - 1], gate.qubit1});
      }
    } else if (noise.p1 > 0.0 && rng.uniform() < noise.p1) {
      const std::uint64_t k = rng.below(3);
      out.gates.push_back({paulis[k], gate.qubit0});
    }
  }
  return out;
}

namespace {

// Draws one basis state from |psi|^2 given a uniform variate.
std::size_t sample_index(const std::vector<double>& cumulative, double u) {
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  return static_cast<std::size_t>(std::distance(cumulative.begin(), it));
}

std::vector<double> cumulative_probabilities(const Statevector& psi) {
  std::vector<double> cum(psi.dimension());
  double acc = 0.0;
  const auto amps = psi.amplitudes();
  for (std::size_t i = 0; i < cum.size(); ++i) {
    acc += std::norm(amps[i]);
    cum[i] = acc;
  }
  cum.back() = std::max(cum.back(), 1.0);  // guard the final bin against rounding
  return cum;
}

}  // namespace

SampledExpectation expectation_sampled(const Circuit& c,
                                       std::span<const double> params,
                                       const QubitHamiltonian& h,
                                       const MeasurementPlan& plan,
                                       const NoiseModel* noise,
                                       std::uint64_t seed) {
  if (c.n_qubits != h.n_qubits()) {
    throw std::invalid_argument("expectation_sampled: dimension mismatch");
  }
  if (plan.shots_per_group < 1) {
    throw std::invalid_argument("expectation_sampled: needs at least one shot");
  }
  const auto& terms = h.sum().terms();
  std::vector<bool> covered(terms.size(), false);
  for (const auto& group : plan.groups) {
    for (const std::size_t idx : group) {
      if (idx >= terms.size() || covered[idx]) {
        throw std::invalid_argument("measurement plan does not partition the Hamiltonian");
      }
      covered[idx] = true;
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw std::invalid_argument("measurement plan does not partition the Hamiltonian");
  }

  const bool noisy = noise != nullptr && !noise->is_noiseless();
  const double p_flip = noise != nullptr ? noise->p_readout : 0.0;
  RngStream root(seed);

  double energy = 0.0;
  double variance = 0.0;
  std::size_t group_tag = 0;
  for (const auto& group : plan.groups) {
    RngStream rng = root.child(group_tag++);

    std::vector<const PauliTerm*> sampled_terms;
    std::vector<std::uint64_t> supports;
    std::vector<PauliString> strings;
    for (const std::size_t idx : group) {
      const auto& t = terms[idx];
      if (t.string.is_identity()) {
        energy += t.coefficient;  // exact, zero variance
        continue;
      }
      sampled_terms.push_back(&t);
      supports.push_back(t.string.x_mask() | t.string.z_mask());
      strings.push_back(t.string);
    }
    if (sampled_terms.empty()) continue;

    Circuit measured = c;
    measured.append(basis_rotation_circuit(strings));

    const int shots = plan.shots_per_group;
    double sum = 0.0, sum_sq = 0.0;

    // Noiseless circuits are simulated once and sampled repeatedly; with
    // gate noise every shot is its own trajectory.
    Statevector psi(1);
    std::vector<double> cum;
    const bool gate_noise = noisy && (noise->p1 > 0.0 || noise->p2 > 0.0);
    if (!gate_noise) {
      psi = run_circuit(measured, params);
      cum = cumulative_probabilities(psi);
    }
    for (int shot = 0; shot < shots; ++shot) {
      if (gate_noise) {
        const Circuit traj = apply_noise_trajectory(measured, *noise, rng);
        psi = run_circuit(traj, params);
        cum = cumulative_probabilities(psi);
      }
      std::uint64_t bits = sample_index(cum, rng.uniform());
      if (p_flip > 0.0) {
        for (int q = 0; q < c.n_qubits; ++q) {
          if (rng.uniform() < p_flip) bits ^= 1ull << q;
        }
      }
      double value = 0.0;
      for (std::size_t j = 0; j < sampled_terms.size(); ++j) {
        const double eig = std::popcount(bits & supports[j]) % 2 ? -1.0 : 1.0;
        value += sampled_terms[j]->coefficient * eig;
      }
      sum += value;
      sum_sq += value * value;
    }
    const double mean = sum / shots;
    energy += mean;
    if (shots > 1) {
      const double sample_var =
          std::max(0.0, (sum_sq - shots * mean * mean) / (shots - 1));
      variance += sample_var / shots;
    }
  }
  return {energy, std::sqrt(variance)};
}

}  // namespace phavqe
