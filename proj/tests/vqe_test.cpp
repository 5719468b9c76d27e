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

#include <cmath>

#include "doctest.h"
#include "phavqe/exact.hpp"
#include "phavqe/rng.hpp"

using namespace phavqe;

namespace {

const std::string kTable1Path = std::string(PHAVQE_DATA_DIR) + "/h2_table1.json";

QubitHamiltonian single_term(const char* label, double coeff) {
  return QubitHamiltonian(PauliSum::from_terms(
      PauliString::from_label(label).n_qubits(),
      {{PauliString::from_label(label), coeff}}));
}

}  // namespace

TEST_CASE("constant objective converges on the first iteration") {
  const QubitHamiltonian h = single_term("IIII", -0.81054);
  const Circuit c = hardware_efficient_ansatz(4, 2);
  const VqeRunRecord record = vqe_minimize(h, c, VqeConfig::ideal(5));
  CHECK(record.energy_trace.size() == 1);
  CHECK(record.e_on_objective == doctest::Approx(-0.81054).epsilon(1e-14));
}

TEST_CASE("one-qubit -Z reaches the analytic minimum") {
  const QubitHamiltonian h = single_term("Z", -1.0);
  Circuit c;
  c.n_qubits = 1;
  c.n_parameters = 1;
  c.append({GateKind::RY, 0, -1, 0});

  const VqeRunRecord record = vqe_minimize(h, c, VqeConfig::ideal(12));
  CHECK(record.e_on_objective == doctest::Approx(-1.0).epsilon(1e-6));
  // The optimum prepares |0>.
  const Statevector psi = run_circuit(c, record.final_parameters);
  CHECK(std::norm(psi.amplitude(0)) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("best-so-far trace is monotone and ends at the reported energy") {
  const QubitHamiltonian h = load_hamiltonian(kTable1Path);
  const Circuit c = hardware_efficient_ansatz(4, 2);
  const VqeRunRecord record = vqe_minimize(h, c, VqeConfig::ideal(3));

  for (std::size_t i = 1; i < record.energy_trace.size(); ++i) {
    // CG accepts only non-increasing steps, so the raw trace is monotone.
    CHECK(record.energy_trace[i] <= record.energy_trace[i - 1] + 1e-12);
  }
  CHECK(record.e_on_objective == record.energy_trace.back());
  CHECK(record.iterations == static_cast<int>(record.energy_trace.size()));
}

TEST_CASE("parameter-shift gradient matches central differences") {
  const QubitHamiltonian h = load_hamiltonian(kTable1Path);
  const Circuit c = hardware_efficient_ansatz(4, 2);
  RngStream rng(88);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<double> theta(static_cast<std::size_t>(c.n_parameters));
    for (auto& t : theta) t = rng.uniform(-3.14159, 3.14159);
    const auto shift = vqe_gradient(h, c, theta, GradientMethod::ParameterShift);
    const auto diff = vqe_gradient(h, c, theta, GradientMethod::CentralDifference);
    for (std::size_t i = 0; i < shift.size(); ++i) {
      CHECK(std::abs(shift[i] - diff[i]) < 1e-6);
    }
  }
}

TEST_CASE("ideal energies respect the variational bound") {
  const QubitHamiltonian h = load_hamiltonian(kTable1Path);
  const double ground = ground_state(to_dense(h)).energy;
  const Circuit c = hardware_efficient_ansatz(4, 2);
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
    const VqeRunRecord record = vqe_minimize(h, c, VqeConfig::ideal(seed));
    for (const double e : record.energy_trace) {
      CHECK(e >= ground - 1e-9);
    }
  }
}

TEST_CASE("identical seeds reproduce bit-identical traces") {
  const QubitHamiltonian h = load_hamiltonian(kTable1Path);
  const Circuit c = hardware_efficient_ansatz(4, 2);

  VqeConfig noisy = VqeConfig::noisy(99);
  noisy.max_iterations = 40;
  noisy.shots_per_group = 256;
  const VqeRunRecord a = vqe_minimize(h, c, noisy);
  const VqeRunRecord b = vqe_minimize(h, c, noisy);
  REQUIRE(a.energy_trace.size() == b.energy_trace.size());
  for (std::size_t i = 0; i < a.energy_trace.size(); ++i) {
    CHECK(a.energy_trace[i] == b.energy_trace[i]);
  }
  for (std::size_t i = 0; i < a.final_parameters.size(); ++i) {
    CHECK(a.final_parameters[i] == b.final_parameters[i]);
  }
  // A different seed must explore differently.
  VqeConfig other = noisy;
  other.seed = 100;
  const VqeRunRecord d = vqe_minimize(h, c, other);
  CHECK(d.initial_parameters != a.initial_parameters);
}

TEST_CASE("cross evaluation is self-consistent on the objective") {
  const QubitHamiltonian h = load_hamiltonian(kTable1Path);
  const Circuit c = hardware_efficient_ansatz(4, 2);
  VqeRunRecord record = vqe_minimize(h, c, VqeConfig::ideal(7));
  const double cross = cross_evaluate(record, c, h);
  CHECK(cross == doctest::Approx(record.e_on_objective).epsilon(1e-12));
  CHECK(record.e_cross.has_value());
}

TEST_CASE("basis-like partial optimum scores the diagonal of the full table") {
  // States optimized on an I/Z-only Hamiltonian land near computational
  // basis states, where X-bearing strings contribute nothing.
  const QubitHamiltonian full = load_hamiltonian(kTable1Path);
  const QubitHamiltonian partial = make_partial(full, PartialSpec{0});
  const Circuit c = hardware_efficient_ansatz(4, 2);

  VqeRunRecord record = vqe_minimize(partial, c, VqeConfig::ideal(21));
  const double cross = cross_evaluate(record, c, full);

  // The partial Hamiltonian is the diagonal of the full one, so on any
  // basis state both agree; near a basis state they stay close.
  CHECK(std::abs(cross - record.e_on_objective) < 5e-3);
}

TEST_CASE("pha initialization with identical Hamiltonians converges fast") {
  const QubitHamiltonian h = load_hamiltonian(kTable1Path);
  const Circuit c = hardware_efficient_ansatz(4, 2);
  const PhaInitResult result = pha_initialized_vqe(h, h, c, VqeConfig::ideal(17));
  CHECK(result.stage2.energy_trace.size() <= 10);
  CHECK(result.stage2.e_on_objective <=
        result.stage1.e_on_objective + 1e-6);
  CHECK(result.combined_iterations ==
        result.stage1.iterations + result.stage2.iterations);
}

TEST_CASE("run records serialize and parse") {
  const QubitHamiltonian h = single_term("ZZ", 0.25);
  const Circuit c = hardware_efficient_ansatz(2, 1);
  VqeConfig cfg = VqeConfig::ideal(4);
  cfg.max_iterations = 20;
  VqeRunRecord record = vqe_minimize(h, c, cfg);
  cross_evaluate(record, c, h);

  const VqeRunRecord back = record_from_json(record_to_json(record));
  CHECK(back.e_on_objective == record.e_on_objective);
  CHECK(back.energy_trace == record.energy_trace);
  CHECK(back.final_parameters == record.final_parameters);
  CHECK(back.e_cross == record.e_cross);
  CHECK(back.config.seed == record.config.seed);
  CHECK(back.config.optimizer == record.config.optimizer);
  CHECK(back.status == "ok");
}

TEST_CASE("config validation") {
  VqeConfig cfg = VqeConfig::ideal(1);
  cfg.max_iterations = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = VqeConfig::ideal(1);
  cfg.convergence_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = VqeConfig::noisy(1);
  cfg.noise_preset = "loud";
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("dimension mismatches are rejected") {
  const QubitHamiltonian h = single_term("ZZ", 1.0);
  const Circuit c = hardware_efficient_ansatz(3, 1);
  CHECK_THROWS_AS(vqe_minimize(h, c, VqeConfig::ideal(1)),
                  std::invalid_argument);
}
