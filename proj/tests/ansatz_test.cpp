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

#include "phavqe/ansatz.hpp"

#include <cmath>

#include "doctest.h"
#include "phavqe/rng.hpp"
#include "phavqe/simulator.hpp"

using namespace phavqe;

namespace {

int count_kind(const Circuit& c, GateKind kind) {
  int n = 0;
  for (const auto& g : c.gates) {
    if (g.kind == kind) ++n;
  }
  return n;
}

Statevector random_state(RngStream& rng, int n_qubits) {
  Statevector psi(n_qubits);
  for (std::size_t i = 0; i < psi.dimension(); ++i) {
    psi.amplitude(i) = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  }
  psi.normalize();
  return psi;
}

}  // namespace

TEST_CASE("hardware-efficient ansatz gate and parameter counts") {
  const Circuit c42 = hardware_efficient_ansatz(4, 2);
  CHECK(c42.n_parameters == 12);
  CHECK(count_kind(c42, GateKind::CZ) == 6);
  CHECK(count_kind(c42, GateKind::RY) == 12);

  const Circuit c11 = hardware_efficient_ansatz(1, 1);
  CHECK(c11.n_parameters == 2);
  CHECK(count_kind(c11, GateKind::CZ) == 0);

  const Circuit c23 = hardware_efficient_ansatz(2, 3);
  CHECK(c23.n_parameters == 8);
  CHECK(count_kind(c23, GateKind::CZ) == 3);
}

TEST_CASE("parameter count formula over a sweep") {
  for (int n = 1; n <= 10; ++n) {
    for (int layers = 1; layers <= 4; ++layers) {
      const Circuit c = hardware_efficient_ansatz(n, layers);
      CHECK(c.n_parameters == n * (layers + 1));
      CHECK(count_kind(c, GateKind::CZ) == layers * (n - 1));
    }
  }
}

TEST_CASE("zero parameters prepare exactly |0...0>") {
  const Circuit c = hardware_efficient_ansatz(4, 2);
  const std::vector<double> zeros(static_cast<std::size_t>(c.n_parameters), 0.0);
  const Statevector psi = run_circuit(c, zeros);
  CHECK(psi.amplitude(0) == std::complex<double>{1.0, 0.0});
  for (std::size_t i = 1; i < psi.dimension(); ++i) {
    CHECK(psi.amplitude(i) == std::complex<double>{0.0, 0.0});
  }
}

TEST_CASE("basis rotation circuits per shared component") {
  // Z-only group measures directly.
  CHECK(basis_rotation_circuit({PauliString::from_label("IZ"),
                                PauliString::from_label("ZI"),
                                PauliString::from_label("ZZ")})
            .gates.empty());

  const Circuit for_x = basis_rotation_circuit({PauliString::from_label("IX")});
  REQUIRE(for_x.gates.size() == 1);
  CHECK(for_x.gates[0].kind == GateKind::H);
  CHECK(for_x.gates[0].qubit0 == 0);

  const Circuit for_y = basis_rotation_circuit({PauliString::from_label("YI")});
  REQUIRE(for_y.gates.size() == 2);
  CHECK(for_y.gates[0].kind == GateKind::Sdg);
  CHECK(for_y.gates[0].qubit0 == 1);
  CHECK(for_y.gates[1].kind == GateKind::H);
  CHECK(for_y.gates[1].qubit0 == 1);
}

TEST_CASE("basis rotation rejects non-qubit-wise-commuting groups") {
  CHECK_THROWS_AS(basis_rotation_circuit({PauliString::from_label("XX"),
                                          PauliString::from_label("ZZ")}),
                  std::invalid_argument);
}

TEST_CASE("rotated Z-basis expectation equals the direct expectation") {
  RngStream rng(6021023);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const std::uint64_t mask = (1ull << n) - 1;
    const std::uint64_t x = rng.next_u64() & mask;
    const std::uint64_t z = rng.next_u64() & mask;
    const PauliString s(n, x, z);
    if (s.is_identity()) continue;

    const Statevector psi = random_state(rng, n);
    const double direct = expectation_exact(psi, s);

    // Apply the rotation, then measure the Z-mapped string on the support.
    Statevector rotated = psi;
    const Circuit rotation = basis_rotation_circuit({s});
    for (const auto& gate : rotation.gates) {
      rotated.apply_gate(gate, {});
    }
    const PauliString z_mapped(n, 0, s.x_mask() | s.z_mask());
    const double via_rotation = expectation_exact(rotated, z_mapped);
    CHECK(std::abs(direct - via_rotation) < 1e-10);
  }
}

TEST_CASE("gate validation") {
  Circuit c;
  c.n_qubits = 2;
  c.n_parameters = 1;
  CHECK_THROWS_AS(c.append({GateKind::CZ, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(c.append({GateKind::RY, 5, -1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(c.append({GateKind::RY, 0, -1, 3}), std::invalid_argument);
  CHECK_NOTHROW(c.append({GateKind::RY, 0, -1, 0}));
}

TEST_CASE("circuit JSON round trip") {
  const Circuit c = hardware_efficient_ansatz(3, 2);
  const Circuit back = circuit_from_json(circuit_to_json(c));
  CHECK(back.n_qubits == c.n_qubits);
  CHECK(back.n_parameters == c.n_parameters);
  REQUIRE(back.gates.size() == c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    CHECK(back.gates[i].kind == c.gates[i].kind);
    CHECK(back.gates[i].qubit0 == c.gates[i].qubit0);
    CHECK(back.gates[i].qubit1 == c.gates[i].qubit1);
    CHECK(back.gates[i].parameter_index == c.gates[i].parameter_index);
  }
}

TEST_CASE("default layer heuristic") {
  CHECK(default_ansatz_layers(4) == 2);
  CHECK(default_ansatz_layers(6) == 3);
  CHECK(default_ansatz_layers(8) == 3);
  CHECK(default_ansatz_layers(10) == 4);
}
