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

#include <optional>
#include <string>
#include <vector>

#include "phavqe/pauli.hpp"

namespace phavqe {

enum class GateKind { RY, RZ, H, Sdg, CZ, CX, X, Y, Z };

const char* gate_kind_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

/// One gate. Rotation gates carry either a parameter index into the
/// circuit's parameter vector or a fixed angle (noise insertions, etc.).
struct Gate {
  GateKind kind = GateKind::X;
  int qubit0 = 0;
  int qubit1 = -1;  // second qubit of CZ/CX, otherwise -1
  std::optional<int> parameter_index;
  double fixed_angle = 0.0;

  Gate() = default;
  Gate(GateKind k, int q0) : kind(k), qubit0(q0) {}
  Gate(GateKind k, int q0, int q1) : kind(k), qubit0(q0), qubit1(q1) {}
  Gate(GateKind k, int q0, int q1, int param)
      : kind(k), qubit0(q0), qubit1(q1), parameter_index(param) {}

  static Gate rotation(GateKind k, int q0, double angle) {
    Gate g(k, q0);
    g.fixed_angle = angle;
    return g;
  }

  bool is_two_qubit() const { return kind == GateKind::CZ || kind == GateKind::CX; }
  bool is_parameterized() const { return parameter_index.has_value(); }
};

/// An ordered gate list over n qubits with n_parameters rotation angles.
struct Circuit {
  int n_qubits = 0;
  int n_parameters = 0;
  std::vector<Gate> gates;

  void append(Gate gate);
  void append(const Circuit& other);  // parameter indices are kept as-is
};

// The RY + CZ-ladder trial-state family: one RY layer on every qubit, then
// `layers` repetitions of [CZ ladder over (q, q+1); RY layer]. Parameter
// count is n_qubits * (layers + 1).
Circuit hardware_efficient_ansatz(int n_qubits, int layers);

// Layer count used for molecules of a given width: 2 up to 4 qubits,
// 3 up to 8, 4 beyond. Config values override this.
int default_ansatz_layers(int n_qubits);

// Rotation mapping every string of a qubit-wise-commuting group onto the
// computational basis: H where the group shares an X component, Sdg then H
// for Y, nothing for I/Z. Throws if the group is not qubit-wise commuting.
Circuit basis_rotation_circuit(const std::vector<PauliString>& group);

std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

}  // namespace phavqe
