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

#include <stdexcept>

#include "json.hpp"

namespace phavqe {

namespace {

using nlohmann::json;

void check_gate(const Gate& gate, int n_qubits, int n_parameters) {
  if (gate.qubit0 < 0 || gate.qubit0 >= n_qubits) {
    throw std::invalid_argument("gate qubit index out of range");
  }
  if (gate.is_two_qubit()) {
    if (gate.qubit1 < 0 || gate.qubit1 >= n_qubits) {
      throw std::invalid_argument("gate qubit index out of range");
    }
    if (gate.qubit1 == gate.qubit0) {
      throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
  }
  if (gate.parameter_index && (*gate.parameter_index < 0 ||
                               *gate.parameter_index >= n_parameters)) {
    throw std::invalid_argument("gate parameter index out of range");
  }
  const bool rotation = gate.kind == GateKind::RY || gate.kind == GateKind::RZ;
  if (gate.parameter_index && !rotation) {
    throw std::invalid_argument("only RY/RZ gates take parameters");
  }
}

}  // namespace

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::H: return "h";
    case GateKind::Sdg: return "sdg";
    case GateKind::CZ: return "cz";
    case GateKind::CX: return "cx";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "ry") return GateKind::RY;
  if (name == "rz") return GateKind::RZ;
  if (name == "h") return GateKind::H;
  if (name == "sdg") return GateKind::Sdg;
  if (name == "cz") return GateKind::CZ;
  if (name == "cx") return GateKind::CX;
  if (name == "x") return GateKind::X;
  if (name == "y") return GateKind::Y;
  if (name == "z") return GateKind::Z;
  throw std::invalid_argument("unknown gate kind: " + name);
}

void Circuit::append(Gate gate) {
  check_gate(gate, n_qubits, n_parameters);
  gates.push_back(gate);
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits != n_qubits) {
    throw std::invalid_argument("circuit append: qubit counts differ");
  }
  for (const auto& gate : other.gates) {
    check_gate(gate, n_qubits, std::max(n_parameters, other.n_parameters));
    gates.push_back(gate);
  }
  n_parameters = std::max(n_parameters, other.n_parameters);
}

Circuit hardware_efficient_ansatz(int n_qubits, int layers) {
  if (n_qubits < 1 || layers < 1) {
    throw std::invalid_argument("hardware_efficient_ansatz: need n_qubits >= 1, layers >= 1");
  }
  Circuit c;
  c.n_qubits = n_qubits;
  c.n_parameters = n_qubits * (layers + 1);
  int param = 0;
  for (int q = 0; q < n_qubits; ++q) {
    c.append({GateKind::RY, q, -1, param++});
  }
  for (int layer = 0; layer < layers; ++layer) {
    for (int q = 0; q + 1 < n_qubits; ++q) {
      c.append({GateKind::CZ, q, q + 1});
    }
    for (int q = 0; q < n_qubits; ++q) {
      c.append({GateKind::RY, q, -1, param++});
    }
  }
  return c;
}

int default_ansatz_layers(int n_qubits) {
  if (n_qubits <= 4) return 2;
  if (n_qubits <= 8) return 3;
  return 4;
}

Circuit basis_rotation_circuit(const std::vector<PauliString>& group) {
  if (group.empty()) {
    throw std::invalid_argument("basis_rotation_circuit: empty group");
  }
  const int n = group.front().n_qubits();
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = i + 1; j < group.size(); ++j) {
      if (!qubitwise_commutes(group[i], group[j])) {
        throw std::invalid_argument(
            "basis_rotation_circuit: strings " + group[i].str() + " and " +
            group[j].str() + " do not qubit-wise commute");
      }
    }
  }
  Circuit c;
  c.n_qubits = n;
  for (int q = 0; q < n; ++q) {
    char shared = 'I';
    for (const auto& s : group) {
      const char p = s.pauli_at(q);
      if (p != 'I') {
        shared = p;
        break;  // qubit-wise commutation makes every non-I entry equal
      }
    }
    if (shared == 'X') {
      c.append({GateKind::H, q});
    } else if (shared == 'Y') {
      c.append({GateKind::Sdg, q});
      c.append({GateKind::H, q});
    }
  }
  return c;
}

std::string circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates) {
    json entry;
    entry["kind"] = gate_kind_name(g.kind);
    entry["qubits"] = g.is_two_qubit() ? json::array({g.qubit0, g.qubit1})
                                       : json::array({g.qubit0});
    if (g.parameter_index) {
      entry["param"] = *g.parameter_index;
    } else if (g.kind == GateKind::RY || g.kind == GateKind::RZ) {
      entry["angle"] = g.fixed_angle;
    }
    gates.push_back(entry);
  }
  json doc;
  doc["n_qubits"] = c.n_qubits;
  doc["n_parameters"] = c.n_parameters;
  doc["gates"] = gates;
  return doc.dump(2);
}

Circuit circuit_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid circuit JSON: ") + e.what());
  }
  Circuit c;
  c.n_qubits = doc.at("n_qubits").get<int>();
  c.n_parameters = doc.at("n_parameters").get<int>();
  for (const auto& entry : doc.at("gates")) {
    Gate g;
    g.kind = gate_kind_from_name(entry.at("kind").get<std::string>());
    const auto& qubits = entry.at("qubits");
    g.qubit0 = qubits.at(0).get<int>();
    g.qubit1 = qubits.size() > 1 ? qubits.at(1).get<int>() : -1;
    if (entry.contains("param")) {
      g.parameter_index = entry.at("param").get<int>();
    }
    if (entry.contains("angle")) {
      g.fixed_angle = entry.at("angle").get<double>();
    }
    c.append(g);
  }
  return c;
}

}  // namespace phavqe
