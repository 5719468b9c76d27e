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

#include "phavqe/fermion.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace phavqe {

namespace {

using nlohmann::json;

void check_orbital(int index, int n) {
  if (index < 0 || index >= n) {
    throw std::out_of_range("orbital index " + std::to_string(index) +
                            " out of range for " + std::to_string(n) +
                            " spin orbitals");
  }
}

}  // namespace

void FermionHamiltonian::add_one_body(int p, int q, double value) {
  check_orbital(p, n_spin_orbitals);
  check_orbital(q, n_spin_orbitals);
  one_body[{p, q}] += value;
}

void FermionHamiltonian::add_two_body(int p, int q, int r, int s, double value) {
  check_orbital(p, n_spin_orbitals);
  check_orbital(q, n_spin_orbitals);
  check_orbital(r, n_spin_orbitals);
  check_orbital(s, n_spin_orbitals);
  two_body[{p, q, r, s}] += value;
}

void FermionHamiltonian::validate_hermiticity(double tol) const {
  for (const auto& [pq, value] : one_body) {
    const auto it = one_body.find({pq.second, pq.first});
    const double mirror = it == one_body.end() ? 0.0 : it->second;
    if (std::abs(value - mirror) > tol) {
      throw std::runtime_error(
          "one-body integrals not Hermitian: h(" + std::to_string(pq.first) +
          "," + std::to_string(pq.second) + ")=" + std::to_string(value) +
          " vs h(" + std::to_string(pq.second) + "," +
          std::to_string(pq.first) + ")=" + std::to_string(mirror));
    }
  }
}

ComplexPauliSum jw_ladder(const LadderOp& op, int n_qubits) {
  if (op.orbital_index < 0 || op.orbital_index >= n_qubits) {
    throw std::out_of_range("ladder operator index " +
                            std::to_string(op.orbital_index) +
                            " out of range for " + std::to_string(n_qubits) +
                            " qubits");
  }
  const int i = op.orbital_index;
  const std::uint64_t site = 1ull << i;
  const std::uint64_t chain = site - 1;  // Z on every qubit below i

  ComplexPauliSum out(n_qubits);
  out.add(PauliString(n_qubits, site, chain), {0.5, 0.0});           // X_i (x) Z_<i
  const double y_sign = op.is_creation ? -0.5 : 0.5;
  out.add(PauliString(n_qubits, site, chain | site), {0.0, y_sign});  // Y_i (x) Z_<i
  return out;
}

QubitHamiltonian jw_transform(const FermionHamiltonian& h,
                              const std::string& molecule_label,
                              const std::string& source_hash) {
  if (h.n_spin_orbitals < 1) {
    throw std::invalid_argument("jw_transform: need at least one spin orbital");
  }
  const int n = h.n_spin_orbitals;
  ComplexPauliSum acc(n);
  acc.add(PauliString(n), {h.constant, 0.0});

  // Cache the two ladder images per orbital; the n^4 loop below reuses them.
  std::vector<ComplexPauliSum> create, annihilate;
  create.reserve(n);
  annihilate.reserve(n);
  for (int p = 0; p < n; ++p) {
    create.push_back(jw_ladder({p, true}, n));
    annihilate.push_back(jw_ladder({p, false}, n));
  }

  for (const auto& [pq, value] : h.one_body) {
    if (value == 0.0) continue;
    acc.add(create[pq.first] * annihilate[pq.second], {value, 0.0});
  }
  for (const auto& [pqrs, value] : h.two_body) {
    if (value == 0.0) continue;
    const auto [p, q, r, s] = pqrs;
    const ComplexPauliSum left = create[p] * create[q];
    const ComplexPauliSum right = annihilate[s] * annihilate[r];
    acc.add(left * right, {0.5 * value, 0.0});
  }

  PauliSum sum = acc.to_real_sum(1e-10);
  sum.sort_canonical();
  return QubitHamiltonian(std::move(sum),
                          {molecule_label, source_hash, "jordan-wigner"});
}

FermionHamiltonian fermion_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid integral JSON: ") + e.what());
  }
  FermionHamiltonian h;
  try {
    h.n_spin_orbitals = doc.at("n_spin_orbitals").get<int>();
  } catch (const json::exception&) {
    throw ParseError("integral file needs \"n_spin_orbitals\"");
  }
  if (h.n_spin_orbitals < 1) {
    throw ParseError("n_spin_orbitals must be positive");
  }
  const std::string convention = doc.value("convention", "");
  if (convention != "phys" && convention != "chem") {
    throw ParseError("integral file must declare \"convention\": \"phys\" or \"chem\"");
  }
  h.constant = doc.value("constant", 0.0);

  try {
    if (doc.contains("one_body")) {
      for (const auto& row : doc.at("one_body")) {
        if (!row.is_array() || row.size() != 3) {
          throw ParseError("one_body rows must be [p, q, value]");
        }
        h.add_one_body(row[0].get<int>(), row[1].get<int>(), row[2].get<double>());
      }
    }
    if (doc.contains("two_body")) {
      for (const auto& row : doc.at("two_body")) {
        if (!row.is_array() || row.size() != 5) {
          throw ParseError("two_body rows must be [p, q, r, s, value]");
        }
        const int p = row[0].get<int>();
        const int q = row[1].get<int>();
        const int r = row[2].get<int>();
        const int s = row[3].get<int>();
        const double v = row[4].get<double>();
        if (convention == "phys") {
          // <pq|rs> multiplies a_p+ a_q+ a_s a_r, the stored ordering.
          h.add_two_body(p, q, r, s, v);
        } else {
          // (pq|rs) multiplies a_p+ a_r+ a_s a_q.
          h.add_two_body(p, r, q, s, v);
        }
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid integral entry: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(e.what());
  }
  h.validate_hermiticity(1e-10);
  return h;
}

FermionHamiltonian load_fermion_hamiltonian(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return fermion_from_json(buf.str());
}

}  // namespace phavqe
