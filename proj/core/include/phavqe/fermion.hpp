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

#include <map>
#include <string>
#include <tuple>

#include "phavqe/hamiltonian.hpp"
#include "phavqe/pauli.hpp"

namespace phavqe {

/// A second-quantized Hamiltonian over spin orbitals:
///   H = constant + sum_pq h_pq a_p^dag a_q
///              + 1/2 sum_pqrs h_pqrs a_p^dag a_q^dag a_s a_r
/// with real integral tables. Spin orbitals are interleaved: even index =
/// alpha, odd = beta. Orbital p maps to qubit p.
struct FermionHamiltonian {
  int n_spin_orbitals = 0;
  double constant = 0.0;
  std::map<std::pair<int, int>, double> one_body;
  std::map<std::tuple<int, int, int, int>, double> two_body;

  void add_one_body(int p, int q, double value);
  void add_two_body(int p, int q, int r, int s, double value);

  // h_pq == h_qp within tol for real integrals.
  void validate_hermiticity(double tol = 1e-10) const;
};

/// A single creation or annihilation operator acting on one spin orbital.
struct LadderOp {
  int orbital_index;
  bool is_creation;
};

// Jordan-Wigner image of one ladder operator:
//   a_i^dag -> 1/2 (X_i - i Y_i) (x) Z_j for all j < i
//   a_i     -> 1/2 (X_i + i Y_i) (x) Z_j for all j < i
// Exactly two terms, each with coefficient magnitude 1/2.
ComplexPauliSum jw_ladder(const LadderOp& op, int n_qubits);

// Expands the full second-quantized Hamiltonian through jw_ladder products
// and finalizes to a real-coefficient qubit Hamiltonian. Throws
// std::runtime_error naming the worst term if any final coefficient keeps
// |imag| > 1e-10.
QubitHamiltonian jw_transform(const FermionHamiltonian& h,
                              const std::string& molecule_label = "",
                              const std::string& source_hash = "");

// Reads the integral-table JSON:
//   {"n_spin_orbitals": n, "convention": "phys|chem", "constant": c,
//    "one_body": [[p,q,v], ...], "two_body": [[p,q,r,s,v], ...]}
// "phys" entries are <pq|rs> multiplying a_p^dag a_q^dag a_s a_r; "chem"
// entries are (pq|rs) multiplying a_p^dag a_r^dag a_s a_q, permuted on load.
FermionHamiltonian load_fermion_hamiltonian(const std::string& path);
FermionHamiltonian fermion_from_json(const std::string& text);

}  // namespace phavqe
