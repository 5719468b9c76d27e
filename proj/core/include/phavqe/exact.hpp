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
#include <vector>

#include "phavqe/hamiltonian.hpp"
#include "phavqe/simulator.hpp"

namespace phavqe {

/// A dense 2^n x 2^n complex matrix in row-major order. Built from a
/// real-coefficient Hamiltonian it is Hermitian within 1e-10.
class DenseOperator {
 public:
  explicit DenseOperator(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return dim_; }
  std::complex<double>& at(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }
  const std::complex<double>& at(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::complex<double> trace() const;
  double max_hermiticity_defect() const;  // max |A - A^dag| entry

  DenseOperator& operator+=(const DenseOperator& other);

 private:
  int n_qubits_;
  std::size_t dim_;
  std::vector<std::complex<double>> data_;
};

struct GroundState {
  double energy;
  Statevector vector;
};

// Kronecker expansion of the weighted Pauli sum, little-endian qubit
// indexing. Guarded at 14 qubits.
DenseOperator to_dense(const QubitHamiltonian& h);
DenseOperator to_dense(const PauliString& s, double coefficient = 1.0);

// Lowest eigenpair via cyclic Jacobi rotations (complex Hermitian variant,
// implemented here rather than delegated so the oracle stays independent).
// The returned pair satisfies ||Hv - Ev|| <= 1e-8. Throws on non-Hermitian
// input.
GroundState ground_state(const DenseOperator& op);

// All eigenvalues, ascending (small systems; used by tests and the CLI).
std::vector<double> eigenvalues(const DenseOperator& op);

}  // namespace phavqe
