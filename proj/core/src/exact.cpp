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

#include "phavqe/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace phavqe {

namespace {

std::complex<double> y_phase(const PauliString& s) {
  switch (std::popcount(s.x_mask() & s.z_mask()) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

namespace {

std::size_t checked_dense_dimension(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 14) {
    throw std::invalid_argument("dense operator limited to 14 qubits");
  }
  return 1ull << n_qubits;
}

}  // namespace

DenseOperator::DenseOperator(int n_qubits)
    : n_qubits_(n_qubits),
      dim_(checked_dense_dimension(n_qubits)),
      data_(dim_ * dim_, {0.0, 0.0}) {}

std::complex<double> DenseOperator::trace() const {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) acc += at(i, i);
  return acc;
}

double DenseOperator::max_hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
    }
  }
  return worst;
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& other) {
  if (other.dim_ != dim_) {
    throw std::invalid_argument("dense operator dimension mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

DenseOperator to_dense(const PauliString& s, double coefficient) {
  DenseOperator op(s.n_qubits());
  const std::uint64_t x = s.x_mask();
  const std::uint64_t z = s.z_mask();
  const std::complex<double> phase = y_phase(s) * coefficient;
  // Column b maps to row b ^ x with sign (-1)^popcount(b & z).
  for (std::size_t b = 0; b < op.dimension(); ++b) {
    const double sign = std::popcount(b & z) % 2 ? -1.0 : 1.0;
    op.at(b ^ x, b) = phase * sign;
  }
  return op;
}

DenseOperator to_dense(const QubitHamiltonian& h) {
  DenseOperator op(h.n_qubits());
  for (const auto& term : h.sum().terms()) {
    const std::uint64_t x = term.string.x_mask();
    const std::uint64_t z = term.string.z_mask();
    const std::complex<double> phase = y_phase(term.string) * term.coefficient;
    for (std::size_t b = 0; b < op.dimension(); ++b) {
      const double sign = std::popcount(b & z) % 2 ? -1.0 : 1.0;
      op.at(b ^ x, b) += phase * sign;
    }
  }
  return op;
}

namespace {

struct JacobiResult {
  std::vector<double> eigenvalues;            // unsorted, per diagonal slot
  std::vector<std::complex<double>> vectors;  // columns, row-major dim x dim
  std::size_t dim;
};

// Cyclic Jacobi for complex Hermitian matrices. Each sweep zeroes every
// off-diagonal pivot with a unitary two-plane rotation; off-diagonal mass
// decreases monotonically until it reaches the tolerance.
JacobiResult jacobi_eigensolve(const DenseOperator& input) {
  const double scale = std::sqrt(std::norm(input.trace())) + 1.0;
  if (input.max_hermiticity_defect() > 1e-10 * std::max(1.0, scale)) {
    throw std::invalid_argument("ground_state: matrix is not Hermitian");
  }
  const std::size_t dim = input.dimension();
  std::vector<std::complex<double>> a(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      a[r * dim + c] = input.at(r, c);
    }
  }
  std::vector<std::complex<double>> v(dim * dim, {0.0, 0.0});
  for (std::size_t i = 0; i < dim; ++i) v[i * dim + i] = 1.0;

  auto off_diag_norm = [&]() {
    double acc = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = r + 1; c < dim; ++c) {
        acc += std::norm(a[r * dim + c]);
      }
    }
    return std::sqrt(acc);
  };

  double frob = 0.0;
  for (const auto& value : a) frob += std::norm(value);
  frob = std::sqrt(frob);
  const double tol = 1e-14 * std::max(frob, 1.0);

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps && off_diag_norm() > tol; ++sweep) {
    for (std::size_t p = 0; p < dim; ++p) {
      for (std::size_t q = p + 1; q < dim; ++q) {
        const std::complex<double> apq = a[p * dim + q];
        if (std::abs(apq) <= tol / dim) continue;

        const double app = a[p * dim + p].real();
        const double aqq = a[q * dim + q].real();
        const double abs_apq = std::abs(apq);
        const std::complex<double> unit = apq / abs_apq;  // e^{i arg}

        // tan(2 phi) = 2|apq| / (aqq - app); stable cot-based form.
        double t;
        const double diff = aqq - app;
        if (std::abs(diff) < 1e-300) {
          t = 1.0;
        } else {
          const double theta = diff / (2.0 * abs_apq);
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Columns p and q of A and V: A <- J^dag A J, V <- V J with
        // J[p][p]=c, J[q][p]=-s conj(unit), J[p][q]=s unit, J[q][q]=c.
        for (std::size_t r = 0; r < dim; ++r) {
          const auto arp = a[r * dim + p];
          const auto arq = a[r * dim + q];
          a[r * dim + p] = c * arp - s * std::conj(unit) * arq;
          a[r * dim + q] = s * unit * arp + c * arq;
          const auto vrp = v[r * dim + p];
          const auto vrq = v[r * dim + q];
          v[r * dim + p] = c * vrp - s * std::conj(unit) * vrq;
          v[r * dim + q] = s * unit * vrp + c * vrq;
        }
        for (std::size_t col = 0; col < dim; ++col) {
          const auto apc = a[p * dim + col];
          const auto aqc = a[q * dim + col];
          a[p * dim + col] = c * apc - s * unit * aqc;
          a[q * dim + col] = s * std::conj(unit) * apc + c * aqc;
        }
        a[p * dim + q] = 0.0;
        a[q * dim + p] = 0.0;
      }
    }
  }
  if (off_diag_norm() > 1e-10 * std::max(frob, 1.0)) {
    throw std::runtime_error("Jacobi eigensolve did not converge");
  }

  JacobiResult result;
  result.dim = dim;
  result.eigenvalues.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    result.eigenvalues[i] = a[i * dim + i].real();
  }
  result.vectors = std::move(v);
  return result;
}

}  // namespace

GroundState ground_state(const DenseOperator& op) {
  const JacobiResult eig = jacobi_eigensolve(op);
  std::size_t best = 0;
  for (std::size_t i = 1; i < eig.dim; ++i) {
    if (eig.eigenvalues[i] < eig.eigenvalues[best]) best = i;
  }
  Statevector vec(op.n_qubits());
  for (std::size_t r = 0; r < eig.dim; ++r) {
    vec.amplitude(r) = eig.vectors[r * eig.dim + best];
  }
  vec.normalize();

  // Residual check ||Hv - Ev||.
  const double energy = eig.eigenvalues[best];
  double residual = 0.0;
  for (std::size_t r = 0; r < eig.dim; ++r) {
    std::complex<double> hv = 0.0;
    for (std::size_t c = 0; c < eig.dim; ++c) {
      hv += op.at(r, c) * vec.amplitude(c);
    }
    residual += std::norm(hv - energy * vec.amplitude(r));
  }
  if (std::sqrt(residual) > 1e-8) {
    throw std::runtime_error("ground_state residual above 1e-8");
  }
  return {energy, std::move(vec)};
}

std::vector<double> eigenvalues(const DenseOperator& op) {
  JacobiResult eig = jacobi_eigensolve(op);
  std::sort(eig.eigenvalues.begin(), eig.eigenvalues.end());
  return eig.eigenvalues;
}

}  // namespace phavqe
