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

#include <cmath>

#include "doctest.h"
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

TEST_CASE("dense of c*Z is diag(c, -c)") {
  const DenseOperator op = to_dense(single_term("Z", 0.3));
  CHECK(op.at(0, 0) == std::complex<double>{0.3, 0.0});
  CHECK(op.at(1, 1) == std::complex<double>{-0.3, 0.0});
  CHECK(op.at(0, 1) == std::complex<double>{0.0, 0.0});
}

TEST_CASE("dense of ZZ is diag(1, -1, -1, 1)") {
  const DenseOperator op = to_dense(single_term("ZZ", 1.0));
  CHECK(op.at(0, 0).real() == doctest::Approx(1.0));
  CHECK(op.at(1, 1).real() == doctest::Approx(-1.0));
  CHECK(op.at(2, 2).real() == doctest::Approx(-1.0));
  CHECK(op.at(3, 3).real() == doctest::Approx(1.0));
}

TEST_CASE("Y strings produce Hermitian matrices with imaginary entries") {
  const DenseOperator op = to_dense(single_term("Y", 1.0));
  CHECK(op.at(1, 0) == std::complex<double>{0.0, 1.0});
  CHECK(op.at(0, 1) == std::complex<double>{0.0, -1.0});
  CHECK(op.max_hermiticity_defect() < 1e-15);
}

TEST_CASE("reference-table matrix: trace carried by the identity term") {
  const QubitHamiltonian h = load_hamiltonian(kTable1Path);
  const DenseOperator op = to_dense(h);
  CHECK(op.max_hermiticity_defect() < 1e-12);
  CHECK(op.trace().real() == doctest::Approx(16.0 * -0.81054).epsilon(1e-12));
  CHECK(op.trace().imag() == doctest::Approx(0.0));
}

TEST_CASE("to_dense is linear") {
  const QubitHamiltonian a = single_term("XZ", 0.6);
  const QubitHamiltonian b = single_term("YY", -1.2);
  const QubitHamiltonian ab = QubitHamiltonian(PauliSum::from_terms(
      2, {{PauliString::from_label("XZ"), 0.6},
          {PauliString::from_label("YY"), -1.2}}));
  DenseOperator sum = to_dense(a);
  sum += to_dense(b);
  const DenseOperator direct = to_dense(ab);
  for (std::size_t r = 0; r < sum.dimension(); ++r) {
    for (std::size_t c = 0; c < sum.dimension(); ++c) {
      CHECK(std::abs(sum.at(r, c) - direct.at(r, c)) < 1e-12);
    }
  }
}

TEST_CASE("ground state of diag(c, -c)") {
  const GroundState gs = ground_state(to_dense(single_term("Z", 0.4)));
  CHECK(gs.energy == doctest::Approx(-0.4));
  CHECK(std::abs(gs.vector.amplitude(1)) == doctest::Approx(1.0));
}

TEST_CASE("identity-only Hamiltonian returns its offset") {
  const GroundState gs = ground_state(to_dense(single_term("III", -2.5)));
  CHECK(gs.energy == doctest::Approx(-2.5));
}

TEST_CASE("non-Hermitian input is rejected") {
  DenseOperator op(1);
  op.at(0, 1) = {1.0, 0.0};
  op.at(1, 0) = {0.0, 0.0};
  CHECK_THROWS_AS(ground_state(op), std::invalid_argument);
}

TEST_CASE("eigen-residual below 1e-8 on random Hermitian sums") {
  RngStream rng(31214);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    std::vector<PauliTerm> terms;
    const std::uint64_t mask = (1ull << n) - 1;
    for (int t = 0; t < 6; ++t) {
      terms.push_back({PauliString(n, rng.next_u64() & mask, rng.next_u64() & mask),
                       rng.uniform(-1.0, 1.0)});
    }
    const QubitHamiltonian h(PauliSum::from_terms(n, terms));
    const DenseOperator op = to_dense(h);
    const GroundState gs = ground_state(op);

    double residual = 0.0;
    for (std::size_t r = 0; r < op.dimension(); ++r) {
      std::complex<double> hv = 0.0;
      for (std::size_t c = 0; c < op.dimension(); ++c) {
        hv += op.at(r, c) * gs.vector.amplitude(c);
      }
      residual += std::norm(hv - gs.energy * gs.vector.amplitude(r));
    }
    CHECK(std::sqrt(residual) < 1e-8);

    // No eigenvalue sits below the ground energy.
    const auto all = eigenvalues(op);
    CHECK(all.front() == doctest::Approx(gs.energy).epsilon(1e-10));
  }
}

TEST_CASE("expectation of the ground vector equals the eigenvalue") {
  const QubitHamiltonian h = load_hamiltonian(kTable1Path);
  const GroundState gs = ground_state(to_dense(h));
  CHECK(std::abs(expectation_exact(gs.vector, h) - gs.energy) < 1e-9);
  // The electronic ground energy of the bundled table sits near -1.85.
  CHECK(gs.energy < -1.8);
  CHECK(gs.energy > -1.9);
}

TEST_CASE("memory guard on the dense route") {
  CHECK_THROWS_AS(DenseOperator(15), std::invalid_argument);
}
