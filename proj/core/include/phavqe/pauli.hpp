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
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace phavqe {

/// An n-qubit Pauli string in symplectic (x_mask, z_mask) form.
///
/// Qubit q carries I if neither mask bit is set, X if only the x bit,
/// Z if only the z bit and Y if both. Text labels put qubit n-1 leftmost
/// ("IXZ" on 3 qubits is X on qubit 1, Z on qubit 0).
class PauliString {
 public:
  static constexpr int kMaxQubits = 63;

  // Identity on n qubits.
  explicit PauliString(int n_qubits);
  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  // Parses a label over {I,X,Y,Z}; throws std::invalid_argument naming the
  // first bad character.
  static PauliString from_label(std::string_view label);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t x_mask() const { return x_mask_; }
  std::uint64_t z_mask() const { return z_mask_; }
  bool is_identity() const { return x_mask_ == 0 && z_mask_ == 0; }

  // Number of non-identity positions.
  int weight() const;

  char pauli_at(int qubit) const;
  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  // Lexicographic order of the text label; used for deterministic tie-breaks.
  bool label_less(const PauliString& other) const;

 private:
  int n_qubits_;
  std::uint64_t x_mask_;
  std::uint64_t z_mask_;
};

/// Result of a Pauli product: the product string and the phase i^k.
struct PauliProduct {
  PauliString string;
  int phase_exponent;  // k in i^k, reduced mod 4

  std::complex<double> phase() const;
};

// Product a*b. Strings multiply by mask XOR; the phase accumulates the
// single-qubit factors (XZ = -iY and cyclic). Throws on qubit-count mismatch.
PauliProduct pauli_multiply(const PauliString& a, const PauliString& b);

// True iff a and b commute as operators: the count of positions holding
// distinct non-identity Paulis is even.
bool commutes(const PauliString& a, const PauliString& b);

// True iff at every position the Paulis are equal or one is identity.
// Qubit-wise commuting strings are simultaneously measurable after one
// shared basis rotation.
bool qubitwise_commutes(const PauliString& a, const PauliString& b);

/// One weighted term of a Hamiltonian. Coefficients are real (Hartree for
/// molecular Hamiltonians); complex intermediates live in ComplexPauliSum.
struct PauliTerm {
  PauliString string;
  double coefficient;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// A real-weighted sum of distinct Pauli strings.
class PauliSum {
 public:
  static constexpr double kDefaultPruneThreshold = 1e-12;

  explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {}

  // Merges duplicate strings and drops |coefficient| < prune_threshold.
  static PauliSum from_terms(int n_qubits, std::vector<PauliTerm> terms,
                             double prune_threshold = kDefaultPruneThreshold);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // Sorts terms by descending |coefficient|, ties by ascending label.
  void sort_canonical();

  bool operator==(const PauliSum&) const = default;

 private:
  int n_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Complex-coefficient accumulator for operator algebra (ladder-operator
/// expansions). Finalize to a real PauliSum once phases have cancelled.
class ComplexPauliSum {
 public:
  using Term = std::pair<PauliString, std::complex<double>>;

  explicit ComplexPauliSum(int n_qubits) : n_qubits_(n_qubits) {}

  int n_qubits() const { return n_qubits_; }
  const std::vector<Term>& terms() const { return terms_; }

  void add(const PauliString& s, std::complex<double> coeff);
  void add(const ComplexPauliSum& other, std::complex<double> scale = 1.0);

  // Operator product via pauli_multiply on every term pair.
  ComplexPauliSum operator*(const ComplexPauliSum& other) const;

  // Drops |coeff| < prune_threshold and verifies |imag| <= max_imag on the
  // rest; throws std::runtime_error naming the worst offender otherwise.
  PauliSum to_real_sum(double max_imag = 1e-10,
                       double prune_threshold = PauliSum::kDefaultPruneThreshold) const;

 private:
  int n_qubits_;
  std::vector<Term> terms_;  // kept merged: one entry per string
};

// Partitions term indices of h into qubit-wise-commuting groups by greedy
// sequential coloring over terms sorted by descending |coefficient|.
// Every index appears in exactly one group.
std::vector<std::vector<std::size_t>> group_terms(const PauliSum& h);

}  // namespace phavqe

template <>
struct std::hash<phavqe::PauliString> {
  std::size_t operator()(const phavqe::PauliString& p) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull * (p.x_mask() + 1);
    h ^= 0xbf58476d1ce4e5b9ull * (p.z_mask() + 0x94d049bb133111ebull);
    h ^= static_cast<std::uint64_t>(p.n_qubits()) << 56;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};
