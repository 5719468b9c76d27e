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

#include "phavqe/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace phavqe {

namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > PauliString::kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, 63], got " +
                                std::to_string(n_qubits));
  }
}

std::uint64_t low_bits(int n) {
  return n >= 64 ? ~0ull : (1ull << n) - 1;
}

}  // namespace

PauliString::PauliString(int n_qubits)
    : n_qubits_(n_qubits), x_mask_(0), z_mask_(0) {
  check_qubit_count(n_qubits);
}

PauliString::PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_qubits_(n_qubits), x_mask_(x_mask), z_mask_(z_mask) {
  check_qubit_count(n_qubits);
  const std::uint64_t allowed = low_bits(n_qubits);
  if ((x_mask | z_mask) & ~allowed) {
    throw std::invalid_argument("Pauli mask uses bits beyond qubit count");
  }
}

PauliString PauliString::from_label(std::string_view label) {
  const int n = static_cast<int>(label.size());
  check_qubit_count(n);
  std::uint64_t x = 0, z = 0;
  for (int i = 0; i < n; ++i) {
    const int qubit = n - 1 - i;  // leftmost label character = qubit n-1
    switch (label[i]) {
      case 'I':
        break;
      case 'X':
        x |= 1ull << qubit;
        break;
      case 'Y':
        x |= 1ull << qubit;
        z |= 1ull << qubit;
        break;
      case 'Z':
        z |= 1ull << qubit;
        break;
      default:
        throw std::invalid_argument(std::string("invalid Pauli character '") +
                                    label[i] + "' in \"" + std::string(label) +
                                    "\" (expected I, X, Y or Z)");
    }
  }
  return PauliString(n, x, z);
}

int PauliString::weight() const {
  return std::popcount(x_mask_ | z_mask_);
}

char PauliString::pauli_at(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::out_of_range("qubit index out of range");
  }
  const bool x = (x_mask_ >> qubit) & 1;
  const bool z = (z_mask_ >> qubit) & 1;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliString::str() const {
  std::string out(static_cast<std::size_t>(n_qubits_), 'I');
  for (int q = 0; q < n_qubits_; ++q) {
    out[static_cast<std::size_t>(n_qubits_ - 1 - q)] = pauli_at(q);
  }
  return out;
}

bool PauliString::label_less(const PauliString& other) const {
  return str() < other.str();
}

std::complex<double> PauliProduct::phase() const {
  switch (((phase_exponent % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliProduct pauli_multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("pauli_multiply: qubit counts differ");
  }
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  // Writing each factor as i^(x&z) X^x Z^z, the product phase is
  // i^(ya + yb - yab) * (-1)^(za & xb) with y* counting Y positions.
  int k = std::popcount(a.x_mask() & a.z_mask()) +
          std::popcount(b.x_mask() & b.z_mask()) - std::popcount(x & z) +
          2 * std::popcount(a.z_mask() & b.x_mask());
  k = ((k % 4) + 4) % 4;
  return {PauliString(a.n_qubits(), x, z), k};
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("commutes: qubit counts differ");
  }
  const int anti = std::popcount(a.x_mask() & b.z_mask()) +
                   std::popcount(a.z_mask() & b.x_mask());
  return (anti % 2) == 0;
}

bool qubitwise_commutes(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("qubitwise_commutes: qubit counts differ");
  }
  const std::uint64_t both = (a.x_mask() | a.z_mask()) & (b.x_mask() | b.z_mask());
  const std::uint64_t differ = (a.x_mask() ^ b.x_mask()) | (a.z_mask() ^ b.z_mask());
  return (both & differ) == 0;
}

PauliSum PauliSum::from_terms(int n_qubits, std::vector<PauliTerm> terms,
                              double prune_threshold) {
  std::unordered_map<PauliString, double> merged;
  std::vector<PauliString> order;
  merged.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.string.n_qubits() != n_qubits) {
      throw std::invalid_argument("PauliSum: term qubit count mismatch");
    }
    auto [it, inserted] = merged.try_emplace(t.string, 0.0);
    if (inserted) order.push_back(t.string);
    it->second += t.coefficient;
  }
  PauliSum sum(n_qubits);
  sum.terms_.reserve(order.size());
  for (const auto& s : order) {
    const double c = merged.at(s);
    if (std::abs(c) >= prune_threshold) {
      sum.terms_.push_back({s, c});
    }
  }
  return sum;
}

void PauliSum::sort_canonical() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const PauliTerm& a, const PauliTerm& b) {
                     const double ma = std::abs(a.coefficient);
                     const double mb = std::abs(b.coefficient);
                     if (ma != mb) return ma > mb;
                     return a.string.label_less(b.string);
                   });
}

void ComplexPauliSum::add(const PauliString& s, std::complex<double> coeff) {
  if (s.n_qubits() != n_qubits_) {
    throw std::invalid_argument("ComplexPauliSum: qubit count mismatch");
  }
  for (auto& [str, c] : terms_) {
    if (str == s) {
      c += coeff;
      return;
    }
  }
  terms_.emplace_back(s, coeff);
}

void ComplexPauliSum::add(const ComplexPauliSum& other, std::complex<double> scale) {
  for (const auto& [s, c] : other.terms_) {
    add(s, c * scale);
  }
}

ComplexPauliSum ComplexPauliSum::operator*(const ComplexPauliSum& other) const {
  if (n_qubits_ != other.n_qubits_) {
    throw std::invalid_argument("ComplexPauliSum: qubit count mismatch");
  }
  ComplexPauliSum out(n_qubits_);
  for (const auto& [sa, ca] : terms_) {
    for (const auto& [sb, cb] : other.terms_) {
      const PauliProduct p = pauli_multiply(sa, sb);
      out.add(p.string, ca * cb * p.phase());
    }
  }
  return out;
}

PauliSum ComplexPauliSum::to_real_sum(double max_imag, double prune_threshold) const {
  double worst = 0.0;
  const PauliString* offender = nullptr;
  std::vector<PauliTerm> real_terms;
  real_terms.reserve(terms_.size());
  for (const auto& [s, c] : terms_) {
    if (std::abs(c) < prune_threshold) continue;
    if (std::abs(c.imag()) > worst) {
      worst = std::abs(c.imag());
      offender = &s;
    }
    real_terms.push_back({s, c.real()});
  }
  if (worst > max_imag) {
    throw std::runtime_error("non-Hermitian Pauli sum: term " + offender->str() +
                             " has imaginary coefficient " + std::to_string(worst));
  }
  return PauliSum::from_terms(n_qubits_, std::move(real_terms), prune_threshold);
}

std::vector<std::vector<std::size_t>> group_terms(const PauliSum& h) {
  if (h.empty()) {
    throw std::invalid_argument("group_terms: empty Pauli sum");
  }
  const auto& terms = h.terms();
  std::vector<std::size_t> order(terms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ma = std::abs(terms[a].coefficient);
    const double mb = std::abs(terms[b].coefficient);
    if (ma != mb) return ma > mb;
    return terms[a].string.label_less(terms[b].string);
  });

  std::vector<std::vector<std::size_t>> groups;
  for (const std::size_t idx : order) {
    bool placed = false;
    for (auto& group : groups) {
      const bool fits = std::all_of(group.begin(), group.end(), [&](std::size_t j) {
        return qubitwise_commutes(terms[idx].string, terms[j].string);
      });
      if (fits) {
        group.push_back(idx);
        placed = true;
        break;
      }
    }
    if (!placed) {
      groups.push_back({idx});
    }
  }
  return groups;
}

}  // namespace phavqe
