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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "phavqe/pauli.hpp"

namespace phavqe {

/// Raised on malformed Hamiltonian files; the message names the offending
/// line or term.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Where a Hamiltonian came from: molecule label, hash of the source file
/// and the fermion-to-qubit transform used (if any).
struct Provenance {
  std::string molecule;
  std::string file_hash;
  std::string transform;
};

/// A finalized qubit Hamiltonian: a real-weighted Pauli sum that always
/// carries exactly one all-identity term (coefficient mirrored in
/// identity_offset, possibly zero).
class QubitHamiltonian {
 public:
  QubitHamiltonian(PauliSum sum, Provenance source = {});

  const PauliSum& sum() const { return sum_; }
  int n_qubits() const { return sum_.n_qubits(); }
  double identity_offset() const { return identity_offset_; }
  const Provenance& source() const { return source_; }
  std::size_t term_count() const { return sum_.size(); }

 private:
  PauliSum sum_;
  double identity_offset_;
  Provenance source_;
};

/// Partial-Hamiltonian construction rule: keep the identity term and every
/// string free of X/Y components, then augment with the extra_terms largest
/// excluded terms (ties broken by ascending label).
struct PartialSpec {
  std::size_t extra_terms = 0;
};

// Reads a Hamiltonian from JSON ({"n_qubits":.., "terms":[{"pauli":..,
// "coeff":..}, ..]}) or, when the file does not start with '{', from the
// two-column text form "COEFF STRING" with '#' comments. Throws ParseError.
QubitHamiltonian load_hamiltonian(const std::string& path);

// Writes JSON with coefficients at 17 significant digits, so that
// save followed by load reproduces every term bit-exactly.
void save_hamiltonian(const QubitHamiltonian& h, const std::string& path);

std::string hamiltonian_to_json(const QubitHamiltonian& h);
QubitHamiltonian hamiltonian_from_json(const std::string& text);
QubitHamiltonian hamiltonian_from_text(const std::string& text);

// Applies the I/Z truncation rule. Output terms keep their original
// coefficients and are ordered by descending |coefficient|. Throws
// std::out_of_range if spec.extra_terms exceeds the excluded-term count.
QubitHamiltonian make_partial(const QubitHamiltonian& h, const PartialSpec& spec);

struct TermCountRow {
  std::string molecule;
  std::size_t full_terms;
  std::size_t partial_terms;
};

// One row per molecule file: label, full term count, I/Z-rule partial count.
std::vector<TermCountRow> term_count_report(const std::vector<std::string>& paths);

std::string term_count_csv(const std::vector<TermCountRow>& rows);

// FNV-1a hash of a file's bytes, as fixed-width hex; provenance stamps.
std::string file_fnv1a_hex(const std::string& path);

}  // namespace phavqe
