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

#include "phavqe/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace phavqe {

namespace {

using nlohmann::json;

std::string format_coeff(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

QubitHamiltonian::QubitHamiltonian(PauliSum sum, Provenance source)
    : sum_(std::move(sum)), identity_offset_(0.0), source_(std::move(source)) {
  const PauliString identity(sum_.n_qubits());
  bool found = false;
  for (const auto& t : sum_.terms()) {
    if (t.string.is_identity()) {
      identity_offset_ = t.coefficient;
      found = true;
      break;
    }
  }
  if (!found) {
    // Canonical form keeps the identity term explicit even at zero weight.
    auto terms = sum_.terms();
    terms.push_back({identity, 0.0});
    sum_ = PauliSum::from_terms(sum_.n_qubits(), std::move(terms), 0.0);
  }
  for (const auto& t : sum_.terms()) {
    if (!std::isfinite(t.coefficient)) {
      throw ParseError("non-finite coefficient on term " + t.string.str());
    }
  }
}

QubitHamiltonian hamiltonian_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid Hamiltonian JSON: ") + e.what());
  }
  if (!doc.contains("n_qubits") || !doc.contains("terms")) {
    throw ParseError("Hamiltonian JSON needs \"n_qubits\" and \"terms\"");
  }
  const int n_qubits = doc.at("n_qubits").get<int>();
  if (n_qubits < 1) {
    throw ParseError("n_qubits must be positive");
  }
  const auto& term_list = doc.at("terms");
  if (!term_list.is_array() || term_list.empty()) {
    throw ParseError("Hamiltonian has no terms");
  }
  std::vector<PauliTerm> terms;
  terms.reserve(term_list.size());
  std::size_t index = 0;
  for (const auto& entry : term_list) {
    ++index;
    const std::string label = entry.at("pauli").get<std::string>();
    const double coeff = entry.at("coeff").get<double>();
    PauliString string(1);
    try {
      string = PauliString::from_label(label);
    } catch (const std::invalid_argument& e) {
      throw ParseError("term " + std::to_string(index) + ": " + e.what());
    }
    if (string.n_qubits() != n_qubits) {
      throw ParseError("term " + std::to_string(index) + " (\"" + label +
                       "\") has " + std::to_string(string.n_qubits()) +
                       " qubits, expected " + std::to_string(n_qubits));
    }
    if (!std::isfinite(coeff)) {
      throw ParseError("term " + std::to_string(index) + " (\"" + label +
                       "\") has a non-finite coefficient");
    }
    terms.push_back({string, coeff});
  }
  Provenance source;
  if (doc.contains("source")) {
    const auto& s = doc.at("source");
    source.molecule = s.value("molecule", "");
    source.file_hash = s.value("file_hash", "");
    source.transform = s.value("transform", "");
  }
  // Preserve file order; duplicates merge, nothing is pruned on load.
  return QubitHamiltonian(PauliSum::from_terms(n_qubits, std::move(terms), 0.0),
                          std::move(source));
}

QubitHamiltonian hamiltonian_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<PauliTerm> terms;
  int n_qubits = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double coeff;
    std::string label;
    if (!(fields >> coeff)) {
      std::string probe;
      std::istringstream recheck(line);
      if (recheck >> probe) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected \"COEFF STRING\", got \"" + line + "\"");
      }
      continue;  // blank or comment-only line
    }
    if (!(fields >> label)) {
      throw ParseError("line " + std::to_string(line_no) + ": missing Pauli string");
    }
    if (!std::isfinite(coeff)) {
      throw ParseError("line " + std::to_string(line_no) + ": non-finite coefficient");
    }
    PauliString string(1);
    try {
      string = PauliString::from_label(label);
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (n_qubits == 0) {
      n_qubits = string.n_qubits();
    } else if (string.n_qubits() != n_qubits) {
      throw ParseError("line " + std::to_string(line_no) + ": string \"" + label +
                       "\" has " + std::to_string(string.n_qubits()) +
                       " qubits, expected " + std::to_string(n_qubits));
    }
    terms.push_back({string, coeff});
  }
  if (terms.empty()) {
    throw ParseError("Hamiltonian text has no terms");
  }
  return QubitHamiltonian(PauliSum::from_terms(n_qubits, std::move(terms), 0.0));
}

QubitHamiltonian load_hamiltonian(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return hamiltonian_from_json(text);
  }
  return hamiltonian_from_text(text);
}

std::string hamiltonian_to_json(const QubitHamiltonian& h) {
  // Hand-formatted so coefficients carry exactly 17 significant digits and
  // the byte layout is stable across json-library versions.
  std::ostringstream out;
  out << "{\n  \"n_qubits\": " << h.n_qubits() << ",\n  \"terms\": [\n";
  const auto& ts = h.sum().terms();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out << "    {\"pauli\": \"" << ts[i].string.str()
        << "\", \"coeff\": " << format_coeff(ts[i].coefficient) << "}"
        << (i + 1 < ts.size() ? ",\n" : "\n");
  }
  out << "  ]";
  const Provenance& src = h.source();
  if (!src.molecule.empty() || !src.file_hash.empty() || !src.transform.empty()) {
    const json source = {{"molecule", src.molecule},
                         {"file_hash", src.file_hash},
                         {"transform", src.transform}};
    out << ",\n  \"source\": " << source.dump();
  }
  out << "\n}\n";
  return out.str();
}

void save_hamiltonian(const QubitHamiltonian& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write file: " + path);
  }
  out << hamiltonian_to_json(h);
}

QubitHamiltonian make_partial(const QubitHamiltonian& h, const PartialSpec& spec) {
  if (h.sum().empty()) {
    throw std::invalid_argument("make_partial: empty Hamiltonian");
  }
  std::vector<PauliTerm> kept;
  std::vector<PauliTerm> excluded;
  for (const auto& t : h.sum().terms()) {
    if (t.string.x_mask() == 0) {
      kept.push_back(t);  // identity and every I/Z-only string
    } else {
      excluded.push_back(t);
    }
  }
  if (spec.extra_terms > excluded.size()) {
    throw std::out_of_range("make_partial: extra_terms (" +
                            std::to_string(spec.extra_terms) + ") exceeds the " +
                            std::to_string(excluded.size()) + " excluded terms");
  }
  std::stable_sort(excluded.begin(), excluded.end(),
                   [](const PauliTerm& a, const PauliTerm& b) {
                     const double ma = std::abs(a.coefficient);
                     const double mb = std::abs(b.coefficient);
                     if (ma != mb) return ma > mb;
                     return a.string.label_less(b.string);
                   });
  kept.insert(kept.end(), excluded.begin(),
              excluded.begin() + static_cast<std::ptrdiff_t>(spec.extra_terms));

  PauliSum sum = PauliSum::from_terms(h.n_qubits(), std::move(kept), 0.0);
  sum.sort_canonical();
  Provenance source = h.source();
  source.transform = source.transform.empty()
                         ? "partial-iz"
                         : source.transform + "+partial-iz";
  return QubitHamiltonian(std::move(sum), std::move(source));
}

std::vector<TermCountRow> term_count_report(const std::vector<std::string>& paths) {
  std::vector<TermCountRow> rows;
  rows.reserve(paths.size());
  for (const auto& path : paths) {
    const QubitHamiltonian full = load_hamiltonian(path);
    const QubitHamiltonian partial = make_partial(full, PartialSpec{0});
    std::string label = full.source().molecule;
    if (label.empty()) {
      auto slash = path.find_last_of("/\\");
      label = slash == std::string::npos ? path : path.substr(slash + 1);
      auto dot = label.find_last_of('.');
      if (dot != std::string::npos) label.erase(dot);
    }
    rows.push_back({label, full.term_count(), partial.term_count()});
  }
  return rows;
}

std::string term_count_csv(const std::vector<TermCountRow>& rows) {
  std::ostringstream out;
  out << "molecule,full_terms,partial_terms\n";
  for (const auto& row : rows) {
    out << row.molecule << "," << row.full_terms << "," << row.partial_terms << "\n";
  }
  return out.str();
}

std::string file_fnv1a_hex(const std::string& path) {
  const std::string bytes = read_file(path);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace phavqe
