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

#include <benchmark/benchmark.h>

#include "phavqe/hamiltonian.hpp"
#include "phavqe/pauli.hpp"
#include "phavqe/rng.hpp"

namespace {

using namespace phavqe;

PauliSum random_sum(int n_qubits, int terms, std::uint64_t seed) {
  RngStream rng(seed);
  const std::uint64_t mask = (1ull << n_qubits) - 1;
  std::vector<PauliTerm> list;
  list.reserve(terms);
  for (int i = 0; i < terms; ++i) {
    list.push_back({PauliString(n_qubits, rng.next_u64() & mask,
                                rng.next_u64() & mask),
                    rng.uniform(-1.0, 1.0)});
  }
  return PauliSum::from_terms(n_qubits, std::move(list));
}

void BM_PauliMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RngStream rng(7);
  const std::uint64_t mask = (1ull << n) - 1;
  const PauliString a(n, rng.next_u64() & mask, rng.next_u64() & mask);
  const PauliString b(n, rng.next_u64() & mask, rng.next_u64() & mask);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pauli_multiply(a, b));
  }
}
BENCHMARK(BM_PauliMultiply)->Arg(4)->Arg(16)->Arg(63);

void BM_GroupTerms(benchmark::State& state) {
  const PauliSum sum = random_sum(10, static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_terms(sum));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GroupTerms)->Range(16, 512)->Complexity();

void BM_GroupReferenceTable(benchmark::State& state) {
  const QubitHamiltonian h =
      load_hamiltonian(std::string(PHAVQE_DATA_DIR) + "/h2_table1.json");
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_terms(h.sum()));
  }
}
BENCHMARK(BM_GroupReferenceTable);

}  // namespace
