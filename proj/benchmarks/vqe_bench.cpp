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

#include "phavqe/ansatz.hpp"
#include "phavqe/exact.hpp"
#include "phavqe/hamiltonian.hpp"
#include "phavqe/vqe.hpp"

namespace {

using namespace phavqe;

void BM_IdealVqeRun(benchmark::State& state) {
  const QubitHamiltonian h =
      load_hamiltonian(std::string(PHAVQE_DATA_DIR) + "/h2_table1.json");
  const Circuit c = hardware_efficient_ansatz(4, 2);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vqe_minimize(h, c, VqeConfig::ideal(++seed)));
  }
}
BENCHMARK(BM_IdealVqeRun)->Unit(benchmark::kMillisecond);

void BM_NoisySpsaRun(benchmark::State& state) {
  const QubitHamiltonian h =
      load_hamiltonian(std::string(PHAVQE_DATA_DIR) + "/h2_table1.json");
  const Circuit c = hardware_efficient_ansatz(4, 2);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    VqeConfig cfg = VqeConfig::noisy(++seed);
    cfg.max_iterations = static_cast<int>(state.range(0));
    cfg.shots_per_group = 512;
    benchmark::DoNotOptimize(vqe_minimize(h, c, cfg));
  }
}
BENCHMARK(BM_NoisySpsaRun)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_DenseGroundState(benchmark::State& state) {
  const QubitHamiltonian h =
      load_hamiltonian(std::string(PHAVQE_DATA_DIR) + "/h2_table1.json");
  for (auto _ : state) {
    benchmark::DoNotOptimize(ground_state(to_dense(h)));
  }
  state.SetLabel("16x16 Jacobi");
}
BENCHMARK(BM_DenseGroundState)->Unit(benchmark::kMicrosecond);

}  // namespace
