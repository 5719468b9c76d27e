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

#include <numbers>

#include "phavqe/ansatz.hpp"
#include "phavqe/hamiltonian.hpp"
#include "phavqe/rng.hpp"
#include "phavqe/simulator.hpp"

namespace {

using namespace phavqe;

std::vector<double> random_params(const Circuit& c, std::uint64_t seed) {
  RngStream rng(seed);
  std::vector<double> params(static_cast<std::size_t>(c.n_parameters));
  for (auto& p : params) p = rng.uniform(-std::numbers::pi, std::numbers::pi);
  return params;
}

void BM_RunAnsatz(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circuit c = hardware_efficient_ansatz(n, 2);
  const auto params = random_params(c, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_circuit(c, params));
  }
  state.SetComplexityN(1 << n);
}
BENCHMARK(BM_RunAnsatz)->DenseRange(4, 12, 2)->Complexity();

void BM_ExactExpectation(benchmark::State& state) {
  const QubitHamiltonian h =
      load_hamiltonian(std::string(PHAVQE_DATA_DIR) + "/h2_table1.json");
  const Circuit c = hardware_efficient_ansatz(4, 2);
  const auto params = random_params(c, 5);
  const Statevector psi = run_circuit(c, params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expectation_exact(psi, h));
  }
}
BENCHMARK(BM_ExactExpectation);

void BM_SampledExpectation(benchmark::State& state) {
  const QubitHamiltonian h =
      load_hamiltonian(std::string(PHAVQE_DATA_DIR) + "/h2_table1.json");
  const Circuit c = hardware_efficient_ansatz(4, 2);
  const auto params = random_params(c, 5);
  const MeasurementPlan plan =
      make_measurement_plan(h, static_cast<int>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        expectation_sampled(c, params, h, plan, nullptr, ++seed));
  }
}
BENCHMARK(BM_SampledExpectation)->Arg(1024)->Arg(8192);

void BM_NoisyTrajectorySampling(benchmark::State& state) {
  const QubitHamiltonian h =
      load_hamiltonian(std::string(PHAVQE_DATA_DIR) + "/h2_table1.json");
  const Circuit c = hardware_efficient_ansatz(4, 2);
  const auto params = random_params(c, 5);
  const NoiseModel noise = noise_preset("noisy");
  const MeasurementPlan plan =
      make_measurement_plan(h, static_cast<int>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        expectation_sampled(c, params, h, plan, &noise, ++seed));
  }
}
BENCHMARK(BM_NoisyTrajectorySampling)->Arg(512)->Arg(2048);

}  // namespace
