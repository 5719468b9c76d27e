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

#include <cstdint>

namespace phavqe {

// SplitMix64 counter generator. Small state, splittable and portable:
// identical sequences on every platform, which batch determinism relies on.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  // Derives the independent per-run stream for (master_seed, run_index).
  static RngStream for_run(std::uint64_t master_seed, std::uint64_t run_index) {
    RngStream mix(master_seed ^ (0x9e3779b97f4a7c15ull * (run_index + 1)));
    mix.next_u64();
    return RngStream(mix.next_u64());
  }

  // A child stream decorrelated from this one by a caller-chosen tag.
  RngStream child(std::uint64_t tag) const {
    RngStream mix(state_ ^ (0xbf58476d1ce4e5b9ull * (tag + 1)));
    mix.next_u64();
    return RngStream(mix.next_u64());
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Fair +1/-1 draw (the SPSA perturbation directions).
  int bernoulli_pm() { return (next_u64() & 1) ? 1 : -1; }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Modulo bias is < 2^-50 for the n used here (tiny index ranges).
    return next_u64() % n;
  }

 private:
  std::uint64_t state_;
};

}  // namespace phavqe
