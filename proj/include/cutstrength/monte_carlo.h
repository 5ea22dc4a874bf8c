// Copyright 2026 The cutstrength Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUTSTRENGTH_MONTE_CARLO_H_
#define CUTSTRENGTH_MONTE_CARLO_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cutstrength/lattice_geometry.h"
#include "cutstrength/rational.h"

namespace cutstrength {

inline constexpr int64_t kDefaultSamples = 1'000'000;

struct McEstimate {
  double estimate = 0;
  int64_t samples = 0;
  double std_error = 0;  // sqrt(p(1-p)/samples)
  uint64_t seed = 0;
};

// Uniform point in the body for sample index i. A pure function of
// (body, seed, i).
std::array<double, 2> SamplePoint(const LatticeFreeBody& body, uint64_t seed,
                                  int64_t index);

// Fraction of uniformly sampled f with single-split strength <= z (Type1:
// the exact strength). Identical results for any thread count.
McEstimate MonteCarloLower(const LatticeFreeBody& body, const Rational& z,
                           int64_t samples, uint64_t seed);
// Same samples for every z.
std::vector<McEstimate> MonteCarloLower(const LatticeFreeBody& body,
                                        std::span<const Rational> zs,
                                        int64_t samples, uint64_t seed);

// Exact evaluation on a shared sample: how often t_bar <= z and t_N <= z.
struct ClosureFrequency {
  Rational z;
  int64_t single_split_hits = 0;
  int64_t closure_hits = 0;
  int64_t samples = 0;
};
std::vector<ClosureFrequency> CompareClosureFrequency(
    const LatticeFreeBody& body, std::span<const Rational> zs, int n,
    int64_t samples, uint64_t seed);

// Exact interior point for sample index i (dyadic barycentric coordinates).
Rational2 SampleExactPoint(const LatticeFreeBody& body, uint64_t seed,
                           int64_t index);

// Worker threads: CUTSTRENGTH_THREADS if set to a positive integer, else the
// hardware concurrency.
int WorkerThreads();

}  // namespace cutstrength

#endif  // CUTSTRENGTH_MONTE_CARLO_H_
