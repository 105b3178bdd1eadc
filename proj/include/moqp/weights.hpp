// Copyright 2026 The moqp Authors
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

#ifndef MOQP_WEIGHTS_HPP_
#define MOQP_WEIGHTS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "moqp/problem.hpp"

namespace moqp {

// Draws simplex weights by rejection: p-1 uniforms on [0, 1); if their sum s
// is below 1 the last weight is 1 - s, otherwise redraw. The engine is
// std::mt19937_64 (fully specified by the standard) and uniforms are formed
// as (engine() >> 11) * 2^-53, so a seed reproduces the same weights on every
// platform.
class WeightSampler {
 public:
  explicit WeightSampler(std::uint64_t seed) : engine_(seed) {}

  WeightVector Draw(std::size_t p);
  double Uniform();

 private:
  std::mt19937_64 engine_;
};

WeightVector GenWeightsPaper(std::size_t p, std::uint64_t seed);

// Upper bound on the number of lattice points GenWeightsGrid will emit.
inline constexpr std::uint64_t kMaxGridPoints = 1000000;

// All (i_1/k, ..., i_p/k) with sum i_j = k, lexicographically ascending in
// (i_1, ..., i_p). Throws SizeError when C(k+p-1, p-1) > kMaxGridPoints.
std::vector<WeightVector> GenWeightsGrid(std::size_t p, std::size_t k);

// C(k+p-1, p-1), saturating at UINT64_MAX.
std::uint64_t SimplexLatticeCount(std::size_t p, std::size_t k);

}  // namespace moqp

#endif  // MOQP_WEIGHTS_HPP_
