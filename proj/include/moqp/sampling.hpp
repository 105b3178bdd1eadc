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

#ifndef MOQP_SAMPLING_HPP_
#define MOQP_SAMPLING_HPP_

#include <cstdint>

#include "moqp/pareto.hpp"

namespace moqp {

struct SamplingOptions {
  // Null-space dimension up to which a tensor grid is used.
  std::size_t max_grid_dimension = 2;
  // Seeds the Cranley-Patterson shift of the Halton fill (dimension > 2).
  std::uint64_t seed = 0;
};

// Deterministic point cloud over {Ax = b, x >= 0}.
//
// The region is parametrized as x = x_p + N t with N an orthonormal null-space
// basis. For dim(t) <= 2 the coefficients are gridded with `density` points
// per axis over the bounding box of the region's vertices (the box is widened
// to [-R, R], R = 1 + 10 (1 + ||b||_inf) / sigma_min(A), along unbounded
// directions). Above that, `density` points are placed by shooting rays from
// an interior center along Halton directions, with radii stretched by
// u^(1/dim) so the fill is not concentrated at the center. Points within
// 1e-12 of the orthant are clamped onto it.
//
// Throws InputError for density < 2, InfeasibleError when Ax = b has no
// solution, EmptyRegionError when no point with x >= 0 is found.
SampleCloud SampleFeasible(const MoqpInstance& inst, std::size_t density,
                           const SamplingOptions& options = {});

}  // namespace moqp

#endif  // MOQP_SAMPLING_HPP_
