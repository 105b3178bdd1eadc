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

#include "moqp/weights.hpp"

#include <limits>
#include <string>

#include "moqp/errors.hpp"

namespace moqp {

double WeightSampler::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

WeightVector WeightSampler::Draw(std::size_t p) {
  if (p == 0) throw InputError("weights: p must be >= 1");
  if (p == 1) return WeightVector(Vector{1.0});
  Vector lambda(p, 0.0);
  while (lambda[p - 1] == 0.0) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < p; ++i) {
      lambda[i] = Uniform();
      s += lambda[i];
    }
    if (s < 1.0) lambda[p - 1] = 1.0 - s;
  }
  return WeightVector(std::move(lambda));
}

WeightVector GenWeightsPaper(std::size_t p, std::uint64_t seed) {
  return WeightSampler(seed).Draw(p);
}

std::uint64_t SimplexLatticeCount(std::size_t p, std::size_t k) {
  if (p == 0) return 0;
  // C(k + r, r) with r = p - 1, built incrementally: C(k+i, i) = C(k+i-1, i-1) (k+i) / i.
  const std::uint64_t r = p - 1;
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    const std::uint64_t num = k + i;
    if (c > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    c = c * num / i;
  }
  return c;
}

std::vector<WeightVector> GenWeightsGrid(std::size_t p, std::size_t k) {
  if (p == 0) throw InputError("weights: p must be >= 1");
  if (k == 0) throw InputError("weights: grid resolution k must be >= 1");
  const std::uint64_t count = SimplexLatticeCount(p, k);
  if (count > kMaxGridPoints) {
    throw SizeError("weights: simplex lattice with p=" + std::to_string(p) +
                    ", k=" + std::to_string(k) + " has more than " +
                    std::to_string(kMaxGridPoints) + " points");
  }
  std::vector<WeightVector> out;
  out.reserve(count);
  std::vector<std::size_t> idx(p, 0);
  const double inv = 1.0 / static_cast<double>(k);
  // Enumerate compositions of k into p parts, lexicographically.
  auto emit = [&]() {
    Vector lambda(p);
    for (std::size_t j = 0; j < p; ++j) lambda[j] = static_cast<double>(idx[j]) * inv;
    out.push_back(WeightVector(std::move(lambda)));
  };
  auto recurse = [&](auto&& self, std::size_t pos, std::size_t remaining) -> void {
    if (pos + 1 == p) {
      idx[pos] = remaining;
      emit();
      return;
    }
    for (std::size_t v = 0; v <= remaining; ++v) {
      idx[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  recurse(recurse, 0, k);
  return out;
}

}  // namespace moqp
