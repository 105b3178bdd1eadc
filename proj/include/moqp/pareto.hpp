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

#ifndef MOQP_PARETO_HPP_
#define MOQP_PARETO_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "moqp/dnn_solver.hpp"
#include "moqp/problem.hpp"

namespace moqp {

enum class Dominance {
  kNone,
  kWeak,    // u <= v everywhere, u < v somewhere, not everywhere
  kStrict,  // u < v everywhere
};

const char* ToString(Dominance d);

// How u relates to v when both are minimized.
Dominance Dominates(std::span<const double> u, std::span<const double> v);

enum class ParetoMode {
  kPareto,  // drop points dominated weakly or strictly
  kWeak,    // drop points dominated strictly
};

// Points with aligned objective vectors. Clouds built by SampleFeasible are
// feasible for their instance; hand-built clouds (for plain dominance
// experiments) need not carry an instance at all.
struct SampleCloud {
  std::vector<Vector> points;
  std::vector<Vector> objective_values;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

SampleCloud MakeCloud(const MoqpInstance& inst, std::vector<Vector> points);

// Indices (ascending) of survivors. Mutually non-dominated duplicates all
// survive. OpenMP-parallel over candidates; ParetoFilterSerial is the
// reference it is tested against.
std::vector<std::size_t> ParetoFilter(const SampleCloud& cloud, ParetoMode mode);
std::vector<std::size_t> ParetoFilterSerial(const SampleCloud& cloud,
                                            ParetoMode mode);

enum class VerdictKind { kParetoOptimal, kWeaklyParetoOptimal, kUnverified };

const char* ToString(VerdictKind kind);
VerdictKind VerdictKindFromString(const std::string& s);

struct ParetoVerdict {
  VerdictKind kind = VerdictKind::kUnverified;
  std::string basis;

  friend bool operator==(const ParetoVerdict&, const ParetoVerdict&) = default;
};

// A rank-1 exact solve certifies x as a minimizer of the weighted sum; that
// makes it Pareto optimal when every weight is positive and weakly Pareto
// optimal otherwise. Anything else stays unverified.
ParetoVerdict Classify(const SolveResult& result, const WeightVector& w);

struct BruteMinResult {
  std::size_t index = 0;
  Vector x;
  double value = 0.0;
};

// Minimizer of u(F(x)) over the cloud; ties go to the lowest index.
BruteMinResult BruteMin(const MoqpInstance& inst, const WeightVector& w,
                        const SampleCloud& cloud);
BruteMinResult BruteMinSerial(const MoqpInstance& inst, const WeightVector& w,
                              const SampleCloud& cloud);

}  // namespace moqp

#endif  // MOQP_PARETO_HPP_
