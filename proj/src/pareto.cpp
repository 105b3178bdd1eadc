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

#include "moqp/pareto.hpp"

#include <cstdio>
#include <limits>

#include "moqp/errors.hpp"
#include "moqp/parallel.hpp"

namespace moqp {

namespace {

bool Survives(const SampleCloud& cloud, std::size_t i, ParetoMode mode) {
  const Vector& vi = cloud.objective_values[i];
  for (std::size_t j = 0; j < cloud.size(); ++j) {
    if (j == i) continue;
    const Dominance d = Dominates(cloud.objective_values[j], vi);
    if (d == Dominance::kStrict) return false;
    if (d == Dominance::kWeak && mode == ParetoMode::kPareto) return false;
  }
  return true;
}

void CheckCloud(const SampleCloud& cloud) {
  if (cloud.points.size() != cloud.objective_values.size()) {
    throw InputError("sample cloud: points and objective values are not aligned");
  }
}

void CheckBruteMinInputs(const MoqpInstance& inst, const WeightVector& w,
                         const SampleCloud& cloud) {
  if (cloud.empty()) throw InputError("brute_min: empty cloud");
  CheckCloud(cloud);
  if (w.size() != inst.p() || cloud.objective_values.front().size() != inst.p()) {
    throw InputError("brute_min: weights/cloud do not match the instance's " +
                     std::to_string(inst.p()) + " objectives");
  }
}

// Strict "less" on (value, index) keeps ties on the lowest index.
bool Better(double value, std::size_t index, double best_value,
            std::size_t best_index) {
  return value < best_value || (value == best_value && index < best_index);
}

}  // namespace

const char* ToString(Dominance d) {
  switch (d) {
    case Dominance::kNone:
      return "none";
    case Dominance::kWeak:
      return "weakly";
    case Dominance::kStrict:
      return "strictly";
  }
  return "none";
}

Dominance Dominates(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw InputError("dominates: vectors have lengths " +
                     std::to_string(u.size()) + " and " +
                     std::to_string(v.size()));
  }
  bool all_strict = !u.empty();
  bool any_strict = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) return Dominance::kNone;
    if (u[i] < v[i]) {
      any_strict = true;
    } else {
      all_strict = false;
    }
  }
  if (all_strict) return Dominance::kStrict;
  return any_strict ? Dominance::kWeak : Dominance::kNone;
}

SampleCloud MakeCloud(const MoqpInstance& inst, std::vector<Vector> points) {
  SampleCloud cloud;
  cloud.objective_values.resize(points.size());
  MOQP_OMP(parallel for schedule(static))
  for (std::size_t k = 0; k < points.size(); ++k) {
    cloud.objective_values[k] = EvaluateObjectives(inst, points[k]);
  }
  cloud.points = std::move(points);
  return cloud;
}

std::vector<std::size_t> ParetoFilter(const SampleCloud& cloud,
                                      ParetoMode mode) {
  CheckCloud(cloud);
  std::vector<char> keep(cloud.size(), 0);
  MOQP_OMP(parallel for schedule(dynamic, 64))
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    keep[i] = Survives(cloud, i, mode) ? 1 : 0;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> ParetoFilterSerial(const SampleCloud& cloud,
                                            ParetoMode mode) {
  CheckCloud(cloud);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (Survives(cloud, i, mode)) out.push_back(i);
  }
  return out;
}

const char* ToString(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kParetoOptimal:
      return "pareto-optimal";
    case VerdictKind::kWeaklyParetoOptimal:
      return "weakly-pareto-optimal";
    case VerdictKind::kUnverified:
      return "unverified";
  }
  return "unverified";
}

VerdictKind VerdictKindFromString(const std::string& s) {
  if (s == "pareto-optimal") return VerdictKind::kParetoOptimal;
  if (s == "weakly-pareto-optimal") return VerdictKind::kWeaklyParetoOptimal;
  if (s == "unverified") return VerdictKind::kUnverified;
  throw InputError("unknown verdict '" + s + "'");
}

ParetoVerdict Classify(const SolveResult& result, const WeightVector& w) {
  char gap[32];
  std::snprintf(gap, sizeof gap, "%.3g", result.rank1_gap);
  if (!result.exact) {
    std::string why = result.status == SolveStatus::kConverged
                          ? std::string("rank-1 gap ") + gap +
                                " above tolerance; relaxation not certified tight"
                          : std::string("solver status ") + ToString(result.status);
    return {VerdictKind::kUnverified, why};
  }
  const std::string exact = std::string("rank-1 exact (gap ") + gap + ")";
  if (w.AllPositive()) {
    return {VerdictKind::kParetoOptimal, exact + "; all weights positive"};
  }
  return {VerdictKind::kWeaklyParetoOptimal,
          exact + "; some weights zero (nonnegative, nonzero)"};
}

BruteMinResult BruteMin(const MoqpInstance& inst, const WeightVector& w,
                        const SampleCloud& cloud) {
  CheckBruteMinInputs(inst, w, cloud);
  double best_value = std::numeric_limits<double>::infinity();
  std::size_t best_index = std::numeric_limits<std::size_t>::max();
  MOQP_OMP(parallel)
  {
    double local_value = std::numeric_limits<double>::infinity();
    std::size_t local_index = std::numeric_limits<std::size_t>::max();
    MOQP_OMP(for schedule(static) nowait)
    for (std::size_t k = 0; k < cloud.size(); ++k) {
      const double u = Dot(w.values(), cloud.objective_values[k]);
      if (Better(u, k, local_value, local_index)) {
        local_value = u;
        local_index = k;
      }
    }
    MOQP_OMP(critical(moqp_brute_min))
    {
      if (Better(local_value, local_index, best_value, best_index)) {
        best_value = local_value;
        best_index = local_index;
      }
    }
  }
  if (best_index >= cloud.size()) {
    // Every value was NaN.
    throw InputError("brute_min: no comparable objective values");
  }
  return {best_index, cloud.points[best_index], best_value};
}

BruteMinResult BruteMinSerial(const MoqpInstance& inst, const WeightVector& w,
                              const SampleCloud& cloud) {
  CheckBruteMinInputs(inst, w, cloud);
  double best_value = std::numeric_limits<double>::infinity();
  std::size_t best_index = std::numeric_limits<std::size_t>::max();
  for (std::size_t k = 0; k < cloud.size(); ++k) {
    const double u = Dot(w.values(), cloud.objective_values[k]);
    if (Better(u, k, best_value, best_index)) {
      best_value = u;
      best_index = k;
    }
  }
  if (best_index >= cloud.size()) {
    throw InputError("brute_min: no comparable objective values");
  }
  return {best_index, cloud.points[best_index], best_value};
}

}  // namespace moqp
