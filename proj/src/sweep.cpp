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

#include "moqp/sweep.hpp"

#include "moqp/errors.hpp"
#include "moqp/lifting.hpp"
#include "moqp/parallel.hpp"

namespace moqp {

SolveSummary Summarize(const SolveResult& r) {
  return {r.x,          r.big_x,           r.objective,
          r.rank1_gap,  r.status,          r.iterations,
          r.primal_residual, r.dual_residual, r.exact};
}

SweepRecord SolveOne(const MoqpInstance& inst, const WeightVector& w,
                     const SolverConfig& cfg) {
  SweepRecord rec;
  rec.weight = w;
  try {
    const SolveResult r = Solve(BuildLifted(inst, w), cfg);
    rec.result = Summarize(r);
    rec.verdict = Classify(r, w);
    rec.per_objective = EvaluateObjectives(inst, r.x);
  } catch (const Error& e) {
    rec.result = SolveSummary{};
    rec.verdict = {VerdictKind::kUnverified, std::string(ToString(e.kind()))};
    rec.error = std::string(ToString(e.kind())) + ": " + e.what();
  }
  return rec;
}

std::vector<SweepRecord> Sweep(const MoqpInstance& inst,
                               const std::vector<WeightVector>& weights,
                               const SolverConfig& cfg) {
  cfg.Validate();
  std::vector<SweepRecord> out(weights.size());
  MOQP_OMP(parallel for schedule(dynamic, 1))
  for (std::size_t k = 0; k < weights.size(); ++k) {
    out[k] = SolveOne(inst, weights[k], cfg);
  }
  return out;
}

std::vector<SweepRecord> SweepSerial(const MoqpInstance& inst,
                                     const std::vector<WeightVector>& weights,
                                     const SolverConfig& cfg) {
  cfg.Validate();
  std::vector<SweepRecord> out;
  out.reserve(weights.size());
  for (const WeightVector& w : weights) out.push_back(SolveOne(inst, w, cfg));
  return out;
}

std::vector<std::size_t> FrontierIndices(
    const std::vector<SweepRecord>& records) {
  SampleCloud cloud;
  std::vector<std::size_t> source;
  for (std::size_t k = 0; k < records.size(); ++k) {
    if (records[k].error || !records[k].result.exact) continue;
    cloud.points.push_back(records[k].result.x);
    cloud.objective_values.push_back(records[k].per_objective);
    source.push_back(k);
  }
  std::vector<std::size_t> out;
  for (std::size_t i : ParetoFilter(cloud, ParetoMode::kPareto)) {
    out.push_back(source[i]);
  }
  return out;
}

}  // namespace moqp
