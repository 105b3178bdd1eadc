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

#ifndef MOQP_SWEEP_HPP_
#define MOQP_SWEEP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "moqp/dnn_solver.hpp"
#include "moqp/pareto.hpp"
#include "moqp/problem.hpp"

namespace moqp {

struct SolveSummary {
  Vector x;
  SymMatrix big_x;
  double objective = 0.0;
  double rank1_gap = 0.0;
  SolveStatus status = SolveStatus::kMaxIter;
  std::size_t iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  bool exact = false;

  friend bool operator==(const SolveSummary&, const SolveSummary&) = default;
};

SolveSummary Summarize(const SolveResult& r);

struct SweepRecord {
  WeightVector weight;
  SolveSummary result;
  ParetoVerdict verdict;
  Vector per_objective;  // F_i(x)
  // Set when the solve threw; the other fields are then defaults.
  std::optional<std::string> error;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

SweepRecord SolveOne(const MoqpInstance& inst, const WeightVector& w,
                     const SolverConfig& cfg);

// One record per weight, in input order. Solves run in parallel (OpenMP);
// failures are captured in SweepRecord::error and never abort the sweep.
std::vector<SweepRecord> Sweep(const MoqpInstance& inst,
                               const std::vector<WeightVector>& weights,
                               const SolverConfig& cfg);
// Serial reference for Sweep.
std::vector<SweepRecord> SweepSerial(const MoqpInstance& inst,
                                     const std::vector<WeightVector>& weights,
                                     const SolverConfig& cfg);

// Indices of exact records whose objective vectors are not dominated by any
// other exact record.
std::vector<std::size_t> FrontierIndices(const std::vector<SweepRecord>& records);

}  // namespace moqp

#endif  // MOQP_SWEEP_HPP_
