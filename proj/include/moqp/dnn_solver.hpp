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

#ifndef MOQP_DNN_SOLVER_HPP_
#define MOQP_DNN_SOLVER_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "moqp/lifting.hpp"
#include "moqp/problem.hpp"

namespace moqp {

struct SolverConfig {
  double rho = 1.0;
  double eps_abs = 1e-8;
  double eps_rel = 1e-7;
  std::size_t max_iter = 20000;
  bool adaptive_rho = true;
  double rank1_tol = 1e-5;
  // Residual balancing: rescale rho by this factor when one residual exceeds
  // the other by adapt_ratio, at most once every adapt_interval iterations.
  double adapt_factor = 2.0;
  double adapt_ratio = 10.0;
  std::size_t adapt_interval = 50;
  // Iterate Frobenius norm beyond which the run is declared diverged.
  double divergence_norm = 1e12;
  // Project block 2 onto the face {Y psd : Y (-b_j, a_j) = 0} that every
  // feasible Y lies on, instead of the whole PSD cone. Same feasible set; it
  // keeps the dual iterates bounded.
  bool face_reduction = true;
  // Anderson acceleration of the ADMM fixed-point map: number of stored
  // differences (0 turns it off), Tikhonov shift relative to the trace of the
  // least-squares Gram matrix, and the factor by which an extrapolated point
  // must shrink the fixed-point residual to be accepted.
  std::size_t anderson_memory = 10;
  double anderson_regularization = 1e-6;
  double anderson_safeguard = 0.99;
  // Keep max(primal, dual) residual per iteration in SolveResult.
  bool record_history = false;

  // Throws InputError when a field is out of range.
  void Validate() const;
};

enum class SolveStatus { kConverged, kMaxIter, kDiverged };

const char* ToString(SolveStatus status);
SolveStatus SolveStatusFromString(const std::string& s);

struct SolveResult {
  SymMatrix y;  // nonnegative block on convergence, consensus iterate otherwise
  Vector x;
  SymMatrix big_x;
  double objective = 0.0;  // C . Y
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double tolerance = 0.0;  // primal threshold at the last iteration
  double dual_tolerance = 0.0;
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::kMaxIter;
  double rank1_gap = 0.0;
  bool exact = false;
  double final_rho = 0.0;
  std::size_t accelerated_steps = 0;  // accepted Anderson extrapolations
  std::vector<double> residual_history;
};

// Minimizes C . Y over {trace(B_k Y) = beta_k} n PSD n nonnegative by
// consensus ADMM on three copies of Y:
//   Y1 = P_affine(W - U1 - C / rho)   (prox of the linear objective)
//   Y2 = P_psd(W - U2)                (on the minimal face, see face_reduction)
//   Y3 = P_nonneg(W - U3)
//   W  = mean(Y_i + U_i),  U_i += Y_i - W
// Stops when max_i ||Y_i - W||_F is below eps_abs (1 + n) + eps_rel times the
// largest primal iterate norm and rho sqrt(3) ||W - W_prev||_F is below
// eps_abs (1 + n) + eps_rel max(||C||_F, rho ||U_i||_F). The iteration map on
// (W, U1, U2, U3) is accelerated by safeguarded Anderson mixing unless
// anderson_memory is 0. Deterministic.
SolveResult Solve(const LiftedProblem& lp, const SolverConfig& cfg = {});

// PSD and entry-wise nonnegative up to tol.
bool IsDnn(const SymMatrix& s, double tol);

// True iff result.objective <= u(F(x)) + 1e-6 (1 + |u|) for every probe.
// Probes must be feasible within 1e-8 (InputError otherwise).
bool CertifyLowerBound(const SolveResult& result, const MoqpInstance& inst,
                       const WeightVector& w,
                       const std::vector<Vector>& probes);

}  // namespace moqp

#endif  // MOQP_DNN_SOLVER_HPP_
