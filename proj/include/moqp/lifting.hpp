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

#ifndef MOQP_LIFTING_HPP_
#define MOQP_LIFTING_HPP_

#include <optional>

#include "moqp/problem.hpp"
#include "moqp/projections.hpp"

namespace moqp {

// Lifted conic problem over Y = [[1, x^T], [x, X]] of order 1 + n:
//   min C . Y  s.t.  trace(B_k Y) = beta_k,  Y psd,  Y >= 0.
// Constraint layout (2m + 1 entries):
//   0         Y_00 = 1
//   1..m      a_j^T x = b_j              B = (e0 a_j^T + a_j e0^T) / 2
//   m+1..2m   a_j^T X a_j = b_j^2        B = a_j a_j^T
// with a_j embedded as (0, a_j).
struct LiftedProblem {
  std::size_t n = 0;
  std::size_t m = 0;
  SymMatrix objective;  // C = [[0, c^T], [c, Q]]
  AffineConstraintSet constraints;
  std::optional<WeightVector> weights;  // scalarization it came from, if any

  std::size_t order() const { return n + 1; }
};

LiftedProblem BuildLifted(const AggregatedQp& agg, const Matrix& a,
                          std::span<const double> b);
LiftedProblem BuildLifted(const MoqpInstance& inst, const WeightVector& w);

// [[1, x^T], [x, x x^T]]
SymMatrix LiftPoint(std::span<const double> x);

struct LiftedPair {
  Vector x;
  SymMatrix big_x;
};

// Splits Y into (x, X). Throws ExtractionError when |Y_00 - 1| > 1e-6.
LiftedPair Extract(const SymMatrix& y);

// ||X - x x^T||_F / (1 + ||X||_F)
double Rank1Gap(std::span<const double> x, const SymMatrix& big_x);

}  // namespace moqp

#endif  // MOQP_LIFTING_HPP_
