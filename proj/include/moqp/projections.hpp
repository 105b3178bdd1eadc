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

#ifndef MOQP_PROJECTIONS_HPP_
#define MOQP_PROJECTIONS_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "moqp/sym_matrix.hpp"

namespace moqp {

// Frobenius-nearest positive semidefinite matrix: eigenvalues clamped at 0.
SymMatrix ProjectPsd(const SymMatrix& s);

// Frobenius-nearest point of the face {P Z P^T : Z psd} of the PSD cone, for
// P (order x k) with orthonormal columns: P ProjectPsd(P^T S P) P^T.
SymMatrix ProjectPsdFace(const SymMatrix& s, const Matrix& basis);

// Entry-wise max(S, 0).
SymMatrix ProjectNonneg(const SymMatrix& s);

struct AffineConstraint {
  SymMatrix matrix;  // B_k
  double rhs = 0.0;  // beta_k
};

// The affine set {Y : trace(B_k Y) = beta_k for all k} together with a
// Cholesky factor of its Gram matrix G_kl = B_k . B_l. The factor is computed
// once at construction; projections are then two triangular solves.
class AffineConstraintSet {
 public:
  // Relative diagonal shift added to G before factoring.
  static constexpr double kGramRegularization = 1e-12;
  // A pivot below this fraction of the original diagonal entry marks the
  // constraint as linearly dependent on the earlier ones.
  static constexpr double kPivotTolerance = 1e-10;

  AffineConstraintSet() = default;
  // Throws InputError on mixed orders and RankDeficiencyError when the Gram
  // system is singular beyond regularization.
  explicit AffineConstraintSet(std::vector<AffineConstraint> constraints);

  std::size_t size() const { return constraints_.size(); }
  // Order of the constrained matrices (0 when empty).
  std::size_t order() const { return order_; }
  const AffineConstraint& operator[](std::size_t k) const {
    return constraints_[k];
  }
  const std::vector<AffineConstraint>& constraints() const {
    return constraints_;
  }

  // trace(B_k Y) - beta_k for every k.
  Vector Residuals(const SymMatrix& y) const;
  // max_k |trace(B_k Y) - beta_k| / (1 + |beta_k|)
  double MaxScaledResidual(const SymMatrix& y) const;

  // Solves the regularized Gram system G mu = rhs.
  Vector SolveGram(std::span<const double> rhs) const;

 private:
  std::vector<AffineConstraint> constraints_;
  std::size_t order_ = 0;
  Vector cholesky_;  // lower triangle, row-major k x k
};

// Frobenius-nearest point of the affine set:
// Y = V - sum_k mu_k B_k with G mu = trace(B_k V) - beta_k.
SymMatrix ProjectAffine(const SymMatrix& v, const AffineConstraintSet& cs);

}  // namespace moqp

#endif  // MOQP_PROJECTIONS_HPP_
