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

#ifndef MOQP_AFFINE_SUBSPACE_HPP_
#define MOQP_AFFINE_SUBSPACE_HPP_

#include "moqp/sym_matrix.hpp"

namespace moqp {

// {x : Ax = b} written as particular + null_basis * t. Computed from the
// spectral decomposition of A^T A, which is plenty for the small dense systems
// handled here.
struct AffineSubspace {
  Vector particular;  // minimum-norm least-squares solution
  Matrix null_basis;  // n x k, orthonormal columns
  double sigma_min = 0.0;  // smallest nonzero singular value of A (0 if m = 0)
  double residual = 0.0;  // ||A particular - b||_2

  std::size_t dimension() const { return null_basis.cols(); }
  Vector Point(std::span<const double> coeffs) const;
};

// Directions where the eigenvalue of A^T A is below rank_tol times the largest
// one (sigma < 1e-6 sigma_max at the default) count as null space.
AffineSubspace ParametrizeAffine(const Matrix& a, std::span<const double> b,
                                 double rank_tol = 1e-12);

}  // namespace moqp

#endif  // MOQP_AFFINE_SUBSPACE_HPP_
