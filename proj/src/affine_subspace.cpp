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

#include "moqp/affine_subspace.hpp"

#include <cmath>

#include "moqp/spectral.hpp"

namespace moqp {

Vector AffineSubspace::Point(std::span<const double> coeffs) const {
  Vector x = particular;
  for (std::size_t k = 0; k < null_basis.cols(); ++k) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] += null_basis(i, k) * coeffs[k];
    }
  }
  return x;
}

AffineSubspace ParametrizeAffine(const Matrix& a, std::span<const double> b,
                                 double rank_tol) {
  const std::size_t n = a.cols();
  AffineSubspace out;
  out.particular.assign(n, 0.0);
  if (a.rows() == 0) {
    out.null_basis = Matrix::Identity(n);
    return out;
  }

  const SymMatrix gram = SymMatrix::Generate(n, [&](std::size_t i, std::size_t j) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) s += a(r, i) * a(r, j);
    return s;
  });
  const SpectralDecomp eig = SymEig(gram);
  const double top = std::max(eig.eigenvalues.back(), 0.0);
  const double cutoff = rank_tol * top;

  const Vector atb = a.MultiplyTransposed(b);
  std::vector<std::size_t> null_cols;
  double sigma_min = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ev = eig.eigenvalues[k];
    if (ev <= cutoff || ev <= 0.0) {
      null_cols.push_back(k);
      continue;
    }
    if (sigma_min == 0.0) sigma_min = std::sqrt(ev);
    double proj = 0.0;
    for (std::size_t i = 0; i < n; ++i) proj += eig.eigenvectors(i, k) * atb[i];
    for (std::size_t i = 0; i < n; ++i) {
      out.particular[i] += eig.eigenvectors(i, k) * proj / ev;
    }
  }
  out.sigma_min = sigma_min;
  out.null_basis = Matrix(n, null_cols.size());
  for (std::size_t c = 0; c < null_cols.size(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      out.null_basis(i, c) = eig.eigenvectors(i, null_cols[c]);
    }
  }
  Vector r = a.Multiply(out.particular);
  for (std::size_t j = 0; j < r.size(); ++j) r[j] -= b[j];
  out.residual = Norm2(r);
  return out;
}

}  // namespace moqp
