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

#ifndef MOQP_SPECTRAL_HPP_
#define MOQP_SPECTRAL_HPP_

#include "moqp/sym_matrix.hpp"

namespace moqp {

struct SpectralDecomp {
  Vector eigenvalues;  // ascending
  Matrix eigenvectors;  // column k pairs with eigenvalues[k]

  // V diag(w) V^T
  SymMatrix Reconstruct() const;
  // V diag(f(w)) V^T
  template <class F>
  SymMatrix ReconstructMapped(F&& f) const {
    const std::size_t d = eigenvalues.size();
    Vector mapped(d);
    for (std::size_t k = 0; k < d; ++k) mapped[k] = f(eigenvalues[k]);
    return SymMatrix::Generate(d, [&](std::size_t i, std::size_t j) {
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        if (mapped[k] != 0.0) {
          s += eigenvectors(i, k) * mapped[k] * eigenvectors(j, k);
        }
      }
      return s;
    });
  }
};

struct JacobiOptions {
  // Stop once the off-diagonal Frobenius norm is below
  // off_diagonal_tol * ||S||_F.
  double off_diagonal_tol = 1e-12;
  // Sweep cap is sweep_factor * d^2.
  std::size_t sweep_factor = 100;
};

// Cyclic Jacobi eigendecomposition. Throws InputError on non-finite entries
// and ConvergenceError when the sweep cap is hit.
SpectralDecomp SymEig(const SymMatrix& s, const JacobiOptions& options = {});

double MinEigenvalue(const SymMatrix& s);

}  // namespace moqp

#endif  // MOQP_SPECTRAL_HPP_
