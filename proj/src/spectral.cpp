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

#include "moqp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "moqp/errors.hpp"

namespace moqp {

namespace {

double OffDiagonalNorm(const Vector& a, std::size_t d) {
  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) s += 2.0 * a[i * d + j] * a[i * d + j];
  }
  return std::sqrt(s);
}

}  // namespace

SymMatrix SpectralDecomp::Reconstruct() const {
  return ReconstructMapped([](double w) { return w; });
}

SpectralDecomp SymEig(const SymMatrix& s, const JacobiOptions& options) {
  if (!s.AllFinite()) throw InputError("sym_eig: non-finite matrix entry");
  const std::size_t d = s.order();
  Vector a(s.data().begin(), s.data().end());
  Matrix v = Matrix::Identity(d);

  const double norm = s.FrobeniusNorm();
  const double target = options.off_diagonal_tol * norm;
  const std::size_t max_sweeps = std::max<std::size_t>(1, options.sweep_factor * d * d);

  std::size_t sweep = 0;
  while (norm > 0.0 && OffDiagonalNorm(a, d) > target) {
    if (sweep++ >= max_sweeps) {
      throw ConvergenceError("sym_eig: Jacobi sweep cap " +
                             std::to_string(max_sweeps) + " exceeded");
    }
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const double apq = a[p * d + q];
        if (apq == 0.0) continue;
        const double app = a[p * d + p];
        const double aqq = a[q * d + q];
        const double theta = (aqq - app) / (2.0 * apq);
        // Smaller root of t^2 + 2 theta t - 1 = 0.
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = std::copysign(1.0, theta) /
              (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;

        for (std::size_t k = 0; k < d; ++k) {
          const double akp = a[k * d + p];
          const double akq = a[k * d + q];
          a[k * d + p] = c * akp - sn * akq;
          a[k * d + q] = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < d; ++k) {
          const double apk = a[p * d + k];
          const double aqk = a[q * d + k];
          a[p * d + k] = c * apk - sn * aqk;
          a[q * d + k] = sn * apk + c * aqk;
        }
        a[p * d + q] = 0.0;
        a[q * d + p] = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i * d + i] < a[j * d + j];
  });

  SpectralDecomp out;
  out.eigenvalues.resize(d);
  out.eigenvectors = Matrix(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    out.eigenvalues[k] = a[order[k] * d + order[k]];
    for (std::size_t i = 0; i < d; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

double MinEigenvalue(const SymMatrix& s) {
  if (s.empty()) return 0.0;
  return SymEig(s).eigenvalues.front();
}

}  // namespace moqp
