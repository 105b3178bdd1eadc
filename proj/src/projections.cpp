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

#include "moqp/projections.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "moqp/errors.hpp"
#include "moqp/spectral.hpp"

namespace moqp {

SymMatrix ProjectPsd(const SymMatrix& s) {
  const SpectralDecomp eig = SymEig(s);
  if (eig.eigenvalues.empty() || eig.eigenvalues.front() >= 0.0) return s;
  return eig.ReconstructMapped([](double w) { return w > 0.0 ? w : 0.0; });
}

SymMatrix ProjectPsdFace(const SymMatrix& s, const Matrix& basis) {
  const std::size_t d = s.order();
  const std::size_t k = basis.cols();
  if (basis.rows() != d) {
    throw InputError("project_psd_face: basis has " +
                     std::to_string(basis.rows()) + " rows, matrix order is " +
                     std::to_string(d));
  }
  // T = S P, then P^T S P.
  Matrix t(d, k);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double sum = 0.0;
      for (std::size_t l = 0; l < d; ++l) sum += s(i, l) * basis(l, j);
      t(i, j) = sum;
    }
  }
  const SymMatrix z = ProjectPsd(
      SymMatrix::Generate(k, [&](std::size_t a, std::size_t b) {
        double sum = 0.0;
        for (std::size_t l = 0; l < d; ++l) sum += basis(l, a) * t(l, b);
        return sum;
      }));
  Matrix pz(d, k);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double sum = 0.0;
      for (std::size_t l = 0; l < k; ++l) sum += basis(i, l) * z(l, j);
      pz(i, j) = sum;
    }
  }
  return SymMatrix::Generate(d, [&](std::size_t i, std::size_t j) {
    double sum = 0.0;
    for (std::size_t l = 0; l < k; ++l) sum += pz(i, l) * basis(j, l);
    return sum;
  });
}

SymMatrix ProjectNonneg(const SymMatrix& s) {
  return SymMatrix::Generate(s.order(), [&](std::size_t i, std::size_t j) {
    return std::max(s(i, j), 0.0);
  });
}

AffineConstraintSet::AffineConstraintSet(
    std::vector<AffineConstraint> constraints)
    : constraints_(std::move(constraints)) {
  const std::size_t k = constraints_.size();
  if (k == 0) return;
  order_ = constraints_.front().matrix.order();
  for (std::size_t i = 0; i < k; ++i) {
    if (constraints_[i].matrix.order() != order_) {
      throw InputError("affine constraint " + std::to_string(i) +
                       " has order " +
                       std::to_string(constraints_[i].matrix.order()) +
                       ", expected " + std::to_string(order_));
    }
  }

  Vector gram(k * k);
  double trace = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double g =
          FrobeniusDot(constraints_[i].matrix, constraints_[j].matrix);
      gram[i * k + j] = g;
      gram[j * k + i] = g;
    }
    trace += gram[i * k + i];
  }
  const double shift = kGramRegularization * trace / static_cast<double>(k);

  cholesky_.assign(k * k, 0.0);
  std::vector<std::size_t> collapsed;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = gram[i * k + j] + (i == j ? shift : 0.0);
      for (std::size_t l = 0; l < j; ++l) {
        sum -= cholesky_[i * k + l] * cholesky_[j * k + l];
      }
      if (i == j) {
        if (!(sum > kPivotTolerance * gram[i * k + i])) {
          collapsed.push_back(i);
          sum = std::max(sum, shift > 0.0 ? shift : 1.0);
        }
        cholesky_[i * k + i] = std::sqrt(sum);
      } else {
        cholesky_[i * k + j] = sum / cholesky_[j * k + j];
      }
    }
  }
  if (!collapsed.empty()) {
    std::string list;
    for (std::size_t idx : collapsed) {
      if (!list.empty()) list += ",";
      list += std::to_string(idx);
    }
    throw RankDeficiencyError(
        "affine constraints are linearly dependent (Gram pivot collapsed at "
        "constraint(s) " + list + ")",
        std::move(collapsed));
  }
}

Vector AffineConstraintSet::Residuals(const SymMatrix& y) const {
  Vector r(constraints_.size());
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    r[i] = FrobeniusDot(constraints_[i].matrix, y) - constraints_[i].rhs;
  }
  return r;
}

double AffineConstraintSet::MaxScaledResidual(const SymMatrix& y) const {
  double m = 0.0;
  const Vector r = Residuals(y);
  for (std::size_t i = 0; i < r.size(); ++i) {
    m = std::max(m, std::abs(r[i]) / (1.0 + std::abs(constraints_[i].rhs)));
  }
  return m;
}

Vector AffineConstraintSet::SolveGram(std::span<const double> rhs) const {
  const std::size_t k = constraints_.size();
  Vector z(rhs.begin(), rhs.end());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < i; ++l) z[i] -= cholesky_[i * k + l] * z[l];
    z[i] /= cholesky_[i * k + i];
  }
  for (std::size_t i = k; i-- > 0;) {
    for (std::size_t l = i + 1; l < k; ++l) z[i] -= cholesky_[l * k + i] * z[l];
    z[i] /= cholesky_[i * k + i];
  }
  return z;
}

SymMatrix ProjectAffine(const SymMatrix& v, const AffineConstraintSet& cs) {
  if (cs.size() == 0) return v;
  if (v.order() != cs.order()) {
    throw InputError("project_affine: matrix order " +
                     std::to_string(v.order()) + " does not match constraint order " +
                     std::to_string(cs.order()));
  }
  const Vector mu = cs.SolveGram(cs.Residuals(v));
  SymMatrix y = v;
  for (std::size_t i = 0; i < cs.size(); ++i) y.AddScaled(-mu[i], cs[i].matrix);
  return y;
}

}  // namespace moqp
