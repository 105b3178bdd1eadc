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

#include "moqp/lifting.hpp"

#include <cmath>
#include <sstream>

#include "moqp/errors.hpp"

namespace moqp {

LiftedProblem BuildLifted(const AggregatedQp& agg, const Matrix& a,
                          std::span<const double> b) {
  const std::size_t n = agg.q.order();
  const std::size_t m = a.rows();
  if (agg.c.size() != n) {
    throw InputError("build_lifted: c has length " + std::to_string(agg.c.size()) +
                     ", expected " + std::to_string(n));
  }
  if (b.size() != m || (m > 0 && a.cols() != n)) {
    throw InputError("build_lifted: A/b dimensions do not match n=" +
                     std::to_string(n));
  }
  const std::size_t d = n + 1;

  LiftedProblem lp;
  lp.n = n;
  lp.m = m;
  lp.objective = SymMatrix::Generate(d, [&](std::size_t i, std::size_t j) {
    if (i == 0) return j == 0 ? 0.0 : agg.c[j - 1];
    return agg.q(i - 1, j - 1);
  });

  std::vector<AffineConstraint> cons;
  cons.reserve(2 * m + 1);
  SymMatrix corner(d);
  corner.Set(0, 0, 1.0);
  cons.push_back({std::move(corner), 1.0});

  Vector e0(d, 0.0);
  e0[0] = 1.0;
  std::vector<Vector> lifted_rows;
  for (std::size_t j = 0; j < m; ++j) {
    Vector row(d, 0.0);
    for (std::size_t k = 0; k < n; ++k) row[k + 1] = a(j, k);
    cons.push_back({SymMatrix::SymmetricOuter(e0, row), b[j]});
    lifted_rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < m; ++j) {
    cons.push_back({SymMatrix::Outer(lifted_rows[j]), b[j] * b[j]});
  }
  lp.constraints = AffineConstraintSet(std::move(cons));
  return lp;
}

LiftedProblem BuildLifted(const MoqpInstance& inst, const WeightVector& w) {
  LiftedProblem lp = BuildLifted(Aggregate(inst, w), inst.a(), inst.b());
  lp.weights = w;
  return lp;
}

SymMatrix LiftPoint(std::span<const double> x) {
  Vector u(x.size() + 1);
  u[0] = 1.0;
  std::copy(x.begin(), x.end(), u.begin() + 1);
  return SymMatrix::Outer(u);
}

LiftedPair Extract(const SymMatrix& y) {
  if (y.order() < 2) throw ExtractionError("extract: lifted matrix too small");
  if (!(std::abs(y(0, 0) - 1.0) <= 1e-6)) {
    std::ostringstream os;
    os << "extract: corner entry " << y(0, 0) << " is not 1";
    throw ExtractionError(os.str());
  }
  const std::size_t n = y.order() - 1;
  LiftedPair out;
  out.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.x[i] = y(i + 1, 0);
  out.big_x = SymMatrix::Generate(
      n, [&](std::size_t i, std::size_t j) { return y(i + 1, j + 1); });
  return out;
}

double Rank1Gap(std::span<const double> x, const SymMatrix& big_x) {
  if (x.size() != big_x.order()) {
    throw InputError("rank1_gap: x and X dimensions differ");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double d = big_x(i, j) - x[i] * x[j];
      s += d * d;
    }
  }
  return std::sqrt(s) / (1.0 + big_x.FrobeniusNorm());
}

}  // namespace moqp
