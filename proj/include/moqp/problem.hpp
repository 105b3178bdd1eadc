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

#ifndef MOQP_PROBLEM_HPP_
#define MOQP_PROBLEM_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "moqp/sym_matrix.hpp"

namespace moqp {

// One off-diagonal pair (i, j), i < j, whose input values disagreed.
struct AsymmetryNote {
  std::size_t objective = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  double upper = 0.0;  // input (row, col)
  double lower = 0.0;  // input (col, row)
};

// Multi-objective QP  min F_i(x) = x^T Q_i x + 2 c_i^T x  s.t.  Ax = b, x >= 0.
class MoqpInstance {
 public:
  MoqpInstance() = default;
  // Validates dimensions, finiteness and the no-zero-row rule. Q matrices are
  // taken as already symmetrized; asymmetry notes come from the loader.
  MoqpInstance(std::vector<SymMatrix> q, std::vector<Vector> c, Matrix a,
               Vector b, std::string name = {},
               std::vector<std::string> objective_labels = {},
               std::vector<AsymmetryNote> asymmetry = {},
               std::string provenance = {});

  std::size_t n() const { return n_; }
  std::size_t m() const { return a_.rows(); }
  std::size_t p() const { return q_.size(); }

  const std::vector<SymMatrix>& q() const { return q_; }
  const std::vector<Vector>& c() const { return c_; }
  const SymMatrix& q(std::size_t i) const { return q_[i]; }
  const Vector& c(std::size_t i) const { return c_[i]; }
  const Matrix& a() const { return a_; }
  const Vector& b() const { return b_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& objective_labels() const {
    return objective_labels_;
  }
  const std::string& provenance() const { return provenance_; }
  const std::vector<AsymmetryNote>& asymmetry() const { return asymmetry_; }
  // Human-readable warnings (currently: asymmetric input entries).
  std::vector<std::string> Warnings() const;

  // Data equality (Q, c, A, b); metadata and notes are ignored.
  bool SameData(const MoqpInstance& other) const;

 private:
  std::size_t n_ = 0;
  std::vector<SymMatrix> q_;
  std::vector<Vector> c_;
  Matrix a_;
  Vector b_;
  std::string name_;
  std::vector<std::string> objective_labels_;
  std::vector<AsymmetryNote> asymmetry_;
  std::string provenance_;
};

// A point of the probability simplex.
class WeightVector {
 public:
  static constexpr double kSumTolerance = 1e-12;
  // |sum - 1| up to this is renormalized (with a warning); beyond, rejected.
  static constexpr double kRenormalizeTolerance = 1e-3;

  WeightVector() = default;
  // Validates nonnegativity and the simplex sum; renormalizes small misses.
  explicit WeightVector(Vector lambda);
  // Scales arbitrary nonnegative, nonzero values onto the simplex.
  static WeightVector Normalized(Vector values);
  static WeightVector Unit(std::size_t p, std::size_t i);

  std::size_t size() const { return lambda_.size(); }
  double operator[](std::size_t i) const { return lambda_[i]; }
  const Vector& values() const { return lambda_; }
  bool AllPositive() const;
  const std::optional<std::string>& warning() const { return warning_; }

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.lambda_ == b.lambda_;
  }

 private:
  Vector lambda_;
  std::optional<std::string> warning_;
};

// Q_lambda = sum lambda_i Q_i, c_lambda = sum lambda_i c_i.
struct AggregatedQp {
  SymMatrix q;
  Vector c;

  // x^T Q x + 2 c^T x
  double Evaluate(std::span<const double> x) const;
};

AggregatedQp Aggregate(const MoqpInstance& inst, const WeightVector& w);

// (F_1(x), ..., F_p(x))
Vector EvaluateObjectives(const MoqpInstance& inst, std::span<const double> x);

// u(F(x)) = sum lambda_i F_i(x)
double WeightedObjective(const MoqpInstance& inst, const WeightVector& w,
                         std::span<const double> x);

// Default scale-aware tolerance 1e-9 (1 + ||Q||_F).
double DefaultConvexityTolerance(const SymMatrix& q);
bool IsConvex(const SymMatrix& q, double tol);
bool IsConvex(const SymMatrix& q);

struct FeasibilityResidual {
  double equality = 0.0;  // ||Ax - b||_inf
  double negativity = 0.0;  // max(0, -min_i x_i)
};

FeasibilityResidual ComputeFeasibilityResidual(const MoqpInstance& inst,
                                               std::span<const double> x);

}  // namespace moqp

#endif  // MOQP_PROBLEM_HPP_
