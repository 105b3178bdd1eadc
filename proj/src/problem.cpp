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

#include "moqp/problem.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "moqp/errors.hpp"
#include "moqp/spectral.hpp"

namespace moqp {

namespace {

void RequireFinite(std::span<const double> v, const std::string& where) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      throw InputError(where + "[" + std::to_string(i) + "] is not finite");
    }
  }
}

}  // namespace

MoqpInstance::MoqpInstance(std::vector<SymMatrix> q, std::vector<Vector> c,
                           Matrix a, Vector b, std::string name,
                           std::vector<std::string> objective_labels,
                           std::vector<AsymmetryNote> asymmetry,
                           std::string provenance)
    : q_(std::move(q)),
      c_(std::move(c)),
      a_(std::move(a)),
      b_(std::move(b)),
      name_(std::move(name)),
      objective_labels_(std::move(objective_labels)),
      asymmetry_(std::move(asymmetry)),
      provenance_(std::move(provenance)) {
  if (q_.empty()) throw InputError("Q: at least one objective is required");
  n_ = q_.front().order();
  if (n_ == 0) throw InputError("n: decision dimension must be >= 1");
  if (c_.size() != q_.size()) {
    throw InputError("c: expected " + std::to_string(q_.size()) +
                     " vectors, got " + std::to_string(c_.size()));
  }
  for (std::size_t i = 0; i < q_.size(); ++i) {
    const std::string qi = "Q[" + std::to_string(i) + "]";
    if (q_[i].order() != n_) {
      throw InputError(qi + ": order " + std::to_string(q_[i].order()) +
                       " does not match n=" + std::to_string(n_));
    }
    RequireFinite(q_[i].data(), qi);
    const std::string ci = "c[" + std::to_string(i) + "]";
    if (c_[i].size() != n_) {
      throw InputError(ci + ": length " + std::to_string(c_[i].size()) +
                       " does not match n=" + std::to_string(n_));
    }
    RequireFinite(c_[i], ci);
  }
  if (a_.rows() != b_.size()) {
    throw InputError("A/b: A has " + std::to_string(a_.rows()) +
                     " rows but b has " + std::to_string(b_.size()) +
                     " entries");
  }
  if (a_.rows() > 0 && a_.cols() != n_) {
    throw InputError("A: " + std::to_string(a_.cols()) +
                     " columns, expected n=" + std::to_string(n_));
  }
  RequireFinite(a_.data(), "A");
  RequireFinite(b_, "b");
  for (std::size_t j = 0; j < a_.rows(); ++j) {
    const auto row = a_.row(j);
    if (std::all_of(row.begin(), row.end(), [](double v) { return v == 0.0; })) {
      throw InputError("A[" + std::to_string(j) + "]: all-zero constraint row");
    }
  }
  if (!objective_labels_.empty() && objective_labels_.size() != q_.size()) {
    throw InputError("objective_labels: expected " + std::to_string(q_.size()) +
                     " labels, got " + std::to_string(objective_labels_.size()));
  }
}

std::vector<std::string> MoqpInstance::Warnings() const {
  std::vector<std::string> out;
  for (const AsymmetryNote& note : asymmetry_) {
    std::ostringstream os;
    os << "Q[" << note.objective << "] asymmetric at (" << note.row << ","
       << note.col << "): " << note.upper << " vs " << note.lower
       << "; symmetrized to " << 0.5 * (note.upper + note.lower);
    out.push_back(os.str());
  }
  return out;
}

bool MoqpInstance::SameData(const MoqpInstance& other) const {
  return q_ == other.q_ && c_ == other.c_ && b_ == other.b_ &&
         a_.rows() == other.a_.rows() &&
         (a_.rows() == 0 || a_ == other.a_);
}

WeightVector::WeightVector(Vector lambda) : lambda_(std::move(lambda)) {
  if (lambda_.empty()) throw InputError("weights: empty weight vector");
  double sum = 0.0;
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    if (!std::isfinite(lambda_[i]) || lambda_[i] < 0.0) {
      throw InputError("weights[" + std::to_string(i) +
                       "]: must be finite and nonnegative");
    }
    sum += lambda_[i];
  }
  const double miss = std::abs(sum - 1.0);
  if (miss <= kSumTolerance) return;
  if (miss > kRenormalizeTolerance) {
    std::ostringstream os;
    os << "weights: sum " << sum << " is not 1";
    throw InputError(os.str());
  }
  for (double& v : lambda_) v /= sum;
  std::ostringstream os;
  os << "weights summed to " << sum << "; renormalized";
  warning_ = os.str();
}

WeightVector WeightVector::Normalized(Vector values) {
  double sum = 0.0;
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InputError("weights: values must be finite and nonnegative");
    }
    sum += v;
  }
  if (sum <= 0.0) throw InputError("weights: all-zero weight vector");
  for (double& v : values) v /= sum;
  return WeightVector(std::move(values));
}

WeightVector WeightVector::Unit(std::size_t p, std::size_t i) {
  Vector v(p, 0.0);
  v.at(i) = 1.0;
  return WeightVector(std::move(v));
}

bool WeightVector::AllPositive() const {
  return std::all_of(lambda_.begin(), lambda_.end(),
                     [](double v) { return v > 0.0; });
}

double AggregatedQp::Evaluate(std::span<const double> x) const {
  return q.QuadraticForm(x) + 2.0 * Dot(c, x);
}

AggregatedQp Aggregate(const MoqpInstance& inst, const WeightVector& w) {
  if (w.size() != inst.p()) {
    throw InputError("aggregate: " + std::to_string(w.size()) +
                     " weights for " + std::to_string(inst.p()) + " objectives");
  }
  AggregatedQp agg{SymMatrix(inst.n()), Vector(inst.n(), 0.0)};
  for (std::size_t i = 0; i < inst.p(); ++i) {
    agg.q.AddScaled(w[i], inst.q(i));
    for (std::size_t j = 0; j < inst.n(); ++j) agg.c[j] += w[i] * inst.c(i)[j];
  }
  return agg;
}

Vector EvaluateObjectives(const MoqpInstance& inst, std::span<const double> x) {
  if (x.size() != inst.n()) {
    throw InputError("evaluate_objectives: x has length " +
                     std::to_string(x.size()) + ", expected " +
                     std::to_string(inst.n()));
  }
  Vector f(inst.p());
  for (std::size_t i = 0; i < inst.p(); ++i) {
    f[i] = inst.q(i).QuadraticForm(x) + 2.0 * Dot(inst.c(i), x);
  }
  return f;
}

double WeightedObjective(const MoqpInstance& inst, const WeightVector& w,
                         std::span<const double> x) {
  if (w.size() != inst.p()) {
    throw InputError("weighted objective: weight length mismatch");
  }
  const Vector f = EvaluateObjectives(inst, x);
  return Dot(w.values(), f);
}

double DefaultConvexityTolerance(const SymMatrix& q) {
  return 1e-9 * (1.0 + q.FrobeniusNorm());
}

bool IsConvex(const SymMatrix& q, double tol) {
  if (tol < 0.0) throw InputError("is_convex: tolerance must be >= 0");
  return MinEigenvalue(q) >= -tol;
}

bool IsConvex(const SymMatrix& q) {
  return IsConvex(q, DefaultConvexityTolerance(q));
}

FeasibilityResidual ComputeFeasibilityResidual(const MoqpInstance& inst,
                                               std::span<const double> x) {
  if (x.size() != inst.n()) {
    throw InputError("feasibility_residual: x has length " +
                     std::to_string(x.size()) + ", expected " +
                     std::to_string(inst.n()));
  }
  FeasibilityResidual r;
  for (std::size_t j = 0; j < inst.m(); ++j) {
    r.equality = std::max(r.equality, std::abs(Dot(inst.a().row(j), x) - inst.b()[j]));
  }
  for (double v : x) r.negativity = std::max(r.negativity, -v);
  return r;
}

}  // namespace moqp
