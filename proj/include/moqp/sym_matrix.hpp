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

#ifndef MOQP_SYM_MATRIX_HPP_
#define MOQP_SYM_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace moqp {

using Vector = std::vector<double>;

double Dot(std::span<const double> a, std::span<const double> b);
double Norm2(std::span<const double> a);
double NormInf(std::span<const double> a);

// Dense row-major general matrix. Used for the constraint matrix A and for
// eigenvector bases; symmetric data lives in SymMatrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  static Matrix FromRows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix Identity(std::size_t order);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> data() const { return data_; }

  Vector Multiply(std::span<const double> x) const;
  Vector MultiplyTransposed(std::span<const double> y) const;
  Vector Column(std::size_t j) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

// Dense symmetric matrix with full storage. Every constructor that accepts
// arbitrary square data symmetrizes it as (S + S^T)/2 and records the largest
// |S_ij - S_ji| it saw, so callers can warn about asymmetric input.
class SymMatrix {
 public:
  // Asymmetry above this is surfaced as a warning by callers.
  static constexpr double kAsymmetryWarning = 1e-8;

  SymMatrix() = default;
  explicit SymMatrix(std::size_t order);

  static SymMatrix Identity(std::size_t order);
  static SymMatrix Diagonal(std::span<const double> diag);
  static SymMatrix FromRows(const std::vector<Vector>& rows);
  static SymMatrix FromRows(std::initializer_list<std::initializer_list<double>> rows);
  // Row-major square data of size order*order.
  static SymMatrix FromDense(std::size_t order, std::span<const double> data);
  // u u^T
  static SymMatrix Outer(std::span<const double> u);
  // (u v^T + v u^T) / 2
  static SymMatrix SymmetricOuter(std::span<const double> u,
                                  std::span<const double> v);

  // Builds the matrix from f(i, j) evaluated on the upper triangle only.
  template <class F>
  static SymMatrix Generate(std::size_t order, F&& f) {
    SymMatrix s(order);
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = i; j < order; ++j) {
        const double v = f(i, j);
        s.data_[i * order + j] = v;
        s.data_[j * order + i] = v;
      }
    }
    return s;
  }

  std::size_t order() const { return order_; }
  bool empty() const { return order_ == 0; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * order_ + j];
  }
  // Sets both (i, j) and (j, i).
  void Set(std::size_t i, std::size_t j, double value);
  std::span<const double> data() const { return data_; }
  Vector Row(std::size_t i) const;

  // Largest |S_ij - S_ji| observed before symmetrization (0 if constructed
  // from symmetric data).
  double asymmetry() const { return asymmetry_; }

  double Trace() const;
  double FrobeniusNorm() const;
  double MinEntry() const;
  double MaxAbsEntry() const;
  bool AllFinite() const;
  Vector Multiply(std::span<const double> x) const;
  // x^T S x
  double QuadraticForm(std::span<const double> x) const;

  SymMatrix& operator+=(const SymMatrix& rhs);
  SymMatrix& operator-=(const SymMatrix& rhs);
  SymMatrix& operator*=(double alpha);
  // this += alpha * rhs
  SymMatrix& AddScaled(double alpha, const SymMatrix& rhs);

  friend SymMatrix operator+(SymMatrix lhs, const SymMatrix& rhs) {
    return lhs += rhs;
  }
  friend SymMatrix operator-(SymMatrix lhs, const SymMatrix& rhs) {
    return lhs -= rhs;
  }
  friend SymMatrix operator*(double alpha, SymMatrix rhs) {
    return rhs *= alpha;
  }
  friend SymMatrix operator*(SymMatrix lhs, double alpha) {
    return lhs *= alpha;
  }

  // Entry-wise equality; the recorded asymmetry is ignored.
  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.order_ == b.order_ && a.data_ == b.data_;
  }

 private:
  std::size_t order_ = 0;
  Vector data_;
  double asymmetry_ = 0.0;
};

// Frobenius inner product trace(A^T B).
double FrobeniusDot(const SymMatrix& a, const SymMatrix& b);
double FrobeniusDistance(const SymMatrix& a, const SymMatrix& b);
double MaxAbsDifference(const SymMatrix& a, const SymMatrix& b);

}  // namespace moqp

#endif  // MOQP_SYM_MATRIX_HPP_
