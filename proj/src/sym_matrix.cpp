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

#include "moqp/sym_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "moqp/errors.hpp"

namespace moqp {

double Dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double Norm2(std::span<const double> a) { return std::sqrt(Dot(a, a)); }

double NormInf(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

Matrix Matrix::FromRows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw InputError("matrix row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(cols));
    }
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
  }
  return m;
}

Matrix Matrix::Identity(std::size_t order) {
  Matrix m(order, order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1.0;
  return m;
}

Vector Matrix::Multiply(std::span<const double> x) const {
  assert(x.size() == cols_);
  Vector y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) y[i] = Dot(row(i), x);
  return y;
}

Vector Matrix::MultiplyTransposed(std::span<const double> y) const {
  assert(y.size() == rows_);
  Vector x(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) x[j] += (*this)(i, j) * y[i];
  }
  return x;
}

Vector Matrix::Column(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

SymMatrix::SymMatrix(std::size_t order)
    : order_(order), data_(order * order, 0.0) {}

SymMatrix SymMatrix::Identity(std::size_t order) {
  SymMatrix s(order);
  for (std::size_t i = 0; i < order; ++i) s.data_[i * order + i] = 1.0;
  return s;
}

SymMatrix SymMatrix::Diagonal(std::span<const double> diag) {
  SymMatrix s(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    s.data_[i * diag.size() + i] = diag[i];
  }
  return s;
}

SymMatrix SymMatrix::FromDense(std::size_t order,
                               std::span<const double> data) {
  if (data.size() != order * order) {
    throw InputError("square matrix of order " + std::to_string(order) +
                     " needs " + std::to_string(order * order) +
                     " entries, got " + std::to_string(data.size()));
  }
  SymMatrix s(order);
  double asym = 0.0;
  for (std::size_t i = 0; i < order; ++i) {
    s.data_[i * order + i] = data[i * order + i];
    for (std::size_t j = i + 1; j < order; ++j) {
      const double a = data[i * order + j];
      const double b = data[j * order + i];
      // Keep a == b bit-exact instead of (a + b) / 2.
      const double v = (a == b) ? a : 0.5 * (a + b);
      asym = std::max(asym, std::abs(a - b));
      s.data_[i * order + j] = v;
      s.data_[j * order + i] = v;
    }
  }
  s.asymmetry_ = asym;
  return s;
}

SymMatrix SymMatrix::FromRows(const std::vector<Vector>& rows) {
  const std::size_t d = rows.size();
  Vector flat;
  flat.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    if (rows[i].size() != d) {
      throw InputError("row " + std::to_string(i) + " of a " +
                       std::to_string(d) + "x" + std::to_string(d) +
                       " matrix has " + std::to_string(rows[i].size()) +
                       " entries");
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return FromDense(d, flat);
}

SymMatrix SymMatrix::FromRows(
    std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<Vector> v;
  for (const auto& r : rows) v.emplace_back(r);
  return FromRows(v);
}

SymMatrix SymMatrix::Outer(std::span<const double> u) {
  return Generate(u.size(),
                  [&](std::size_t i, std::size_t j) { return u[i] * u[j]; });
}

SymMatrix SymMatrix::SymmetricOuter(std::span<const double> u,
                                    std::span<const double> v) {
  assert(u.size() == v.size());
  return Generate(u.size(), [&](std::size_t i, std::size_t j) {
    return 0.5 * (u[i] * v[j] + v[i] * u[j]);
  });
}

void SymMatrix::Set(std::size_t i, std::size_t j, double value) {
  data_[i * order_ + j] = value;
  data_[j * order_ + i] = value;
}

Vector SymMatrix::Row(std::size_t i) const {
  return Vector(data_.begin() + i * order_, data_.begin() + (i + 1) * order_);
}

double SymMatrix::Trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < order_; ++i) t += data_[i * order_ + i];
  return t;
}

double SymMatrix::FrobeniusNorm() const { return Norm2(data_); }

double SymMatrix::MinEntry() const {
  return data_.empty() ? 0.0 : *std::min_element(data_.begin(), data_.end());
}

double SymMatrix::MaxAbsEntry() const { return NormInf(data_); }

bool SymMatrix::AllFinite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

Vector SymMatrix::Multiply(std::span<const double> x) const {
  assert(x.size() == order_);
  Vector y(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    y[i] = Dot(std::span<const double>(data_.data() + i * order_, order_), x);
  }
  return y;
}

double SymMatrix::QuadraticForm(std::span<const double> x) const {
  return Dot(x, Multiply(x));
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& rhs) {
  assert(order_ == rhs.order_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& rhs) {
  assert(order_ == rhs.order_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

SymMatrix& SymMatrix::operator*=(double alpha) {
  for (double& v : data_) v *= alpha;
  return *this;
}

SymMatrix& SymMatrix::AddScaled(double alpha, const SymMatrix& rhs) {
  assert(order_ == rhs.order_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    data_[k] += alpha * rhs.data_[k];
  }
  return *this;
}

double FrobeniusDot(const SymMatrix& a, const SymMatrix& b) {
  assert(a.order() == b.order());
  return Dot(a.data(), b.data());
}

double FrobeniusDistance(const SymMatrix& a, const SymMatrix& b) {
  assert(a.order() == b.order());
  double s = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    const double d = a.data()[k] - b.data()[k];
    s += d * d;
  }
  return std::sqrt(s);
}

double MaxAbsDifference(const SymMatrix& a, const SymMatrix& b) {
  assert(a.order() == b.order());
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  }
  return m;
}

}  // namespace moqp
