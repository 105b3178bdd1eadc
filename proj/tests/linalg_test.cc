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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "moqp/affine_subspace.hpp"
#include "moqp/errors.hpp"
#include "moqp/projections.hpp"
#include "moqp/spectral.hpp"
#include "moqp/sym_matrix.hpp"
#include "test_util.hpp"

namespace moqp {
namespace {

using ::moqp::testing::ExpectMatrixNear;
using ::moqp::testing::ExpectVectorNear;
using ::moqp::testing::RandomSymmetric;
using ::testing::ElementsAre;

// Classical (largest off-diagonal pivot) Jacobi, written independently of the
// cyclic library version. Returns ascending eigenvalues and the matching
// eigenvector columns.
struct OracleEig {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;  // vectors[k] is eigenvector k
};

OracleEig MaxPivotJacobi(const SymMatrix& s) {
  const std::size_t d = s.order();
  std::vector<std::vector<double>> a(d, std::vector<double>(d));
  std::vector<std::vector<double>> v(d, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) {
    v[i][i] = 1.0;
    for (std::size_t j = 0; j < d; ++j) a[i][j] = s(i, j);
  }
  for (int iter = 0; iter < 10000; ++iter) {
    std::size_t p = 0, q = 1;
    double big = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        if (std::abs(a[i][j]) > big) {
          big = std::abs(a[i][j]);
          p = i;
          q = j;
        }
      }
    }
    if (big < 1e-15) break;
    const double theta = 0.5 * std::atan2(2.0 * a[p][q], a[q][q] - a[p][p]);
    const double c = std::cos(theta), sn = std::sin(theta);
    for (std::size_t k = 0; k < d; ++k) {
      const double akp = a[k][p], akq = a[k][q];
      a[k][p] = c * akp - sn * akq;
      a[k][q] = sn * akp + c * akq;
    }
    for (std::size_t k = 0; k < d; ++k) {
      const double apk = a[p][k], aqk = a[q][k];
      a[p][k] = c * apk - sn * aqk;
      a[q][k] = sn * apk + c * aqk;
    }
    for (std::size_t k = 0; k < d; ++k) {
      const double vkp = v[k][p], vkq = v[k][q];
      v[k][p] = c * vkp - sn * vkq;
      v[k][q] = sn * vkp + c * vkq;
    }
  }
  std::vector<std::size_t> order(d);
  for (std::size_t i = 0; i < d; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a[x][x] < a[y][y]; });
  OracleEig out;
  for (std::size_t k : order) {
    out.values.push_back(a[k][k]);
    std::vector<double> col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = v[i][k];
    out.vectors.push_back(col);
  }
  return out;
}

SymMatrix OracleProjectPsd(const SymMatrix& s) {
  const OracleEig e = MaxPivotJacobi(s);
  return SymMatrix::Generate(s.order(), [&](std::size_t i, std::size_t j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < e.values.size(); ++k) {
      sum += std::max(e.values[k], 0.0) * e.vectors[k][i] * e.vectors[k][j];
    }
    return sum;
  });
}

// Least-squares projection onto {trace(B_k Y) = beta_k} by forming the normal
// equations and solving them with partial-pivot Gaussian elimination.
SymMatrix OracleProjectAffine(const SymMatrix& v,
                              const std::vector<AffineConstraint>& cs) {
  const std::size_t k = cs.size();
  std::vector<std::vector<double>> g(k, std::vector<double>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double dot = 0.0;
      for (std::size_t r = 0; r < v.order(); ++r) {
        for (std::size_t c = 0; c < v.order(); ++c) {
          dot += cs[i].matrix(r, c) * cs[j].matrix(r, c);
        }
      }
      g[i][j] = dot;
    }
    double tv = 0.0;
    for (std::size_t r = 0; r < v.order(); ++r) {
      for (std::size_t c = 0; c < v.order(); ++c) tv += cs[i].matrix(r, c) * v(r, c);
    }
    g[i][k] = tv - cs[i].rhs;
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r) {
      if (std::abs(g[r][col]) > std::abs(g[piv][col])) piv = r;
    }
    std::swap(g[col], g[piv]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      const double f = g[r][col] / g[col][col];
      for (std::size_t c = col; c <= k; ++c) g[r][c] -= f * g[col][c];
    }
  }
  SymMatrix y = v;
  for (std::size_t i = 0; i < k; ++i) y.AddScaled(-g[i][k] / g[i][i], cs[i].matrix);
  return y;
}

// The three lifted constraints of the two-variable simplex x1 + x2 = 1.
std::vector<AffineConstraint> SimplexLiftedConstraints() {
  const Vector e0 = {1, 0, 0};
  const Vector abar = {0, 1, 1};
  return {{SymMatrix::Outer(e0), 1.0},
          {SymMatrix::SymmetricOuter(e0, abar), 1.0},
          {SymMatrix::Outer(abar), 1.0}};
}

SymMatrix RandomPsd(std::size_t d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> rank_dist(0, static_cast<int>(d));
  SymMatrix out(d);
  const int rank = rank_dist(rng);
  for (int r = 0; r < rank; ++r) {
    Vector g(d);
    for (double& x : g) x = u(rng);
    out += SymMatrix::Outer(g);
  }
  return out;
}

TEST(SymMatrixTest, FromRowsSymmetrizesAndRecordsAsymmetry) {
  const SymMatrix s = SymMatrix::FromRows({{1.0, 2.0}, {4.0, 5.0}});
  EXPECT_DOUBLE_EQ(s(0, 1), 3.0);
  EXPECT_DOUBLE_EQ(s(1, 0), 3.0);
  EXPECT_DOUBLE_EQ(s.asymmetry(), 2.0);
  EXPECT_DOUBLE_EQ(SymMatrix::FromRows({{1.0, 3.0}, {3.0, 8.0}}).asymmetry(), 0.0);
}

TEST(SymMatrixTest, RejectsRaggedRows) {
  EXPECT_THROW(SymMatrix::FromRows({{1.0, 2.0}, {3.0}}), InputError);
}

TEST(SymMatrixTest, SetKeepsSymmetry) {
  SymMatrix s(3);
  s.Set(0, 2, -1.5);
  EXPECT_EQ(s(2, 0), -1.5);
  EXPECT_EQ(s(0, 2), -1.5);
}

TEST(SymMatrixTest, ArithmeticAndNorms) {
  const SymMatrix a = SymMatrix::FromRows({{1.0, -2.0}, {-2.0, 3.0}});
  const SymMatrix b = SymMatrix::Identity(2);
  EXPECT_DOUBLE_EQ(a.Trace(), 4.0);
  EXPECT_DOUBLE_EQ(a.FrobeniusNorm(), std::sqrt(18.0));
  EXPECT_DOUBLE_EQ(a.MinEntry(), -2.0);
  EXPECT_DOUBLE_EQ(a.MaxAbsEntry(), 3.0);
  EXPECT_DOUBLE_EQ(FrobeniusDot(a, b), 4.0);
  EXPECT_DOUBLE_EQ(FrobeniusDistance(a, a), 0.0);
  EXPECT_EQ(a + b - b, a);
  EXPECT_EQ(2.0 * a, a + a);
  EXPECT_DOUBLE_EQ(MaxAbsDifference(a, b), 2.0);
}

TEST(SymMatrixTest, QuadraticFormMatchesMultiply) {
  const SymMatrix q = SymMatrix::FromRows({{1.0, 3.0}, {3.0, 8.0}});
  const Vector x = {0.25, -2.0};
  EXPECT_DOUBLE_EQ(q.QuadraticForm(x), Dot(x, q.Multiply(x)));
  EXPECT_THAT(q.Multiply(x), ElementsAre(0.25 - 6.0, 0.75 - 16.0));
}

TEST(SymMatrixTest, OuterProducts) {
  const Vector u = {1.0, 2.0};
  const Vector v = {0.0, -1.0};
  EXPECT_EQ(SymMatrix::Outer(u), SymMatrix::FromRows({{1.0, 2.0}, {2.0, 4.0}}));
  EXPECT_EQ(SymMatrix::SymmetricOuter(u, v),
            SymMatrix::FromRows({{0.0, -0.5}, {-0.5, -2.0}}));
}

TEST(SymMatrixTest, FiniteCheck) {
  SymMatrix s = SymMatrix::Identity(2);
  EXPECT_TRUE(s.AllFinite());
  s.Set(1, 1, std::numeric_limits<double>::quiet_NaN());
  EXPECT_FALSE(s.AllFinite());
}

TEST(MatrixTest, MultiplyAndTranspose) {
  const Matrix a = Matrix::FromRows({{1, 2, 3}, {0, -1, 4}}, 3);
  EXPECT_THAT(a.Multiply(Vector{1, 1, 1}), ElementsAre(6, 3));
  EXPECT_THAT(a.MultiplyTransposed(Vector{1, 2}), ElementsAre(1, 0, 11));
  EXPECT_THAT(a.Column(2), ElementsAre(3, 4));
}

TEST(SymEigTest, Identity) {
  const SpectralDecomp e = SymEig(SymMatrix::Identity(3));
  EXPECT_THAT(e.eigenvalues, ElementsAre(1.0, 1.0, 1.0));
}

TEST(SymEigTest, DiagonalIsSortedAscending) {
  const SpectralDecomp e = SymEig(SymMatrix::Diagonal(Vector{2.0, -2.0}));
  EXPECT_THAT(e.eigenvalues, ElementsAre(-2.0, 2.0));
  EXPECT_DOUBLE_EQ(MinEigenvalue(SymMatrix::Diagonal(Vector{2.0, -2.0})), -2.0);
  EXPECT_DOUBLE_EQ(MinEigenvalue(SymMatrix::Identity(4)), 1.0);
}

TEST(SymEigTest, RejectsNonFinite) {
  SymMatrix s = SymMatrix::Identity(2);
  s.Set(0, 1, std::numeric_limits<double>::infinity());
  EXPECT_THROW(SymEig(s), InputError);
}

TEST(SymEigTest, FrozenThreeByThree) {
  const SymMatrix s = SymMatrix::FromRows(
      {{0.3, -1.2, 0.5}, {-1.2, 0.1, 0.8}, {0.5, 0.8, -0.7}});
  ExpectVectorNear(SymEig(s).eigenvalues,
                   Vector{-1.7956939796375364, 0.07444781728752711,
                          1.4212461623500092},
                   1e-12);
}

TEST(SymEigTest, InvariantsAndOracleAgreementOnRandomMatrices) {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 12);
    const SymMatrix s = RandomSymmetric(d, rng, 3.0);
    const SpectralDecomp e = SymEig(s);
    ASSERT_TRUE(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
    EXPECT_LE(FrobeniusDistance(e.Reconstruct(), s), 1e-10 * (1.0 + s.FrobeniusNorm()));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        double dot = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
          dot += e.eigenvectors(r, i) * e.eigenvectors(r, j);
        }
        EXPECT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-10);
      }
    }
    ExpectVectorNear(e.eigenvalues, MaxPivotJacobi(s).values, 1e-10);
  }
}

TEST(ProjectPsdTest, ClampsNegativeEigenvalue) {
  ExpectMatrixNear(ProjectPsd(SymMatrix::Diagonal(Vector{1.0, -1.0})),
                   SymMatrix::Diagonal(Vector{1.0, 0.0}), 1e-15);
}

TEST(ProjectPsdTest, FrozenThreeByThree) {
  const SymMatrix s = SymMatrix::FromRows(
      {{0.3, -1.2, 0.5}, {-1.2, 0.1, 0.8}, {0.5, 0.8, -0.7}});
  const SymMatrix expected = SymMatrix::FromRows(
      {{0.7289453306679996, -0.6881572152947087, -0.0694536108564174},
       {-0.6881572152947087, 0.7107609001055679, 0.12049447539777898},
       {-0.0694536108564174, 0.12049447539777898, 0.05598774886396989}});
  ExpectMatrixNear(ProjectPsd(s), expected, 1e-12);
  ExpectMatrixNear(OracleProjectPsd(s), expected, 1e-12);
}

TEST(ProjectPsdTest, SeededRandomMatchesOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const SymMatrix s = RandomSymmetric(3, rng);
    ExpectMatrixNear(ProjectPsd(s), OracleProjectPsd(s), 1e-10);
  }
}

TEST(ProjectPsdTest, PsdInputIsFixedPoint) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const SymMatrix p = RandomPsd(5, rng);
    EXPECT_LE(FrobeniusDistance(ProjectPsd(p), p), 1e-10 * (1.0 + p.FrobeniusNorm()));
  }
}

TEST(ProjectPsdTest, PropertiesOnRandomMatrices) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 10);
    const SymMatrix s = RandomSymmetric(d, rng, 2.0);
    const SymMatrix t = RandomSymmetric(d, rng, 2.0);
    const SymMatrix ps = ProjectPsd(s);
    const double scale = 1.0 + s.FrobeniusNorm();
    EXPECT_GE(MinEigenvalue(ps), -1e-9 * scale);
    EXPECT_LE(FrobeniusDistance(ProjectPsd(ps), ps), 1e-10 * scale);
    EXPECT_LE(FrobeniusDistance(ps, ProjectPsd(t)),
              FrobeniusDistance(s, t) + 1e-10 * scale);
    const double own = FrobeniusDistance(ps, s);
    for (int k = 0; k < 10; ++k) {
      EXPECT_LE(own, FrobeniusDistance(RandomPsd(d, rng), s) + 1e-12);
    }
  }
}

TEST(ProjectNonnegTest, Examples) {
  EXPECT_EQ(ProjectNonneg(SymMatrix::FromRows({{1, -1}, {-1, 1}})),
            SymMatrix::Identity(2));
  const SymMatrix m = SymMatrix::FromRows({{1, 1, 0, 0, 1},
                                           {1, 2, 1, 0, 0},
                                           {0, 1, 2, 1, 0},
                                           {0, 0, 1, 2, 1},
                                           {1, 0, 0, 1, 6}});
  EXPECT_EQ(ProjectNonneg(m), m);
}

TEST(ProjectNonnegTest, PropertiesOnRandomMatrices) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 11);
    const SymMatrix s = RandomSymmetric(d, rng);
    const SymMatrix t = RandomSymmetric(d, rng);
    const SymMatrix ps = ProjectNonneg(s);
    EXPECT_GE(ps.MinEntry(), 0.0);
    EXPECT_EQ(ProjectNonneg(ps), ps);
    EXPECT_LE(FrobeniusDistance(ps, ProjectNonneg(t)), FrobeniusDistance(s, t) + 1e-15);
  }
}

TEST(ProjectPsdFaceTest, FullBasisMatchesPlainProjection) {
  std::mt19937_64 rng(5);
  const Matrix eye = Matrix::Identity(4);
  for (int trial = 0; trial < 20; ++trial) {
    const SymMatrix s = RandomSymmetric(4, rng);
    ExpectMatrixNear(ProjectPsdFace(s, eye), ProjectPsd(s), 1e-12);
  }
}

TEST(ProjectPsdFaceTest, ResultAnnihilatesComplement) {
  // Face of 3x3 PSD matrices with Y (-1, 1, 1) = 0.
  const Matrix v = Matrix::FromRows({{-1.0, 1.0, 1.0}}, 3);
  const Matrix basis = ParametrizeAffine(v, Vector{0.0}).null_basis;
  ASSERT_EQ(basis.cols(), 2u);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const SymMatrix s = RandomSymmetric(3, rng);
    const SymMatrix f = ProjectPsdFace(s, basis);
    for (double r : f.Multiply(Vector{-1.0, 1.0, 1.0})) EXPECT_NEAR(r, 0.0, 1e-12);
    EXPECT_GE(MinEigenvalue(f), -1e-12);
    ExpectMatrixNear(ProjectPsdFace(f, basis), f, 1e-12);
    // Nearest point within the face: compare with random face members.
    const double own = FrobeniusDistance(f, s);
    for (int k = 0; k < 5; ++k) {
      const SymMatrix member = ProjectPsdFace(RandomSymmetric(3, rng), basis);
      EXPECT_LE(own, FrobeniusDistance(member, s) + 1e-12);
    }
  }
}

TEST(ProjectPsdFaceTest, RejectsMismatchedBasis) {
  EXPECT_THROW(ProjectPsdFace(SymMatrix::Identity(3), Matrix::Identity(2)), InputError);
}

TEST(ProjectAffineTest, FeasibleInputIsFixedPoint) {
  const AffineConstraintSet cs(SimplexLiftedConstraints());
  const SymMatrix y = SymMatrix::Outer(Vector{1.0, 0.25, 0.75});
  EXPECT_LE(FrobeniusDistance(ProjectAffine(y, cs), y), 1e-10);
}

TEST(ProjectAffineTest, SingleCornerConstraint) {
  const AffineConstraintSet cs({{SymMatrix::Outer(Vector{1.0, 0.0, 0.0}), 1.0}});
  SymMatrix v = SymMatrix::FromRows({{0, 2, 3}, {2, 4, 5}, {3, 5, 6}});
  SymMatrix expected = v;
  expected.Set(0, 0, 1.0);
  ExpectMatrixNear(ProjectAffine(v, cs), expected, 1e-10);
}

TEST(ProjectAffineTest, AllOnesAgainstNormalEquationsOracle) {
  const std::vector<AffineConstraint> raw = SimplexLiftedConstraints();
  const AffineConstraintSet cs(raw);
  const SymMatrix ones = SymMatrix::Generate(3, [](std::size_t, std::size_t) { return 1.0; });
  const SymMatrix expected =
      SymMatrix::FromRows({{1.0, 0.5, 0.5}, {0.5, 0.25, 0.25}, {0.5, 0.25, 0.25}});
  ExpectMatrixNear(OracleProjectAffine(ones, raw), expected, 1e-14);
  ExpectMatrixNear(ProjectAffine(ones, cs), expected, 1e-12);
}

TEST(ProjectAffineTest, PropertiesOnRandomMatrices) {
  const std::vector<AffineConstraint> raw = SimplexLiftedConstraints();
  const AffineConstraintSet cs(raw);
  const AffineConstraintSet homogeneous(
      {{raw[0].matrix, 0.0}, {raw[1].matrix, 0.0}, {raw[2].matrix, 0.0}});
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const SymMatrix v = RandomSymmetric(3, rng, 2.0);
    const SymMatrix y = ProjectAffine(v, cs);
    const Vector res = cs.Residuals(y);
    for (std::size_t k = 0; k < raw.size(); ++k) {
      EXPECT_LE(std::abs(res[k]), 1e-9 * (1.0 + std::abs(raw[k].rhs)));
    }
    ExpectMatrixNear(ProjectAffine(y, cs), y, 1e-9);
    ExpectMatrixNear(y, OracleProjectAffine(v, raw), 1e-10);
    // V - P(V) lies in span{B_k}: it is orthogonal to every direction that
    // leaves all the traces unchanged.
    const SymMatrix null_dir = ProjectAffine(RandomSymmetric(3, rng), homogeneous);
    EXPECT_NEAR(FrobeniusDot(v - y, null_dir), 0.0, 1e-10);
  }
}

TEST(ProjectAffineTest, GramSolveResidual) {
  const AffineConstraintSet cs(SimplexLiftedConstraints());
  const Vector rhs = {0.3, -1.0, 2.5};
  const Vector mu = cs.SolveGram(rhs);
  for (std::size_t i = 0; i < 3; ++i) {
    double gi = 0.0;
    for (std::size_t j = 0; j < 3; ++j) gi += FrobeniusDot(cs[i].matrix, cs[j].matrix) * mu[j];
    EXPECT_NEAR(gi, rhs[i], 1e-10 * (1.0 + Norm2(rhs)));
  }
}

TEST(ProjectAffineTest, DuplicateConstraintIsRankDeficient) {
  std::vector<AffineConstraint> raw = SimplexLiftedConstraints();
  raw.push_back(raw[2]);
  try {
    AffineConstraintSet cs(raw);
    FAIL() << "expected rank deficiency";
  } catch (const RankDeficiencyError& e) {
    EXPECT_THAT(e.constraint_indices(), ElementsAre(3u));
  }
}

TEST(ProjectAffineTest, RejectsOrderMismatch) {
  const AffineConstraintSet cs(SimplexLiftedConstraints());
  EXPECT_THROW(ProjectAffine(SymMatrix::Identity(4), cs), InputError);
}

TEST(AffineSubspaceTest, SimplexLine) {
  const Matrix a = Matrix::FromRows({{1.0, 1.0}}, 2);
  const AffineSubspace s = ParametrizeAffine(a, Vector{1.0});
  ExpectVectorNear(s.particular, Vector{0.5, 0.5}, 1e-14);
  ASSERT_EQ(s.dimension(), 1u);
  EXPECT_NEAR(std::abs(s.null_basis(0, 0)), std::sqrt(0.5), 1e-14);
  EXPECT_NEAR(s.null_basis(0, 0) + s.null_basis(1, 0), 0.0, 1e-14);
  EXPECT_NEAR(s.sigma_min, std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(s.residual, 0.0, 1e-14);
  const Vector p = s.Point(Vector{0.1});
  EXPECT_NEAR(p[0] + p[1], 1.0, 1e-14);
}

TEST(AffineSubspaceTest, InconsistentSystemReportsResidual) {
  const Matrix a = Matrix::FromRows({{1.0, 1.0}, {1.0, 1.0}}, 2);
  const AffineSubspace s = ParametrizeAffine(a, Vector{0.0, 2.0});
  EXPECT_NEAR(s.residual, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(s.dimension(), 1u);
}

TEST(AffineSubspaceTest, NoConstraintsGivesFullSpace) {
  const AffineSubspace s = ParametrizeAffine(Matrix(0, 3), Vector{});
  EXPECT_EQ(s.dimension(), 3u);
  EXPECT_EQ(s.sigma_min, 0.0);
  ExpectVectorNear(s.particular, Vector{0, 0, 0}, 0.0);
}

}  // namespace
}  // namespace moqp
