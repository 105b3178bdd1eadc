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

#include "moqp/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "moqp/affine_subspace.hpp"
#include "moqp/errors.hpp"

namespace moqp {

namespace {

constexpr double kClamp = 1e-12;

struct Region {
  AffineSubspace sub;
  double radius = 0.0;  // R

  // x_p + N t
  Vector Point(std::span<const double> t) const { return sub.Point(t); }
  // Row i of N.
  double Basis(std::size_t i, std::size_t k) const { return sub.null_basis(i, k); }
  std::size_t n() const { return sub.particular.size(); }
  std::size_t dim() const { return sub.dimension(); }
};

// Returns false when x leaves the orthant by more than kClamp; otherwise
// clamps the small negatives.
bool ClampFeasible(Vector& x) {
  for (double& v : x) {
    if (v < -kClamp) return false;
    if (v < 0.0) v = 0.0;
  }
  return true;
}

struct Box {
  Vector lo;
  Vector hi;
};

// Vertices of {t : x_p + N t >= 0} for dim 1 and 2.
std::vector<Vector> Vertices(const Region& r) {
  const std::size_t n = r.n();
  const std::size_t k = r.dim();
  std::vector<Vector> out;
  auto feasible = [&](const Vector& t) {
    const Vector x = r.Point(t);
    const double scale = 1.0 + NormInf(x);
    return std::all_of(x.begin(), x.end(),
                       [&](double v) { return v >= -1e-10 * scale; });
  };
  if (k == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      const double ni = r.Basis(i, 0);
      if (std::abs(ni) < 1e-14) continue;
      Vector t{-r.sub.particular[i] / ni};
      if (feasible(t)) out.push_back(std::move(t));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double a = r.Basis(i, 0), b = r.Basis(i, 1);
        const double c = r.Basis(j, 0), d = r.Basis(j, 1);
        const double det = a * d - b * c;
        if (std::abs(det) < 1e-12) continue;
        const double ri = -r.sub.particular[i], rj = -r.sub.particular[j];
        Vector t{(ri * d - b * rj) / det, (a * rj - c * ri) / det};
        if (feasible(t)) out.push_back(std::move(t));
      }
    }
  }
  return out;
}

// Recession directions of the region among the candidate edge directions.
std::vector<Vector> UnboundedDirections(const Region& r) {
  const std::size_t n = r.n();
  const std::size_t k = r.dim();
  std::vector<Vector> candidates;
  if (k == 1) {
    candidates = {{1.0}, {-1.0}};
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double a = r.Basis(i, 0), b = r.Basis(i, 1);
      const double len = std::hypot(a, b);
      if (len < 1e-14) continue;
      candidates.push_back({-b / len, a / len});
      candidates.push_back({b / len, -a / len});
    }
    candidates.push_back({1.0, 0.0});
  }
  std::vector<Vector> out;
  for (const Vector& dir : candidates) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      double s = 0.0;
      for (std::size_t c = 0; c < k; ++c) s += r.Basis(i, c) * dir[c];
      ok = s >= -1e-12;
    }
    if (ok) out.push_back(dir);
  }
  return out;
}

Box BoundingBox(const Region& r) {
  const std::size_t k = r.dim();
  const std::vector<Vector> verts = Vertices(r);
  const std::vector<Vector> rays = UnboundedDirections(r);
  Box box{Vector(k, std::numeric_limits<double>::infinity()),
          Vector(k, -std::numeric_limits<double>::infinity())};
  for (const Vector& v : verts) {
    for (std::size_t c = 0; c < k; ++c) {
      box.lo[c] = std::min(box.lo[c], v[c]);
      box.hi[c] = std::max(box.hi[c], v[c]);
    }
  }
  if (verts.empty()) {
    if (rays.empty()) throw EmptyRegionError("sample_feasible: feasible region is empty");
    box.lo.assign(k, -r.radius);
    box.hi.assign(k, r.radius);
    return box;
  }
  for (const Vector& dir : rays) {
    for (std::size_t c = 0; c < k; ++c) {
      if (dir[c] > 1e-12) box.hi[c] = std::max(box.hi[c], r.radius);
      if (dir[c] < -1e-12) box.lo[c] = std::min(box.lo[c], -r.radius);
    }
  }
  return box;
}

std::vector<Vector> GridPoints(const Region& r, std::size_t density) {
  const std::size_t k = r.dim();
  const Box box = BoundingBox(r);
  auto coord = [&](std::size_t c, std::size_t i) {
    if (box.hi[c] <= box.lo[c]) return box.lo[c];
    return box.lo[c] + (box.hi[c] - box.lo[c]) * static_cast<double>(i) /
                           static_cast<double>(density - 1);
  };
  std::vector<Vector> pts;
  if (k == 1) {
    for (std::size_t i = 0; i < density; ++i) {
      Vector x = r.Point(Vector{coord(0, i)});
      if (ClampFeasible(x)) pts.push_back(std::move(x));
    }
  } else {
    for (std::size_t i = 0; i < density; ++i) {
      for (std::size_t j = 0; j < density; ++j) {
        Vector x = r.Point(Vector{coord(0, i), coord(1, j)});
        if (ClampFeasible(x)) pts.push_back(std::move(x));
      }
    }
  }
  return pts;
}

std::vector<unsigned> FirstPrimes(std::size_t count) {
  std::vector<unsigned> primes;
  for (unsigned c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (unsigned p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

double RadicalInverse(std::uint64_t index, unsigned base) {
  double inv = 1.0 / base;
  double f = inv;
  double out = 0.0;
  while (index > 0) {
    out += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return out;
}

// Alternating projections between {Ax = b} and the orthant.
bool FindFeasible(const Region& r, Vector x, Vector& out) {
  const std::size_t n = r.n();
  const std::size_t k = r.dim();
  for (int it = 0; it < 20000; ++it) {
    // Affine projection: x_p + N N^T (x - x_p).
    Vector t(k, 0.0);
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        t[c] += r.Basis(i, c) * (x[i] - r.sub.particular[i]);
      }
    }
    x = r.Point(t);
    if (std::all_of(x.begin(), x.end(), [](double v) { return v >= -kClamp; })) {
      for (double& v : x) v = std::max(v, 0.0);
      out = std::move(x);
      return true;
    }
    for (double& v : x) v = std::max(v, 0.0);
  }
  return false;
}

std::vector<Vector> RayPoints(const Region& r, std::size_t density,
                              std::uint64_t seed) {
  const std::size_t n = r.n();
  const std::size_t k = r.dim();

  // Center: mean of feasible points reached from starts pushed along each
  // coordinate's null-space component.
  Vector center(n, 0.0);
  std::size_t found = 0;
  const double push = 2.0 * r.radius;
  for (std::size_t i = 0; i <= n; ++i) {
    Vector start = r.sub.particular;
    if (i < n) {
      for (std::size_t c = 0; c < k; ++c) {
        const double coef = push * r.Basis(i, c);
        for (std::size_t l = 0; l < n; ++l) start[l] += coef * r.Basis(l, c);
      }
    }
    Vector x;
    if (FindFeasible(r, std::move(start), x)) {
      for (std::size_t l = 0; l < n; ++l) center[l] += x[l];
      ++found;
    }
  }
  if (found == 0) throw EmptyRegionError("sample_feasible: feasible region is empty");
  for (double& v : center) v /= static_cast<double>(found);

  std::mt19937_64 rng(seed);
  const std::vector<unsigned> primes = FirstPrimes(k + 1);
  Vector shift(k + 1, 0.0);
  if (seed != 0) {
    for (double& s : shift) s = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  }

  std::vector<Vector> pts;
  pts.reserve(density);
  pts.push_back(center);
  for (std::uint64_t idx = 1; pts.size() < density; ++idx) {
    Vector u(k + 1);
    for (std::size_t c = 0; c <= k; ++c) {
      u[c] = std::fmod(RadicalInverse(idx, primes[c]) + shift[c], 1.0);
    }
    Vector dir_t(k);
    for (std::size_t c = 0; c < k; ++c) dir_t[c] = 2.0 * u[c] - 1.0;
    const double len = Norm2(dir_t);
    if (len < 1e-12) continue;
    for (double& v : dir_t) v /= len;
    Vector dir(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < k; ++c) dir[i] += r.Basis(i, c) * dir_t[c];
    }
    double step = r.radius;
    for (std::size_t i = 0; i < n; ++i) {
      if (dir[i] < -1e-15) step = std::min(step, center[i] / -dir[i]);
    }
    const double frac = std::pow(u[k], 1.0 / static_cast<double>(k));
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = center[i] + frac * step * dir[i];
    if (ClampFeasible(x)) pts.push_back(std::move(x));
  }
  return pts;
}

}  // namespace

SampleCloud SampleFeasible(const MoqpInstance& inst, std::size_t density,
                           const SamplingOptions& options) {
  if (density < 2) throw InputError("sample_feasible: density must be >= 2");
  Region r;
  r.sub = ParametrizeAffine(inst.a(), inst.b());
  const double bnorm = NormInf(inst.b());
  if (r.sub.residual > 1e-8 * (1.0 + Norm2(inst.b()))) {
    throw InfeasibleError("sample_feasible: Ax = b is inconsistent (residual " +
                          std::to_string(r.sub.residual) + ")");
  }
  const double sigma = r.sub.sigma_min > 0.0 ? r.sub.sigma_min : 1.0;
  r.radius = 1.0 + 10.0 * (1.0 + bnorm) / sigma;

  std::vector<Vector> pts;
  if (r.dim() == 0) {
    Vector x = r.sub.particular;
    if (ClampFeasible(x)) pts.push_back(std::move(x));
  } else if (r.dim() <= options.max_grid_dimension && r.dim() <= 2) {
    pts = GridPoints(r, density);
  } else {
    pts = RayPoints(r, density, options.seed);
  }
  if (pts.empty()) throw EmptyRegionError("sample_feasible: feasible region is empty");
  return MakeCloud(inst, std::move(pts));
}

}  // namespace moqp
