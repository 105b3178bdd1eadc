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

#include "moqp/dnn_solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <sstream>

#include "moqp/affine_subspace.hpp"
#include "moqp/errors.hpp"
#include "moqp/spectral.hpp"

namespace moqp {

namespace {

// Least-squares solution of the equality rows of the lifted problem, clamped
// to the orthant. Recovered from the constraint matrices so that Solve only
// depends on the LiftedProblem.
Vector WarmStart(const LiftedProblem& lp) {
  if (lp.m == 0) return Vector(lp.n, 0.0);
  Matrix a(lp.m, lp.n);
  Vector b(lp.m);
  for (std::size_t j = 0; j < lp.m; ++j) {
    const AffineConstraint& c = lp.constraints[1 + j];
    // B = (e0 a^T + a e0^T) / 2, so row 0 holds a / 2.
    for (std::size_t k = 0; k < lp.n; ++k) a(j, k) = 2.0 * c.matrix(0, k + 1);
    b[j] = c.rhs;
  }
  Vector x = ParametrizeAffine(a, b).particular;
  for (double& v : x) v = std::max(v, 0.0);
  return x;
}

// For every equality row, a^T x = b and a^T X a = b^2 force v^T Y v = 0 with
// v = (-b, a), so a feasible psd Y satisfies Y v = 0. Returns an orthonormal
// basis of the complement of span{v_j}, which spans the smallest face of the
// PSD cone holding the feasible set.
std::optional<Matrix> FaceBasis(const LiftedProblem& lp) {
  if (lp.m == 0) return std::nullopt;
  const std::size_t d = lp.order();
  Matrix v(lp.m, d);
  for (std::size_t j = 0; j < lp.m; ++j) {
    const AffineConstraint& c = lp.constraints[1 + j];
    v(j, 0) = -c.rhs;
    for (std::size_t k = 0; k < lp.n; ++k) v(j, k + 1) = 2.0 * c.matrix(0, k + 1);
  }
  Matrix basis = ParametrizeAffine(v, Vector(lp.m, 0.0)).null_basis;
  if (basis.cols() == 0) return std::nullopt;
  return basis;
}

// Consensus iterate and scaled duals.
struct State {
  SymMatrix w, u1, u2, u3;
};

struct Step {
  SymMatrix y1, y2, y3;
  State next;
};

Step Advance(const State& z, const LiftedProblem& lp,
             const std::optional<Matrix>& face, double rho) {
  SymMatrix v1 = z.w - z.u1;
  v1.AddScaled(-1.0 / rho, lp.objective);
  Step s{ProjectAffine(v1, lp.constraints),
         face ? ProjectPsdFace(z.w - z.u2, *face) : ProjectPsd(z.w - z.u2),
         ProjectNonneg(z.w - z.u3), {}};
  SymMatrix w = s.y1 + z.u1;
  w += s.y2;
  w += z.u2;
  w += s.y3;
  w += z.u3;
  w *= 1.0 / 3.0;
  s.next.u1 = z.u1 + s.y1 - w;
  s.next.u2 = z.u2 + s.y2 - w;
  s.next.u3 = z.u3 + s.y3 - w;
  s.next.w = std::move(w);
  return s;
}

Vector Pack(const State& z) {
  Vector v;
  v.reserve(4 * z.w.data().size());
  for (const SymMatrix* m : {&z.w, &z.u1, &z.u2, &z.u3}) {
    v.insert(v.end(), m->data().begin(), m->data().end());
  }
  return v;
}

State Unpack(std::span<const double> v, std::size_t d) {
  const std::size_t block = d * d;
  return {SymMatrix::FromDense(d, v.subspan(0, block)),
          SymMatrix::FromDense(d, v.subspan(block, block)),
          SymMatrix::FromDense(d, v.subspan(2 * block, block)),
          SymMatrix::FromDense(d, v.subspan(3 * block, block))};
}

// Solves (M + shift I) x = rhs for a small symmetric positive semidefinite M
// (row-major, k x k) by Cholesky. Returns nothing if a pivot vanishes.
std::optional<Vector> SolveShiftedSpd(Vector m, std::size_t k, double shift,
                                      Vector rhs) {
  for (std::size_t i = 0; i < k; ++i) m[i * k + i] += shift;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = m[i * k + j];
      for (std::size_t l = 0; l < j; ++l) sum -= m[i * k + l] * m[j * k + l];
      if (i == j) {
        if (!(sum > 0.0)) return std::nullopt;
        m[i * k + i] = std::sqrt(sum);
      } else {
        m[i * k + j] = sum / m[j * k + j];
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < i; ++l) rhs[i] -= m[i * k + l] * rhs[l];
    rhs[i] /= m[i * k + i];
  }
  for (std::size_t i = k; i-- > 0;) {
    for (std::size_t l = i + 1; l < k; ++l) rhs[i] -= m[l * k + i] * rhs[l];
    rhs[i] /= m[i * k + i];
  }
  return rhs;
}

// Type-II Anderson mixing over the last `memory` differences of residuals
// f = g(z) - z and images g(z).
class AndersonHistory {
 public:
  explicit AndersonHistory(std::size_t memory) : memory_(memory) {}

  bool enabled() const { return memory_ > 0; }
  void Clear() {
    f_.clear();
    g_.clear();
  }
  void RestartFromLatest() {
    if (f_.size() > 1) {
      f_.erase(f_.begin(), f_.end() - 1);
      g_.erase(g_.begin(), g_.end() - 1);
    }
  }

  // Records (f, g) and returns g - dG gamma, gamma = argmin |f - dF gamma|
  // with Tikhonov shift regularization * trace(dF^T dF).
  std::optional<Vector> Extrapolate(Vector f, Vector g, double regularization) {
    f_.push_back(std::move(f));
    g_.push_back(std::move(g));
    if (f_.size() > memory_ + 1) {
      f_.erase(f_.begin());
      g_.erase(g_.begin());
    }
    if (f_.size() < 2) return std::nullopt;
    const std::size_t k = f_.size() - 1;
    const std::size_t len = f_.back().size();
    std::vector<Vector> df(k, Vector(len));
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t i = 0; i < len; ++i) df[c][i] = f_[c + 1][i] - f_[c][i];
    }
    Vector gram(k * k);
    Vector rhs(k);
    double trace = 0.0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        gram[a * k + b] = gram[b * k + a] = Dot(df[a], df[b]);
      }
      trace += gram[a * k + a];
      rhs[a] = Dot(df[a], f_.back());
    }
    if (!(trace > 0.0)) return std::nullopt;
    std::optional<Vector> gamma =
        SolveShiftedSpd(std::move(gram), k, regularization * trace, std::move(rhs));
    if (!gamma) return std::nullopt;
    Vector out = g_.back();
    for (std::size_t c = 0; c < k; ++c) {
      const double gc = (*gamma)[c];
      for (std::size_t i = 0; i < len; ++i) out[i] -= gc * (g_[c + 1][i] - g_[c][i]);
    }
    for (double v : out) {
      if (!std::isfinite(v)) return std::nullopt;
    }
    return out;
  }

 private:
  std::size_t memory_;
  std::vector<Vector> f_;
  std::vector<Vector> g_;
};

}  // namespace

void SolverConfig::Validate() const {
  if (!(rho > 0.0)) throw InputError("solver: rho must be > 0");
  if (!(eps_abs > 0.0) || !(eps_rel > 0.0)) {
    throw InputError("solver: tolerances must be > 0");
  }
  if (max_iter < 1) throw InputError("solver: max_iter must be >= 1");
  if (!(rank1_tol > 0.0)) throw InputError("solver: rank1_tol must be > 0");
  if (!(anderson_regularization >= 0.0) || !(anderson_safeguard > 0.0) ||
      anderson_safeguard > 1.0) {
    throw InputError("solver: invalid Anderson acceleration parameters");
  }
  if (!(adapt_factor > 1.0) || !(adapt_ratio > 1.0) || adapt_interval < 1) {
    throw InputError("solver: invalid residual-balancing parameters");
  }
}

const char* ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kConverged:
      return "converged";
    case SolveStatus::kMaxIter:
      return "max-iter";
    case SolveStatus::kDiverged:
      return "diverged";
  }
  return "unknown";
}

SolveStatus SolveStatusFromString(const std::string& s) {
  if (s == "converged") return SolveStatus::kConverged;
  if (s == "max-iter") return SolveStatus::kMaxIter;
  if (s == "diverged") return SolveStatus::kDiverged;
  throw InputError("unknown solve status '" + s + "'");
}

SolveResult Solve(const LiftedProblem& lp, const SolverConfig& cfg) {
  cfg.Validate();
  const std::size_t d = lp.order();
  if (lp.objective.order() != d ||
      (lp.constraints.size() > 0 && lp.constraints.order() != d)) {
    throw InputError("solve: lifted problem is malformed");
  }

  double rho = cfg.rho;
  const std::optional<Matrix> face =
      cfg.face_reduction ? FaceBasis(lp) : std::nullopt;
  State z{LiftPoint(WarmStart(lp)), SymMatrix(d), SymMatrix(d), SymMatrix(d)};
  Step step = Advance(z, lp, face, rho);
  const double sqrt3 = std::sqrt(3.0);
  const double c_norm = lp.objective.FrobeniusNorm();
  AndersonHistory anderson(cfg.anderson_memory);

  SolveResult res;
  std::size_t last_adapt = 0;
  for (std::size_t it = 1; it <= cfg.max_iter; ++it) {
    const SymMatrix& w_next = step.next.w;
    const double primal = std::max({FrobeniusDistance(step.y1, w_next),
                                    FrobeniusDistance(step.y2, w_next),
                                    FrobeniusDistance(step.y3, w_next)});
    const double dual = rho * sqrt3 * FrobeniusDistance(w_next, z.w);
    const double w_norm = w_next.FrobeniusNorm();
    const double scale =
        std::max({w_norm, step.y1.FrobeniusNorm(), step.y2.FrobeniusNorm(),
                  step.y3.FrobeniusNorm()});
    // The dual residual is measured against the dual side (C and rho U);
    // scaling it by the primal iterates would let a drifting, unbounded run
    // pass as converged.
    const double dual_scale =
        std::max({c_norm, rho * z.u1.FrobeniusNorm(), rho * z.u2.FrobeniusNorm(),
                  rho * z.u3.FrobeniusNorm()});
    const double abs_tol = cfg.eps_abs * static_cast<double>(1 + lp.n);
    const double tol = abs_tol + cfg.eps_rel * scale;
    const double dual_tol = abs_tol + cfg.eps_rel * dual_scale;

    res.iterations = it;
    res.primal_residual = primal;
    res.dual_residual = dual;
    res.tolerance = tol;
    res.dual_tolerance = dual_tol;
    if (cfg.record_history) res.residual_history.push_back(std::max(primal, dual));

    if (!std::isfinite(w_norm) || w_norm > cfg.divergence_norm) {
      z = std::move(step.next);
      res.status = SolveStatus::kDiverged;
      break;
    }
    if (primal <= tol && dual <= dual_tol) {
      // Report the nonnegative block: it is within the primal residual of
      // the others and exactly entrywise nonnegative.
      z = std::move(step.next);
      z.w = std::move(step.y3);
      res.status = SolveStatus::kConverged;
      break;
    }
    res.status = SolveStatus::kMaxIter;

    // Fixed-point map g(z) = step.next. Anderson mixing proposes an
    // extrapolated point that is kept only if its own fixed-point residual
    // shrinks by the safeguard factor.
    bool accepted = false;
    if (anderson.enabled()) {
      const Vector zv = Pack(z);
      Vector gv = Pack(step.next);
      Vector fv(gv.size());
      for (std::size_t i = 0; i < fv.size(); ++i) fv[i] = gv[i] - zv[i];
      const double f_norm = Norm2(fv);
      std::optional<Vector> candidate = anderson.Extrapolate(
          std::move(fv), std::move(gv), cfg.anderson_regularization);
      if (candidate) {
        State za = Unpack(*candidate, d);
        Step trial = Advance(za, lp, face, rho);
        const Vector ga = Pack(trial.next);
        double r2 = 0.0;
        for (std::size_t i = 0; i < ga.size(); ++i) {
          const double diff = ga[i] - (*candidate)[i];
          r2 += diff * diff;
        }
        if (std::sqrt(r2) <= cfg.anderson_safeguard * f_norm) {
          z = std::move(za);
          step = std::move(trial);
          accepted = true;
          ++res.accelerated_steps;
        } else {
          anderson.RestartFromLatest();
        }
      }
    }
    if (!accepted) {
      z = std::move(step.next);
      step = Advance(z, lp, face, rho);
    }

    if (cfg.adaptive_rho && it - last_adapt >= cfg.adapt_interval) {
      double factor = 1.0;
      if (primal > cfg.adapt_ratio * dual) {
        factor = cfg.adapt_factor;
      } else if (dual > cfg.adapt_ratio * primal) {
        factor = 1.0 / cfg.adapt_factor;
      }
      if (factor != 1.0) {
        // Scaled duals are U = dual / rho.
        rho *= factor;
        z.u1 *= 1.0 / factor;
        z.u2 *= 1.0 / factor;
        z.u3 *= 1.0 / factor;
        step = Advance(z, lp, face, rho);
        anderson.Clear();
        last_adapt = it;
      }
    }
  }
  if (res.status == SolveStatus::kMaxIter) z = std::move(step.next);

  res.final_rho = rho;
  res.objective = FrobeniusDot(lp.objective, z.w);
  res.y = std::move(z.w);
  if (res.status == SolveStatus::kConverged) {
    LiftedPair pair = Extract(res.y);
    res.x = std::move(pair.x);
    res.big_x = std::move(pair.big_x);
  } else {
    const std::size_t n = lp.n;
    res.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.x[i] = res.y(i + 1, 0);
    res.big_x = SymMatrix::Generate(
        n, [&](std::size_t i, std::size_t j) { return res.y(i + 1, j + 1); });
  }
  res.rank1_gap = Rank1Gap(res.x, res.big_x);
  res.exact = res.status == SolveStatus::kConverged &&
              res.rank1_gap <= cfg.rank1_tol;
  return res;
}

bool IsDnn(const SymMatrix& s, double tol) {
  if (tol < 0.0) throw InputError("is_dnn: tolerance must be >= 0");
  if (s.MinEntry() < -tol) return false;
  return MinEigenvalue(s) >= -tol;
}

bool CertifyLowerBound(const SolveResult& result, const MoqpInstance& inst,
                       const WeightVector& w,
                       const std::vector<Vector>& probes) {
  constexpr double kProbeFeasibility = 1e-8;
  bool holds = true;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const FeasibilityResidual r = ComputeFeasibilityResidual(inst, probes[k]);
    if (r.equality > kProbeFeasibility || r.negativity > kProbeFeasibility) {
      std::ostringstream os;
      os << "certify_lower_bound: probe " << k << " is infeasible (eq "
         << r.equality << ", neg " << r.negativity << ")";
      throw InputError(os.str());
    }
    const double u = WeightedObjective(inst, w, probes[k]);
    if (!(result.objective <= u + 1e-6 * (1.0 + std::abs(u)))) holds = false;
  }
  return holds;
}

}  // namespace moqp
