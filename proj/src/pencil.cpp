// Copyright 2026 The modlie Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "modlie/pencil.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "modlie/rng.hpp"

namespace modlie {

namespace {

void row_axpy(PolyMatrix& a, std::size_t dst, const Polynomial& q, std::size_t src) {
  for (std::size_t j = 0; j < a[dst].size(); ++j) {
    if (!a[src][j].is_zero()) a[dst][j] -= q * a[src][j];
  }
}

void col_axpy(PolyMatrix& a, std::size_t dst, const Polynomial& q, std::size_t src) {
  for (auto& row : a) {
    if (!row[src].is_zero()) row[dst] -= q * row[src];
  }
}

}  // namespace

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  PolyMatrix c(n, std::vector<Polynomial>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < b.size(); ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
      }
    }
  }
  return c;
}

PolyMatrix linear_pencil(const RatMatrix& a, const RatMatrix& b) {
  PolyMatrix base(a.rows(), std::vector<Polynomial>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) base[i][j] = Polynomial{b(i, j), a(i, j)};
  }
  return base;
}

namespace {

// (a t + b)^k as a polynomial matrix in t.
PolyMatrix linear_power(const RatMatrix& a, const RatMatrix& b, std::size_t k) {
  const PolyMatrix base = linear_pencil(a, b);
  PolyMatrix out = base;
  for (std::size_t i = 1; i < k; ++i) out = multiply(out, base);
  return out;
}

std::size_t order_at_zero(const Polynomial& p) {
  std::size_t k = 0;
  while (p.coeff(k).is_zero()) ++k;
  return k;
}

}  // namespace

std::vector<Polynomial> invariant_factors(PolyMatrix a) {
  std::vector<Polynomial> out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      int best = -1;
      for (std::size_t i = k; i < rows; ++i) {
        for (std::size_t j = k; j < cols; ++j) {
          if (a[i][j].is_zero()) continue;
          if (best < 0 || a[i][j].degree() < best) {
            best = a[i][j].degree();
            pi = i;
            pj = j;
          }
        }
      }
      if (best < 0) return out;
      std::swap(a[k], a[pi]);
      for (auto& row : a) std::swap(row[k], row[pj]);

      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a[i][k].is_zero()) continue;
        const DivMod dm = divmod(a[i][k], a[k][k]);
        row_axpy(a, i, dm.quotient, k);
        if (!dm.remainder.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a[k][j].is_zero()) continue;
        const DivMod dm = divmod(a[k][j], a[k][k]);
        col_axpy(a, j, dm.quotient, k);
        if (!dm.remainder.is_zero()) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the rest; otherwise fold the offending row in.
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i) {
        for (std::size_t j = k + 1; j < cols; ++j) {
          if (!a[i][j].is_zero() && !(a[i][j] % a[k][k]).is_zero()) {
            for (std::size_t c = k; c < cols; ++c) a[k][c] += a[i][c];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    out.push_back(a[k][k].monic());
  }
  return out;
}

ProjectivePoint ProjectivePoint::normalized(const Rational& alpha, const Rational& beta) {
  if (beta.is_zero()) {
    if (alpha.is_zero()) throw std::invalid_argument("(0 : 0) is not a point");
    return {Rational(1), Rational(0)};
  }
  return {alpha / beta, Rational(1)};
}

std::vector<std::pair<std::size_t, std::size_t>> PencilProfile::drop_multiset() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& d : drop_points) out.emplace_back(d.degree, d.drop);
  std::sort(out.begin(), out.end());
  return out;
}

PencilProfile power_pencil_profile(const ModulePair& v, std::size_t power) {
  if (power == 0) throw std::invalid_argument("pencil power must be positive");
  PencilProfile prof;
  prof.power = power;
  const std::size_t n = v.dim();
  if (n == 0) return prof;
  const auto k = static_cast<unsigned>(power);
  auto member = [&](const Rational& alpha, const Rational& beta) {
    return modlie::power(alpha * v.P() + beta * v.Q(), k);
  };

  prof.invariant_factors = invariant_factors(linear_power(v.P(), v.Q(), power));
  const std::size_t r = prof.invariant_factors.size();
  prof.generic_rank = r;

  Polynomial locus = Polynomial::constant(1);
  for (const auto& d : prof.invariant_factors) locus = locus * d;

  Rng rng(0x9e11 + power);
  for (;;) {
    const Rational t(static_cast<long>(rng.uniform(-1000, 1000)));
    if (locus(t).is_zero()) continue;
    if (rank(member(t, 1)) != r) {
      throw std::logic_error("generic pencil rank disagrees with a scalar evaluation");
    }
    break;
  }

  if (r > 0) {
    for (const Factor& f : factor(prof.invariant_factors.back())) {
      DropPoint dp;
      dp.factor = f.factor;
      dp.degree = static_cast<std::size_t>(f.factor.degree());
      for (const auto& d : prof.invariant_factors) {
        if ((d % f.factor).is_zero()) ++dp.drop;
      }
      if (dp.degree == 1) {
        const Rational root = -f.factor.coeff(0);
        dp.point = ProjectivePoint{root, Rational(1)};
        if (rank(member(root, 1)) + dp.drop != r) {
          throw std::logic_error("rank drop disagrees with evaluation at a rational root");
        }
      }
      prof.drop_points.push_back(std::move(dp));
    }
  }
  const std::size_t rank_inf = rank(member(1, 0));
  if (rank_inf < r) {
    DropPoint dp;
    dp.at_infinity = true;
    dp.degree = 1;
    dp.drop = r - rank_inf;
    dp.point = ProjectivePoint{Rational(1), Rational(0)};
    prof.drop_points.push_back(std::move(dp));
  }

  // Multiplicity of (1 : 0) in the locus, from the other affine chart.
  std::size_t mult_inf = 0;
  if (rank_inf < r) {
    for (const auto& d : invariant_factors(linear_power(v.Q(), v.P(), power))) {
      mult_inf += order_at_zero(d);
    }
  }
  prof.drop_form = BinaryForm::homogenize(
      locus, static_cast<std::size_t>(locus.degree()) + mult_inf);

  for (const auto& d : prof.drop_points) prof.qbar_drop_counts[d.drop] += d.degree;
  return prof;
}

PencilProfile pencil_profile(const ModulePair& v) { return power_pencil_profile(v, 1); }

namespace {

// Newton interpolation through (xs[i], ys[i]).
Polynomial interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t m = xs.size();
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = m - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
    }
  }
  Polynomial p = Polynomial::constant(ys[m - 1]);
  for (std::size_t i = m - 1; i-- > 0;) {
    p = p * Polynomial::linear(xs[i]) + Polynomial::constant(ys[i]);
  }
  return p;
}

RatMatrix submatrix(const RatMatrix& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  RatMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  }
  return s;
}

}  // namespace

RationalDrops rational_drop_points(const ModulePair& v, std::size_t power) {
  RationalDrops out;
  const std::size_t n = v.dim();
  if (n == 0) return out;
  const auto k = static_cast<unsigned>(power);
  auto member = [&](const Rational& alpha, const Rational& beta) {
    return modlie::power(alpha * v.P() + beta * v.Q(), k);
  };
  Rng rng(0x5a11 + power);
  Rational t0;
  std::size_t r = 0;
  for (int i = 0; i < 3; ++i) {
    const Rational t(static_cast<long>(rng.uniform(-1000000, 1000000)));
    const std::size_t rt = rank(member(t, 1));
    if (i == 0 || rt > r) {
      r = rt;
      t0 = t;
    }
  }
  out.generic_rank = r;
  if (r == 0) return out;

  // An r x r minor that is non-zero at t0: pivot columns of the matrix and
  // of its transpose.
  const RatMatrix m0 = member(t0, 1);
  const std::vector<std::size_t> cols = rref(m0).pivots;
  const std::vector<std::size_t> rows = rref(m0.transpose()).pivots;
  const std::size_t deg = power * r;
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i <= deg; ++i) {
    const Rational x(static_cast<long>(i));
    xs.push_back(x);
    ys.push_back(det(submatrix(member(x, 1), rows, cols)));
  }
  const Polynomial minor = interpolate(xs, ys);
  if (minor.degree() > 0) {
    for (const Rational& root : rational_roots(minor)) {
      const std::size_t rr = rank(member(root, 1));
      if (rr < r) out.points.emplace_back(ProjectivePoint{root, Rational(1)}, r - rr);
    }
  }
  const std::size_t rinf = rank(member(1, 0));
  if (rinf < r) out.points.emplace_back(ProjectivePoint{Rational(1), Rational(0)}, r - rinf);
  return out;
}

std::vector<JointEigenvalue> rational_joint_spectrum(const ModulePair& v) {
  std::vector<JointEigenvalue> out;
  const std::size_t n = v.dim();
  if (n == 0) return out;
  for (const Factor& f : factor(char_poly(v.P()))) {
    if (f.factor.degree() != 1) continue;
    const Rational lambda = -f.factor.coeff(0);
    const RatMatrix shifted = v.P() - lambda * RatMatrix::identity(n);
    const Subspace g = null_space(power(shifted, f.multiplicity));
    const ModulePair block = restrict_to(v, g.basis());
    for (const Factor& h : factor(char_poly(block.Q()))) {
      if (h.factor.degree() != 1) continue;
      out.push_back({lambda, -h.factor.coeff(0), h.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const JointEigenvalue& a, const JointEigenvalue& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return a.mu < b.mu;
  });
  return out;
}

}  // namespace modlie
