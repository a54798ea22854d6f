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

#include "modlie/lie.hpp"

#include <utility>

namespace modlie {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Rational> constants,
                       std::vector<std::string> labels)
    : dim_(dim), c_(std::move(constants)), labels_(std::move(labels)) {
  if (c_.size() != dim_ * dim_ * dim_) {
    throw SizeMismatch("structure constants need dim^3 entries");
  }
  if (labels_.size() != dim_) throw SizeMismatch("one label per basis vector");
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        if (c(i, j, k) != -c(j, i, k)) {
          throw InputError("structure constants are not antisymmetric");
        }
      }
    }
  }
  if (auto bad = jacobi_violation(dim_, c_)) {
    throw InputError("Jacobi identity fails on basis triple (" +
                     labels_[(*bad)[0]] + ", " + labels_[(*bad)[1]] + ", " +
                     labels_[(*bad)[2]] + ")");
  }
}

std::optional<std::array<std::size_t, 3>> LieAlgebra::jacobi_violation(
    std::size_t n, const std::vector<Rational>& c) {
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& {
    return c[(i * n + j) * n + k];
  };
  // [b_i, [b_j, b_k]] expanded in the basis.
  auto nested = [&](std::size_t i, std::size_t j, std::size_t k, Vector& acc) {
    for (std::size_t m = 0; m < n; ++m) {
      const Rational& cjk = at(j, k, m);
      if (cjk.is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l) {
        const Rational& cim = at(i, m, l);
        if (!cim.is_zero()) acc[l] += cjk * cim;
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector acc(n);
        nested(i, j, k, acc);
        nested(j, k, i, acc);
        nested(k, i, j, acc);
        if (!is_zero(acc)) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

Vector LieAlgebra::bracket(std::span<const Rational> u,
                           std::span<const Rational> v) const {
  if (u.size() != dim_ || v.size() != dim_) {
    throw SizeMismatch("bracket arguments outside the algebra");
  }
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      const Rational uv = u[i] * v[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!c(i, j, k).is_zero()) out[k] += uv * c(i, j, k);
      }
    }
  }
  return out;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
  return out;
}

LieAlgebra build_lie(const ModulePair& v) {
  const std::size_t n = v.dim();
  const std::size_t d = n + 2;
  std::vector<Rational> c(d * d * d);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& {
    return c[(i * d + j) * d + k];
  };
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& p = v.P()(i, j);
      const Rational& q = v.Q()(i, j);
      at(0, module_slot(j), module_slot(i)) = p;
      at(module_slot(j), 0, module_slot(i)) = -p;
      at(1, module_slot(j), module_slot(i)) = q;
      at(module_slot(j), 1, module_slot(i)) = -q;
    }
  }
  std::vector<std::string> labels{"s", "t"};
  for (std::size_t j = 0; j < n; ++j) labels.push_back("e" + std::to_string(j + 1));
  return LieAlgebra(d, std::move(c), std::move(labels));
}

Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
  std::vector<Vector> out;
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) {
      Vector z = l.bracket(x, y);
      if (!is_zero(z)) out.push_back(std::move(z));
    }
  }
  return Subspace(l.dim(), out);
}

Subspace center(const LieAlgebra& l) {
  const std::size_t d = l.dim();
  // Row (i, k) of the system: sum_j u_j c(j, i, k) = 0.
  RatMatrix sys(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) sys(i * d + k, j) = l.c(j, i, k);
  return null_space(sys);
}

LieFingerprint fingerprint(const LieAlgebra& l) {
  LieFingerprint fp;
  fp.dim = l.dim();
  const Subspace whole = Subspace::whole(l.dim());

  Subspace gamma = whole;
  fp.lower_central_dims.push_back(gamma.dim());
  for (;;) {
    Subspace next = bracket_span(l, whole, gamma);
    if (next.dim() == gamma.dim()) break;
    gamma = std::move(next);
    fp.lower_central_dims.push_back(gamma.dim());
  }

  Subspace derived = whole;
  fp.derived_dims.push_back(derived.dim());
  for (;;) {
    Subspace next = bracket_span(l, derived, derived);
    if (next.dim() == derived.dim()) break;
    derived = std::move(next);
    fp.derived_dims.push_back(derived.dim());
  }

  fp.center_dim = center(l).dim();
  return fp;
}

LieIsoCheck verify_lie_iso(const LieAlgebra& l1, const LieAlgebra& l2,
                           const LinearMap& phi) {
  LieIsoCheck out;
  if (l1.dim() != l2.dim() || phi.source_dim() != l1.dim() ||
      phi.target_dim() != l2.dim()) {
    out.reason = "dimension mismatch";
    return out;
  }
  if (rank(phi.matrix) != l1.dim()) {
    out.reason = "map is not invertible";
    return out;
  }
  const std::size_t d = l1.dim();
  std::vector<Vector> images;
  for (std::size_t j = 0; j < d; ++j) images.push_back(phi.matrix.column(j));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (phi(l1.bracket_basis(i, j)) != l2.bracket(images[i], images[j])) {
        out.violation = std::make_pair(i, j);
        out.reason = "bracket not preserved on (" + l1.labels()[i] + ", " +
                     l1.labels()[j] + ")";
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

LinearMap build_lie_iso_from_module_iso(const ModulePair& v, const ModulePair& w,
                                        const Twist& theta, const RatMatrix& x) {
  const std::size_t n = v.dim();
  if (w.dim() != n || x.rows() != n || x.cols() != n) {
    throw PreconditionViolated("module isomorphism has the wrong shape");
  }
  const ModulePair tv = twist_pair(v, theta);
  if (x * tv.P() != w.P() * x || x * tv.Q() != w.Q() * x) {
    throw PreconditionViolated("X does not intertwine twist_pair(V, theta) with W");
  }
  if (rank(x) != n) throw PreconditionViolated("X is not invertible");
  const Twist inv = theta.inverse();
  RatMatrix m(n + 2, n + 2);
  m(0, 0) = inv.a11();
  m(1, 0) = inv.a12();
  m(0, 1) = inv.a21();
  m(1, 1) = inv.a22();
  m.set_block(2, 2, x);
  return LinearMap{std::move(m)};
}

std::string to_string(IsoShape::Case c) {
  switch (c) {
    case IsoShape::Case::kRestrictsToModule: return "restricts-to-module";
    case IsoShape::Case::kOperatorsSpanQuotient: return "operators-span-quotient";
    case IsoShape::Case::kCodimensionOne: return "codimension-one";
    case IsoShape::Case::kOperatorsIntoIdeal: return "operators-into-ideal";
    case IsoShape::Case::kMixed: return "mixed";
  }
  return "unknown";
}

namespace {

Vector drop_operator_part(std::span<const Rational> v) {
  return Vector(v.begin() + 2, v.end());
}

}  // namespace

IsoShape analyze_lie_iso(const ModulePair& v, const ModulePair& w,
                         const LinearMap& phi) {
  const std::size_t n = v.dim();
  const std::size_t d = n + 2;
  if (w.dim() != n || phi.source_dim() != d || phi.target_dim() != d) {
    throw PreconditionViolated("analyze_lie_iso: dimension mismatch");
  }
  std::vector<Vector> ideal_gens, phi_v_gens, phi_op_gens;
  for (std::size_t j = 0; j < n; ++j) {
    ideal_gens.push_back(unit_vector(d, module_slot(j)));
    phi_v_gens.push_back(phi.matrix.column(module_slot(j)));
  }
  phi_op_gens = {phi.matrix.column(0), phi.matrix.column(1)};
  const Subspace ideal(d, ideal_gens);
  const Subspace phi_v(d, phi_v_gens);
  const Subspace phi_ops(d, phi_op_gens);

  IsoShape shape;
  shape.module_quotient_dim = phi_v.sum(ideal).dim() - n;
  shape.operator_quotient_dim = phi_ops.sum(ideal).dim() - n;
  using Case = IsoShape::Case;
  if (shape.module_quotient_dim == 0) {
    shape.kind = Case::kRestrictsToModule;
  } else if (shape.operator_quotient_dim == 2) {
    shape.kind = Case::kOperatorsSpanQuotient;
  } else if (shape.module_quotient_dim == 1) {
    shape.kind = Case::kCodimensionOne;
  } else if (shape.operator_quotient_dim == 0) {
    shape.kind = Case::kOperatorsIntoIdeal;
  } else {
    shape.kind = Case::kMixed;
  }

  const Subspace w1_lie = phi_v.intersect(ideal);
  std::vector<Vector> w1_gens, v1_gens;
  for (const auto& b : w1_lie.basis()) {
    w1_gens.push_back(drop_operator_part(b));
    auto pre = solve(phi.matrix, b);
    if (!pre) throw PreconditionViolated("analyze_lie_iso: map is not invertible");
    v1_gens.push_back(drop_operator_part(*pre));
  }
  const Subspace v1(n, v1_gens), w1(n, w1_gens);
  shape.v1_dim = v1.dim();
  shape.w1_dim = w1.dim();
  shape.v1_annihilated = annihilator(v).contains(v1);
  shape.w1_annihilated = annihilator(w).contains(w1);

  const Subspace v0 = submodule_generated(v, v1.complement_in(Subspace::whole(n)));
  std::vector<Vector> w_gens;
  if (shape.kind == Case::kOperatorsIntoIdeal) {
    w_gens = {drop_operator_part(phi_op_gens[0]), drop_operator_part(phi_op_gens[1])};
  } else {
    w_gens = w1.complement_in(Subspace::whole(n));
  }
  const Subspace w0 = submodule_generated(w, w_gens);
  shape.v_core_dim = v0.dim();
  shape.w_core_dim = w0.dim();
  shape.v_complement_dim = v1.dim() - v0.intersect(v1).dim();
  shape.w_complement_dim = w1.dim() - w0.intersect(w1).dim();
  return shape;
}

}  // namespace modlie
