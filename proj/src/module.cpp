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

#include "modlie/module.hpp"

#include <utility>

namespace modlie {

NonCommuting::NonCommuting(RatMatrix commutator)
    : InputError("operators do not commute: PQ - QP is nonzero"),
      commutator_(std::move(commutator)) {}

ModulePair::ModulePair(RatMatrix p, RatMatrix q, std::string name)
    : p_(std::move(p)), q_(std::move(q)), name_(std::move(name)) {
  if (!p_.is_square() || !q_.is_square()) {
    throw SizeMismatch("module operators must be square");
  }
  if (p_.rows() != q_.rows()) {
    throw SizeMismatch("module operators must have equal size");
  }
  RatMatrix c = commutator(p_, q_);
  if (!c.is_zero()) throw NonCommuting(std::move(c));
}

ModulePair ModulePair::zero(std::size_t n) {
  return ModulePair(RatMatrix(n, n), RatMatrix(n, n));
}

ModulePair ModulePair::renamed(std::string name) const {
  ModulePair out = *this;
  out.name_ = std::move(name);
  return out;
}

ModulePair ModulePair::conjugate(const RatMatrix& s) const {
  auto inv = inverse(s);
  if (!inv) throw InputError("conjugating matrix is singular");
  return ModulePair(s * p_ * *inv, s * q_ * *inv, name_);
}

ModulePair make_pair(RatMatrix p, RatMatrix q, std::string name) {
  return ModulePair(std::move(p), std::move(q), std::move(name));
}

Twist::Twist(Rational a11, Rational a12, Rational a21, Rational a22)
    : a_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {
  if (det().is_zero()) throw InputError("twist matrix is singular");
}

Twist Twist::after(const Twist& first) const {
  return Twist(a11() * first.a11() + a12() * first.a21(),
               a11() * first.a12() + a12() * first.a22(),
               a21() * first.a11() + a22() * first.a21(),
               a21() * first.a12() + a22() * first.a22());
}

Twist Twist::inverse() const {
  const Rational d = det();
  return Twist(a22() / d, -a12() / d, -a21() / d, a11() / d);
}

RatMatrix Twist::matrix() const {
  return RatMatrix::from_rows({{a11(), a12()}, {a21(), a22()}});
}

ModulePair twist_pair(const ModulePair& v, const Twist& theta) {
  return ModulePair(theta.a11() * v.P() + theta.a12() * v.Q(),
                    theta.a21() * v.P() + theta.a22() * v.Q(), v.name());
}

ModulePair direct_sum(const ModulePair& v, const ModulePair& w) {
  return ModulePair(RatMatrix::block_diagonal(v.P(), w.P()),
                    RatMatrix::block_diagonal(v.Q(), w.Q()));
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning)
    : ambient_(ambient_dim) {
  if (spanning.empty()) return;
  for (const auto& v : spanning) {
    if (v.size() != ambient_dim) throw SizeMismatch("vector outside ambient space");
  }
  auto [r, pivots] = rref(RatMatrix::from_rows(spanning));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    basis_.emplace_back(r.row(i).begin(), r.row(i).end());
  }
  pivots_ = std::move(pivots);
}

Subspace Subspace::whole(std::size_t n) {
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(n, i));
  return Subspace(n, e);
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw SizeMismatch("vector outside ambient space");
  // Reduce against the rref basis; v lies in the span iff the residue is 0.
  Vector r(v.begin(), v.end());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational c = r[pivots_[k]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!basis_[k][j].is_zero()) r[j] -= c * basis_[k][j];
    }
  }
  return modlie::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

bool Subspace::is_invariant(const RatMatrix& m) const {
  for (const auto& v : basis_) {
    if (!contains(m * v)) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (dim() == 0 || other.dim() == 0) return zero(ambient_);
  // Solve sum a_i u_i - sum b_j w_j = 0 and map the a-part back.
  const std::size_t k = dim();
  std::vector<Vector> cols = basis_;
  for (const auto& w : other.basis_) {
    Vector neg(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
    cols.push_back(std::move(neg));
  }
  std::vector<Vector> out;
  for (const auto& x : kernel_basis(RatMatrix::from_columns(cols, ambient_))) {
    Vector v(ambient_);
    for (std::size_t i = 0; i < k; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j) v[j] += x[i] * basis_[i][j];
    }
    out.push_back(std::move(v));
  }
  return Subspace(ambient_, out);
}

std::vector<Vector> Subspace::complement_in(const Subspace& super) const {
  std::vector<Vector> out;
  Subspace acc = *this;
  for (const auto& v : super.basis()) {
    if (acc.contains(v)) continue;
    out.push_back(v);
    acc = acc.sum(Subspace(ambient_, {v}));
  }
  return out;
}

Subspace column_space(const RatMatrix& m) {
  return Subspace(m.rows(), [&] {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return cols;
  }());
}

Subspace null_space(const RatMatrix& m) {
  return Subspace(m.cols(), kernel_basis(m));
}

Subspace annihilator(const ModulePair& v) {
  RatMatrix stacked(2 * v.dim(), v.dim());
  stacked.set_block(0, 0, v.P());
  stacked.set_block(v.dim(), 0, v.Q());
  return null_space(stacked);
}

Subspace image_span(const ModulePair& v) {
  RatMatrix side(v.dim(), 2 * v.dim());
  side.set_block(0, 0, v.P());
  side.set_block(0, v.dim(), v.Q());
  return column_space(side);
}

std::size_t operator_span_dim(const ModulePair& v) {
  return Subspace(v.dim() * v.dim(), {flatten(v.P()), flatten(v.Q())}).dim();
}

Subspace submodule_generated(const ModulePair& v, const std::vector<Vector>& gens) {
  Subspace acc(v.dim(), gens);
  for (;;) {
    std::vector<Vector> next = acc.basis();
    for (const auto& b : acc.basis()) {
      next.push_back(v.P() * b);
      next.push_back(v.Q() * b);
    }
    Subspace grown(v.dim(), next);
    if (grown.dim() == acc.dim()) return acc;
    acc = std::move(grown);
  }
}

ModulePair restrict_to(const ModulePair& v, const std::vector<Vector>& basis) {
  const std::size_t k = basis.size();
  const RatMatrix b = RatMatrix::from_columns(basis, v.dim());
  if (rank(b) != k) throw InputError("restriction basis is not independent");
  auto coords = [&](const RatMatrix& op) {
    RatMatrix out(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto x = solve(b, op * basis[j]);
      if (!x) throw PreconditionViolated("subspace is not invariant");
      for (std::size_t i = 0; i < k; ++i) out(i, j) = (*x)[i];
    }
    return out;
  };
  return ModulePair(coords(v.P()), coords(v.Q()));
}

}  // namespace modlie
