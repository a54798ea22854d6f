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

#ifndef MODLIE_MODULE_HPP_
#define MODLIE_MODULE_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "modlie/errors.hpp"
#include "modlie/matrix.hpp"

namespace modlie {

/// Raised when P and Q do not commute; carries PQ - QP.
class NonCommuting : public InputError {
 public:
  explicit NonCommuting(RatMatrix commutator);
  const RatMatrix& commutator() const { return commutator_; }

 private:
  RatMatrix commutator_;
};

/// A finite-dimensional K[x,y]-module: x acts by P, y by Q, PQ = QP.
class ModulePair {
 public:
  /// Throws SizeMismatch or NonCommuting.
  ModulePair(RatMatrix p, RatMatrix q, std::string name = {});

  static ModulePair zero(std::size_t n);

  std::size_t dim() const { return p_.rows(); }
  const RatMatrix& P() const { return p_; }
  const RatMatrix& Q() const { return q_; }
  const std::string& name() const { return name_; }
  ModulePair renamed(std::string name) const;

  /// (S P S^-1, S Q S^-1). Throws InputError if S is singular.
  ModulePair conjugate(const RatMatrix& s) const;

  /// Equality of the operators; the label is ignored.
  friend bool operator==(const ModulePair& a, const ModulePair& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  RatMatrix p_;
  RatMatrix q_;
  std::string name_;
};

ModulePair make_pair(RatMatrix p, RatMatrix q, std::string name = {});

/// Linear automorphism x -> a11 x + a12 y, y -> a21 x + a22 y.
class Twist {
 public:
  Twist(Rational a11, Rational a12, Rational a21, Rational a22);

  static Twist identity() { return Twist(1, 0, 0, 1); }
  static Twist swap() { return Twist(0, 1, 1, 0); }

  const Rational& a11() const { return a_[0]; }
  const Rational& a12() const { return a_[1]; }
  const Rational& a21() const { return a_[2]; }
  const Rational& a22() const { return a_[3]; }
  Rational det() const { return a_[0] * a_[3] - a_[1] * a_[2]; }

  /// Twisting by `first` and then by `*this` equals twisting by the product.
  Twist after(const Twist& first) const;
  Twist inverse() const;
  RatMatrix matrix() const;

  friend bool operator==(const Twist&, const Twist&) = default;

 private:
  std::array<Rational, 4> a_;
};

ModulePair twist_pair(const ModulePair& v, const Twist& theta);
ModulePair direct_sum(const ModulePair& v, const ModulePair& w);

/// Subspace of Q^n in canonical form: the nonzero rows of the rref of the
/// spanning vectors. Equal subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning);

  static Subspace zero(std::size_t n) { return Subspace(n, {}); }
  static Subspace whole(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;
  bool is_invariant(const RatMatrix& m) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Vectors spanning a complement of *this inside `super` (which must
  /// contain *this).
  std::vector<Vector> complement_in(const Subspace& super) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace column_space(const RatMatrix& m);
Subspace null_space(const RatMatrix& m);

/// Common kernel of P and Q.
Subspace annihilator(const ModulePair& v);
/// Column space of [P | Q].
Subspace image_span(const ModulePair& v);
/// dim span{P, Q} in matrix space, in {0, 1, 2}.
std::size_t operator_span_dim(const ModulePair& v);
/// Smallest P- and Q-invariant subspace containing the generators.
Subspace submodule_generated(const ModulePair& v, const std::vector<Vector>& gens);

/// The module structure on an invariant subspace, in the given basis.
ModulePair restrict_to(const ModulePair& v, const std::vector<Vector>& basis);

}  // namespace modlie

#endif  // MODLIE_MODULE_HPP_
