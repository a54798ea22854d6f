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

#ifndef MODLIE_LIE_HPP_
#define MODLIE_LIE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modlie/matrix.hpp"
#include "modlie/module.hpp"

namespace modlie {

/// Finite-dimensional Lie algebra given by dense structure constants over an
/// ordered basis: [b_i, b_j] = sum_k c(i, j, k) b_k.
class LieAlgebra {
 public:
  /// `constants` has dim^3 entries, index (i * dim + j) * dim + k. Throws
  /// InputError unless antisymmetry and the Jacobi identity hold exactly.
  LieAlgebra(std::size_t dim, std::vector<Rational> constants,
             std::vector<std::string> labels);

  std::size_t dim() const { return dim_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<std::string>& labels() const { return labels_; }

  Vector bracket(std::span<const Rational> u, std::span<const Rational> v) const;
  Vector bracket_basis(std::size_t i, std::size_t j) const;

  /// First basis triple (i < j < k) violating the Jacobi identity, if any.
  static std::optional<std::array<std::size_t, 3>> jacobi_violation(
      std::size_t dim, const std::vector<Rational>& constants);

 private:
  std::size_t dim_;
  std::vector<Rational> c_;
  std::vector<std::string> labels_;
};

/// The semidirect product K<s,t> x V on the basis (s, t, e1..en), with
/// [s, e_j] = P e_j, [t, e_j] = Q e_j and all other basis brackets zero.
LieAlgebra build_lie(const ModulePair& v);

/// Index of e_j (0-based j) inside the basis of build_lie.
inline std::size_t module_slot(std::size_t j) { return j + 2; }

/// span{[a, b] : a in A, b in B}.
Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b);
Subspace center(const LieAlgebra& l);

struct LieFingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> lower_central_dims;
  std::vector<std::size_t> derived_dims;
  std::size_t center_dim = 0;

  friend bool operator==(const LieFingerprint&, const LieFingerprint&) = default;
  friend auto operator<=>(const LieFingerprint&, const LieFingerprint&) = default;
};

/// Series are listed from the whole algebra down to the first repeated term.
LieFingerprint fingerprint(const LieAlgebra& l);

/// Linear map given by its matrix; column j holds the image of source basis
/// vector j in target coordinates.
struct LinearMap {
  RatMatrix matrix;

  std::size_t source_dim() const { return matrix.cols(); }
  std::size_t target_dim() const { return matrix.rows(); }
  Vector operator()(std::span<const Rational> v) const { return matrix * v; }
};

struct LieIsoCheck {
  bool ok = false;
  /// Basis pair (i, j) where phi([b_i, b_j]) != [phi b_i, phi b_j].
  std::optional<std::pair<std::size_t, std::size_t>> violation;
  std::string reason;
};

/// Exact check that phi is bijective and bracket-preserving on all basis pairs.
LieIsoCheck verify_lie_iso(const LieAlgebra& l1, const LieAlgebra& l2,
                           const LinearMap& phi);

/// Given X with X twist_pair(V, theta) = W X (X invertible), the Lie
/// isomorphism L_V -> L_W acting as X on the module and as theta^-1 on the
/// operator plane. Throws PreconditionViolated if X does not intertwine.
LinearMap build_lie_iso_from_module_iso(const ModulePair& v, const ModulePair& w,
                                        const Twist& theta, const RatMatrix& x);

/// How a Lie isomorphism phi: L_V -> L_W sits relative to the ideals V, W,
/// and the submodule bookkeeping that goes with it.
struct IsoShape {
  enum class Case {
    kRestrictsToModule,      // phi(V) = W
    kOperatorsSpanQuotient,  // phi(K<s,t>) + W = L_W
    kCodimensionOne,         // both quotients one-dimensional
    kOperatorsIntoIdeal,     // phi(K<s,t>) inside W
    kMixed,                  // phi(V) + W = L_W, operators quotient 1-dim
  };
  Case kind = Case::kRestrictsToModule;
  std::size_t module_quotient_dim = 0;    // dim (phi(V) + W) / W
  std::size_t operator_quotient_dim = 0;  // dim (phi(K<s,t>) + W) / W
  std::size_t v1_dim = 0, w1_dim = 0;     // V1 = phi^-1(W1), W1 = phi(V) n W
  std::size_t v_core_dim = 0, w_core_dim = 0;
  std::size_t v_complement_dim = 0, w_complement_dim = 0;
  bool v1_annihilated = false, w1_annihilated = false;
};

std::string to_string(IsoShape::Case c);

/// Requires verify_lie_iso(build_lie(V), build_lie(W), phi).ok.
IsoShape analyze_lie_iso(const ModulePair& v, const ModulePair& w,
                         const LinearMap& phi);

}  // namespace modlie

#endif  // MODLIE_LIE_HPP_
