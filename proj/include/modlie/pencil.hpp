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


#ifndef MODLIE_PENCIL_HPP_
#define MODLIE_PENCIL_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "modlie/module.hpp"
#include "modlie/poly.hpp"

namespace modlie {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

/// a t + b.
PolyMatrix linear_pencil(const RatMatrix& a, const RatMatrix& b);

/// Monic non-zero invariant factors d1 | d2 | ... of a matrix over Q[t]
/// (Smith normal form).
std::vector<Polynomial> invariant_factors(PolyMatrix m);

/// A point (alpha : beta) of the projective line, normalized to (t : 1) or
/// (1 : 0).
struct ProjectivePoint {
  Rational alpha = 0;
  Rational beta = 1;

  static ProjectivePoint normalized(const Rational& alpha, const Rational& beta);
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (auto c = a.beta <=> b.beta; c != 0) return c;
    return a.alpha <=> b.alpha;
  }
};

struct DropPoint {
  // Irreducible factor of the locus in the chart t = alpha / beta; zero for
  // the point at infinity.
  Polynomial factor;
  bool at_infinity = false;
  std::size_t degree = 1;  // conjugate roots over the closure
  std::size_t drop = 0;
  std::optional<ProjectivePoint> point;  // set when degree == 1
};

struct PencilProfile {
  std::size_t power = 1;  // profile of (alpha P + beta Q)^power
  std::size_t generic_rank = 0;
  std::vector<Polynomial> invariant_factors;  // of (t P + Q)^power
  std::vector<DropPoint> drop_points;
  BinaryForm drop_form;  // gcd of the generic_rank-sized minors
  std::map<std::size_t, std::size_t> qbar_drop_counts;  // drop -> roots

  /// Multiset of (factor degree, drop), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> drop_multiset() const;
};

PencilProfile pencil_profile(const ModulePair& v);
PencilProfile power_pencil_profile(const ModulePair& v, std::size_t power);

struct RationalDrops {
  std::size_t generic_rank = 0;
  std::vector<std::pair<ProjectivePoint, std::size_t>> points;  // (point, drop)
};

/// Rational points where rank (alpha P + beta Q)^power falls below its
/// generic value, located through the roots of one maximal minor and
/// confirmed by direct rank evaluation. The generic rank is taken as the
/// largest rank seen at a few seeded sample points.
RationalDrops rational_drop_points(const ModulePair& v, std::size_t power);

struct JointEigenvalue {
  Rational lambda;
  Rational mu;
  std::size_t multiplicity = 0;
  friend bool operator==(const JointEigenvalue&, const JointEigenvalue&) = default;
};

/// Joint eigenvalues (lambda, mu) with both coordinates rational, with the
/// dimensions of the joint generalized eigenspaces. Sorted.
std::vector<JointEigenvalue> rational_joint_spectrum(const ModulePair& v);

}  // namespace modlie

#endif  // MODLIE_PENCIL_HPP_
