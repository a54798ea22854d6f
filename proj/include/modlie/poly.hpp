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

#ifndef MODLIE_POLY_HPP_
#define MODLIE_POLY_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "modlie/matrix.hpp"
#include "modlie/rational.hpp"

namespace modlie {

/// Univariate polynomial over the rationals, coefficients stored from the
/// constant term upward with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs)
      : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// t - root
  static Polynomial linear(const Rational& root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Total order: by degree, then coefficients from the leading term down.
  friend bool canonical_less(const Polynomial& a, const Polynomial& b);

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// g = s a + t b with g the monic gcd.
struct ExtendedGcd {
  Polynomial g, s, t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

Polynomial squarefree_part(const Polynomial& p);

struct Factor {
  Polynomial factor;  // monic irreducible over the rationals
  unsigned multiplicity;
};

/// Complete factorization over the rationals into monic irreducibles
/// (squarefree decomposition, then Zassenhaus on each part). Factors are
/// sorted by `canonical_less`. The constant content is dropped.
std::vector<Factor> factor(const Polynomial& p);

/// Factorization of a squarefree primitive integer polynomial. Exposed for
/// testing; inputs are given as rational polynomials with integer entries.
std::vector<Polynomial> zassenhaus(const Polynomial& squarefree_integer_poly);

std::vector<Rational> rational_roots(const Polynomial& p);

RatMatrix evaluate(const Polynomial& p, const RatMatrix& m);
Polynomial char_poly(const RatMatrix& m);
Polynomial min_poly(const RatMatrix& m);

/// Homogeneous form c_0 a^d + c_1 a^(d-1) b + ... + c_d b^d. The degree is
/// tagged explicitly so the zero form and forms divisible by b keep it.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(std::size_t degree, std::vector<Rational> coeffs);

  /// Homogenizes f(t), t = a/b, to the given degree >= deg f.
  static BinaryForm homogenize(const Polynomial& f, std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const;
  Rational operator()(const Rational& a, const Rational& b) const;
  /// f(t) = F(t, 1).
  Polynomial dehomogenize() const;
  /// Multiplicity of the root (1 : 0), i.e. of the factor b.
  std::size_t multiplicity_at_infinity() const;
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::size_t degree_ = 0;
  std::vector<Rational> c_{Rational(0)};
};

}  // namespace modlie

#endif  // MODLIE_POLY_HPP_
