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

#include "modlie/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "modlie/errors.hpp"

namespace modlie {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) {
  return Polynomial({-root, Rational(1)});
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  const Rational inv = leading().inverse();
  for (auto& c : p.c_) c *= inv;
  return p;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    d.push_back(c_[i] * Rational(static_cast<long>(i)));
  }
  return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto ai = a.coeff(static_cast<std::size_t>(i));
    const auto bi = b.coeff(static_cast<std::size_t>(i));
    if (ai != bi) return ai < bi;
  }
  return false;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0 || !mag.is_one()) {
      out += mag.str();
      if (i > 0) out += "*";
    }
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] * inv;
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -=
          c * b.coeff(static_cast<std::size_t>(j));
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) {
  return divmod(a, b).quotient;
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) {
  return divmod(a, b).remainder;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Polynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Polynomial(), Polynomial(), Polynomial()};
  const Rational inv = r0.leading().inverse();
  return {inv * r0, inv * s0, inv * t0};
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_constant()) return p.is_zero() ? p : Polynomial::constant(1);
  return (p / gcd(p, p.derivative())).monic();
}

namespace {

// Yun's algorithm: p = prod_i a_i^i with a_i squarefree and coprime.
std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(
    const Polynomial& p) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  Polynomial f = p.monic();
  if (f.degree() < 1) return out;
  Polynomial d = f.derivative();
  Polynomial a = gcd(f, d);
  Polynomial b = f / a;
  Polynomial c = d / a;
  Polynomial e = c - b.derivative();
  unsigned i = 1;
  while (b.degree() >= 1) {
    Polynomial g = gcd(b, e);
    if (g.degree() >= 1) out.emplace_back(g, i);
    b = b / g;
    c = e / g;
    e = c - b.derivative();
    ++i;
  }
  return out;
}

// Primitive integer polynomial with positive leading coefficient that is a
// rational multiple of p.
Polynomial primitive_integer(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  for (const auto& c : p.coefficients()) {
    ints.push_back(c.num() * (l / c.den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (p.leading().sign() < 0) g = -g;
  std::vector<Rational> out;
  for (auto& v : ints) out.emplace_back(mpz_class(v / g), mpz_class(1));
  return Polynomial(std::move(out));
}

}  // namespace

std::vector<Factor> factor(const Polynomial& p) {
  std::vector<Factor> out;
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (const auto& f : zassenhaus(primitive_integer(part))) {
      out.push_back({f.monic(), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    return canonical_less(a.factor, b.factor);
  });
  return out;
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  std::vector<Rational> roots;
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  for (const auto& f : factor(p)) {
    if (f.factor.degree() == 1) roots.push_back(-f.factor.coeff(0));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RatMatrix evaluate(const Polynomial& p, const RatMatrix& m) {
  if (!m.is_square()) throw InputError("polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix acc(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (!c.is_zero()) {
      for (std::size_t k = 0; k < n; ++k) acc(k, k) += c;
    }
  }
  return acc;
}

Polynomial char_poly(const RatMatrix& m) {
  if (!m.is_square()) throw InputError("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier; exact over a field of characteristic zero.
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -trace(m * mk) / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

Polynomial min_poly(const RatMatrix& m) {
  if (!m.is_square()) throw InputError("minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vector> powers{flatten(RatMatrix::identity(n))};
  RatMatrix cur = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    cur = cur * m;
    const Vector target = flatten(cur);
    const auto basis = RatMatrix::from_columns(powers, n * n);
    if (auto x = solve(basis, target)) {
      std::vector<Rational> coeffs(k + 1);
      for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*x)[i];
      coeffs[k] = 1;
      return Polynomial(std::move(coeffs));
    }
    powers.push_back(target);
  }
  throw std::logic_error("minimal polynomial exceeds the matrix size");
}

BinaryForm::BinaryForm(std::size_t degree, std::vector<Rational> coeffs)
    : degree_(degree), c_(std::move(coeffs)) {
  if (c_.size() != degree_ + 1) {
    throw SizeMismatch("binary form needs degree + 1 coefficients");
  }
}

BinaryForm BinaryForm::homogenize(const Polynomial& f, std::size_t degree) {
  if (f.degree() > static_cast<int>(degree)) {
    throw InputError("homogenization degree below polynomial degree");
  }
  std::vector<Rational> c(degree + 1);
  // c_k multiplies a^(d-k) b^k, which is t^(d-k) after setting b = 1.
  for (std::size_t k = 0; k <= degree; ++k) c[k] = f.coeff(degree - k);
  return BinaryForm(degree, std::move(c));
}

bool BinaryForm::is_zero() const { return modlie::is_zero(c_); }

Rational BinaryForm::operator()(const Rational& a, const Rational& b) const {
  Rational acc;
  for (std::size_t k = 0; k <= degree_; ++k) {
    Rational term = c_[k];
    for (std::size_t i = 0; i < degree_ - k; ++i) term *= a;
    for (std::size_t i = 0; i < k; ++i) term *= b;
    acc += term;
  }
  return acc;
}

Polynomial BinaryForm::dehomogenize() const {
  std::vector<Rational> f(degree_ + 1);
  for (std::size_t k = 0; k <= degree_; ++k) f[degree_ - k] = c_[k];
  return Polynomial(std::move(f));
}

std::size_t BinaryForm::multiplicity_at_infinity() const {
  std::size_t m = 0;
  while (m <= degree_ && c_[m].is_zero()) ++m;
  return m;
}

}  // namespace modlie
