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


#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "modlie/errors.hpp"
#include "modlie/grid.hpp"
#include "modlie/matrix.hpp"
#include "modlie/poly.hpp"
#include "modlie/rational.hpp"

namespace modlie {
namespace {

RatMatrix m2(long a, long b, long c, long d) { return RatMatrix::from_rows({{a, b}, {c, d}}); }

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(Rational::parse("2/4"), Rational(1) / Rational(2));
  EXPECT_EQ(Rational::parse("-6/3").str(), "-2");
  EXPECT_EQ(Rational::parse("-3/9").str(), "-1/3");
  EXPECT_THROW(Rational::parse(" 7"), ParseError);
  EXPECT_THROW(Rational::parse("3/-9"), ParseError);
  EXPECT_EQ((Rational(1) / Rational(3) + Rational(1) / Rational(6)).str(), "1/2");
  EXPECT_THROW(Rational::parse("1/0"), InputError);
  EXPECT_THROW(Rational::parse("abc"), InputError);
  EXPECT_THROW(Rational::parse(""), InputError);
}

TEST(Rational, BigValues) {
  Rational x = Rational::parse("123456789012345678901234567890/7");
  EXPECT_EQ((x * Rational(7)).str(), "123456789012345678901234567890");
  EXPECT_THROW(Rational(0).inverse(), std::exception);
}

TEST(Rref, Examples) {
  RrefResult id = rref(RatMatrix::identity(3));
  EXPECT_EQ(id.matrix, RatMatrix::identity(3));
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2}));

  RrefResult r = rref(m2(1, 2, 2, 4));
  EXPECT_EQ(r.matrix, m2(1, 2, 0, 0));
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});

  RrefResult z = rref(RatMatrix(2, 2));
  EXPECT_TRUE(z.matrix.is_zero());
  EXPECT_TRUE(z.pivots.empty());
}

TEST(Kernel, Examples) {
  auto k = kernel_basis(m2(0, 1, 0, 0));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], unit_vector(2, 0));

  EXPECT_TRUE(kernel_basis(RatMatrix::identity(4)).empty());

  auto k2 = kernel_basis(m2(1, 2, 2, 4));
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2[0], (Vector{-2, 1}));
}

TEST(Solve, Examples) {
  Vector b{3, 5};
  EXPECT_EQ(solve(RatMatrix::identity(2), b), b);
  Vector b2{1, 2};
  EXPECT_FALSE(solve(m2(1, 1, 1, 1), b2).has_value());
  Vector b3{4, 0};
  auto x = solve(m2(2, 0, 0, 0), b3);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rational(2));
  EXPECT_EQ(m2(2, 0, 0, 0) * *x, b3);
}

TEST(RankDet, Examples) {
  const RatMatrix j2 = m2(0, 1, 0, 0);
  EXPECT_EQ(rank(j2), 1u);
  EXPECT_EQ(det(j2), Rational(0));
  for (std::size_t n : {1, 3, 6}) EXPECT_EQ(det(RatMatrix::identity(n)), Rational(1));
  EXPECT_EQ(rank(m2(1, 2, 2, 4)), 1u);
  EXPECT_THROW(det(RatMatrix(2, 3)), InputError);
  // Cofactor expansion oracle on a 3x3.
  RatMatrix a = RatMatrix::from_rows({{2, -1, 3}, {0, 4, 1}, {5, 2, -2}});
  const Rational expect = Rational(2) * (4 * -2 - 1 * 2) - Rational(-1) * (0 * -2 - 1 * 5) +
                          Rational(3) * (0 * 2 - 4 * 5);
  EXPECT_EQ(det(a), expect);
}

TEST(Inverse, RoundTrip) {
  RatMatrix a = RatMatrix::from_rows({{2, -1, 3}, {0, 4, 1}, {5, 2, -2}});
  auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(a * *inv, RatMatrix::identity(3));
  EXPECT_EQ(*inv * a, RatMatrix::identity(3));
  EXPECT_FALSE(inverse(m2(1, 2, 2, 4)).has_value());
}

TEST(CharMinPoly, Examples) {
  const RatMatrix j2 = m2(0, 1, 0, 0);
  EXPECT_EQ(char_poly(j2), Polynomial::monomial(1, 2));
  EXPECT_EQ(min_poly(j2), Polynomial::monomial(1, 2));

  const Polynomial tm1 = Polynomial::linear(1);
  EXPECT_EQ(char_poly(RatMatrix::identity(3)), tm1 * tm1 * tm1);
  EXPECT_EQ(min_poly(RatMatrix::identity(3)), tm1);

  RatMatrix d = RatMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  EXPECT_EQ(min_poly(d), tm1 * Polynomial::linear(2));
}

TEST(CharMinPoly, CayleyHamiltonAndDivisibility) {
  RatMatrix a = RatMatrix::from_rows({{1, 2, 0, 1}, {0, 1, 3, 0}, {2, 0, 1, 1}, {1, 1, 0, 0}});
  const Polynomial c = char_poly(a);
  const Polynomial m = min_poly(a);
  EXPECT_EQ(c.degree(), 4);
  EXPECT_TRUE(evaluate(c, a).is_zero());
  EXPECT_TRUE(evaluate(m, a).is_zero());
  EXPECT_TRUE((c % m).is_zero());
  EXPECT_EQ(c.coeff(3), -trace(a));
}

TEST(Factor, ReconstructsAndIsIrreducible) {
  // (t - 1)^2 (t^2 + 1) (t^3 - 2)
  const Polynomial p = Polynomial::linear(1) * Polynomial::linear(1) * Polynomial{1, 0, 1} *
                       Polynomial{-2, 0, 0, 1};
  auto fs = factor(p);
  ASSERT_EQ(fs.size(), 3u);
  Polynomial prod = Polynomial::constant(1);
  for (const Factor& f : fs) {
    for (unsigned i = 0; i < f.multiplicity; ++i) prod = prod * f.factor;
    EXPECT_TRUE(f.factor.leading().is_one());
  }
  EXPECT_EQ(prod, p.monic());
  EXPECT_EQ(fs[0].factor, Polynomial::linear(1));
  EXPECT_EQ(fs[0].multiplicity, 2u);
}

TEST(Factor, SwinnertonDyerStyleQuartic) {
  // t^4 - 10 t^2 + 1 is irreducible over Q but splits modulo every prime.
  auto fs = factor(Polynomial{1, 0, -10, 0, 1});
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_EQ(fs[0].factor.degree(), 4);
}

TEST(Factor, RationalRoots) {
  // 6 t^3 - 5 t^2 - 2 t + 1 = (t - 1)(2t - 1)... check by evaluation.
  const Polynomial p{1, -2, -5, 6};
  auto roots = rational_roots(p);
  for (const Rational& r : roots) EXPECT_TRUE(p(r).is_zero());
  EXPECT_EQ(roots.size(), 3u);
}

TEST(ExtendedGcd, Bezout) {
  const Polynomial a = Polynomial::linear(1) * Polynomial::linear(2);
  const Polynomial b = Polynomial::linear(2) * Polynomial::linear(3);
  EXPECT_EQ(gcd(a, b), Polynomial::linear(2));
  auto e = extended_gcd(Polynomial::linear(1), Polynomial::linear(3));
  EXPECT_EQ(e.s * Polynomial::linear(1) + e.t * Polynomial::linear(3), e.g);
}

TEST(BinaryForm, Homogenize) {
  BinaryForm f = BinaryForm::homogenize(Polynomial{1, 1}, 3);  // b^3 (a/b + 1) = a b^2 + b^3
  EXPECT_EQ(f.degree(), 3u);
  EXPECT_EQ(f(Rational(1), Rational(0)), Rational(0));
  EXPECT_EQ(f(Rational(2), Rational(1)), Rational(3));
  EXPECT_EQ(f.multiplicity_at_infinity(), 2u);
  EXPECT_EQ(f.dehomogenize(), (Polynomial{1, 1}));
}

GridConfig no_probes() {
  GridConfig c;
  c.random_probes = 0;
  return c;
}

TEST(Grid, LinearWitness) {
  auto r = grid_nonzero([](std::span<const Rational> t) { return t[0]; }, 1, 1, no_probes());
  ASSERT_EQ(r.status, GridStatus::kWitness);
  EXPECT_EQ(r.witness, std::vector<Rational>{1});
}

TEST(Grid, ZeroCertifiedAfterNine) {
  auto r = grid_nonzero([](std::span<const Rational>) { return Rational(0); }, 2, 2,
                        no_probes());
  EXPECT_EQ(r.status, GridStatus::kCertifiedZero);
  EXPECT_EQ(r.grid_evaluations, 9u);
  EXPECT_EQ(r.evaluations, 9u);
}

TEST(Grid, ProductMinusOne) {
  const PolyEvaluator p = [](std::span<const Rational> t) { return t[0] * t[1] - 1; };
  for (GridConfig c : {GridConfig{}, no_probes()}) {
    auto r = grid_nonzero(p, 2, 2, c);
    ASSERT_EQ(r.status, GridStatus::kWitness);
    EXPECT_FALSE(p(r.witness).is_zero());
  }
}

TEST(Grid, BudgetAndProbeCounting) {
  GridConfig c;
  c.budget = 10;
  auto r = grid_nonzero([](std::span<const Rational>) { return Rational(0); }, 3, 3, c);
  EXPECT_EQ(r.status, GridStatus::kBudgetExceeded);
  EXPECT_EQ(r.random_probes_done, c.random_probes);
  EXPECT_EQ(r.grid_evaluations, 0u);
  EXPECT_EQ(grid_size(3, 3), 64u);
  EXPECT_EQ(grid_size(64, 9), UINT64_MAX);
}

}  // namespace
}  // namespace modlie
