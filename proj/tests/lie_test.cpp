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

#include <vector>

#include "modlie/errors.hpp"
#include "modlie/fixtures.hpp"
#include "modlie/lie.hpp"
#include "modlie/rng.hpp"

namespace modlie {
namespace {

const RatMatrix kJ2 = RatMatrix::from_rows({{0, 1}, {0, 0}});

Vector basis_vec(const LieAlgebra& l, std::size_t i) { return unit_vector(l.dim(), i); }

TEST(BuildLie, OneDimensional) {
  const ModulePair v(RatMatrix::from_rows({{3}}), RatMatrix::from_rows({{-2}}));
  const LieAlgebra l = build_lie(v);
  ASSERT_EQ(l.dim(), 3u);
  EXPECT_EQ(l.bracket_basis(0, 2), (Vector{0, 0, 3}));
  EXPECT_EQ(l.bracket_basis(1, 2), (Vector{0, 0, -2}));
  EXPECT_EQ(l.bracket_basis(2, 0), (Vector{0, 0, -3}));
  EXPECT_EQ(l.bracket_basis(0, 1), zero_vector(3));
}

TEST(BuildLie, LemmaV) {
  const LieAlgebra l = build_lie(lemma_v());
  ASSERT_EQ(l.dim(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      Vector expect = zero_vector(6);
      if (i == 0 && (j == 2 || j == 3)) expect[j + 2] = 1;
      if (j == 0 && (i == 2 || i == 3)) expect[i + 2] = -1;
      EXPECT_EQ(l.bracket_basis(i, j), expect) << i << "," << j;
    }
  }
  EXPECT_EQ(l.bracket(basis_vec(l, 4), basis_vec(l, 5)), zero_vector(6));
}

TEST(BuildLie, ZeroPairIsAbelian) {
  const LieAlgebra l = build_lie(ModulePair::zero(3));
  EXPECT_EQ(l.dim(), 5u);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(l.bracket_basis(i, j), zero_vector(5));
}

TEST(LieAlgebra, RejectsBadConstants) {
  std::vector<Rational> c(27, Rational(0));
  c[(0 * 3 + 1) * 3 + 2] = 1;  // [b0, b1] = b2 without [b1, b0] = -b2
  EXPECT_THROW(LieAlgebra(3, c, {"a", "b", "c"}), InputError);
}

TEST(LieAlgebra, JacobiViolationFound) {
  // [a,b] = a, [b,c] = b, [a,c] = 0; Jacobi fails on (a, b, c).
  std::vector<Rational> c(27, Rational(0));
  auto set = [&](int i, int j, int k, long x) {
    c[(i * 3 + j) * 3 + k] = x;
    c[(j * 3 + i) * 3 + k] = -x;
  };
  set(0, 1, 0, 1);
  set(1, 2, 1, 1);
  EXPECT_TRUE(LieAlgebra::jacobi_violation(3, c).has_value());
  EXPECT_THROW(LieAlgebra(3, c, {"a", "b", "c"}), InputError);
}

TEST(Bracket, Antisymmetric) {
  Rng rng(5);
  const LieAlgebra l = build_lie(random_pair(4, Profile::kGeneric, rng));
  for (int trial = 0; trial < 10; ++trial) {
    Vector u(l.dim()), w(l.dim());
    for (auto& x : u) x = rng.uniform(-5, 5);
    for (auto& x : w) x = rng.uniform(-5, 5);
    EXPECT_EQ(l.bracket(u, u), zero_vector(l.dim()));
    Vector a = l.bracket(u, w), b = l.bracket(w, u);
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k], -b[k]);
  }
}

TEST(Fingerprint, Examples) {
  const LieFingerprint fv = fingerprint(build_lie(lemma_v()));
  EXPECT_EQ(fv.dim, 6u);
  EXPECT_EQ(fv.derived_dims, (std::vector<std::size_t>{6, 2, 0}));
  EXPECT_EQ(fv.lower_central_dims, (std::vector<std::size_t>{6, 2, 0}));
  EXPECT_EQ(fv.center_dim, 3u);
  EXPECT_EQ(center(build_lie(lemma_v())),
            Subspace(6, {unit_vector(6, 1), unit_vector(6, 4), unit_vector(6, 5)}));

  const LieFingerprint fw = fingerprint(build_lie(lemma_w()));
  EXPECT_EQ(fw, fv);
  EXPECT_EQ(center(build_lie(lemma_w())),
            Subspace(6, {unit_vector(6, 3), unit_vector(6, 4), unit_vector(6, 5)}));

  const LieFingerprint fa = fingerprint(build_lie(ModulePair::zero(2)));
  EXPECT_EQ(fa.dim, 4u);
  EXPECT_EQ(fa.derived_dims, (std::vector<std::size_t>{4, 0}));
  EXPECT_EQ(fa.center_dim, 4u);
}

TEST(Fingerprint, JordanLowerCentralSeries) {
  // gamma_k of (J_n, 0) shrinks by one each step inside the module.
  const LieFingerprint f = fingerprint(build_lie(ModulePair(jordan_block(4), RatMatrix(4, 4))));
  EXPECT_EQ(f.lower_central_dims, (std::vector<std::size_t>{6, 3, 2, 1, 0}));
  EXPECT_EQ(f.derived_dims, (std::vector<std::size_t>{6, 3, 0}));
}

TEST(VerifyLieIso, Examples) {
  const LieAlgebra lv = build_lie(lemma_v()), lw = build_lie(lemma_w());
  EXPECT_TRUE(verify_lie_iso(lv, lv, LinearMap{RatMatrix::identity(6)}).ok);
  EXPECT_TRUE(verify_lie_iso(lv, lw, lemma_lie_map()).ok);

  RatMatrix swap_st = RatMatrix::identity(6);
  swap_st(0, 0) = 0;
  swap_st(1, 1) = 0;
  swap_st(0, 1) = 1;
  swap_st(1, 0) = 1;
  const LieIsoCheck bad = verify_lie_iso(lv, lv, LinearMap{swap_st});
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.violation.has_value());
  EXPECT_EQ(*bad.violation, (std::pair<std::size_t, std::size_t>{0, 2}));

  EXPECT_FALSE(verify_lie_iso(lv, lw, LinearMap{RatMatrix(6, 6)}).ok);
}

TEST(LieIsoFromModuleIso, Examples) {
  const ModulePair v = lemma_v();
  const LinearMap id = build_lie_iso_from_module_iso(v, v, Twist::identity(),
                                                     RatMatrix::identity(4));
  EXPECT_EQ(id.matrix, RatMatrix::identity(6));

  const ModulePair left(kJ2, RatMatrix(2, 2)), right(RatMatrix(2, 2), kJ2);
  const LinearMap sw =
      build_lie_iso_from_module_iso(left, right, Twist::swap(), RatMatrix::identity(2));
  EXPECT_TRUE(verify_lie_iso(build_lie(left), build_lie(right), sw).ok);
  EXPECT_EQ(sw.matrix(0, 1), Rational(1));
  EXPECT_EQ(sw.matrix(1, 0), Rational(1));
  EXPECT_EQ(sw.matrix(0, 0), Rational(0));

  Rng rng(3);
  const RatMatrix s = random_invertible(4, rng);
  const ModulePair w = v.conjugate(s);
  const LinearMap phi = build_lie_iso_from_module_iso(v, w, Twist::identity(), s);
  EXPECT_EQ(phi.matrix, RatMatrix::block_diagonal(RatMatrix::identity(2), s));
  EXPECT_TRUE(verify_lie_iso(build_lie(v), build_lie(w), phi).ok);

  EXPECT_THROW(build_lie_iso_from_module_iso(left, right, Twist::identity(),
                                             RatMatrix::identity(2)),
               PreconditionViolated);
}

TEST(LieIsoFromModuleIso, RandomTwists) {
  Rng rng(17);
  for (int i = 0; i < 15; ++i) {
    const ModulePair v = random_pair(1 + i % 4, Profile::kGeneric, rng);
    const Twist theta = random_twist(rng);
    const RatMatrix s = random_invertible(v.dim(), rng);
    const ModulePair w = twist_pair(v, theta).conjugate(s);
    const LinearMap phi = build_lie_iso_from_module_iso(v, w, theta, s);
    EXPECT_TRUE(verify_lie_iso(build_lie(v), build_lie(w), phi).ok);
  }
}

TEST(AnalyzeLieIso, LemmaShape) {
  const IsoShape shape = analyze_lie_iso(lemma_v(), lemma_w(), lemma_lie_map());
  EXPECT_EQ(shape.v_core_dim, 4u);
  EXPECT_EQ(shape.w_core_dim, 4u);
  EXPECT_EQ(shape.v_complement_dim, 0u);
  EXPECT_EQ(shape.w_complement_dim, 0u);
  EXPECT_EQ(shape.module_quotient_dim, 2u);
  EXPECT_EQ(shape.kind, IsoShape::Case::kOperatorsIntoIdeal);
}

TEST(AnalyzeLieIso, RestrictingIsoGivesModuleCase) {
  const ModulePair v = lemma_v();
  const IsoShape shape = analyze_lie_iso(v, v, LinearMap{RatMatrix::identity(6)});
  EXPECT_EQ(shape.kind, IsoShape::Case::kRestrictsToModule);
  EXPECT_EQ(shape.module_quotient_dim, 0u);
}

}  // namespace
}  // namespace modlie
