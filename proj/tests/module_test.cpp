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

#include "modlie/errors.hpp"
#include "modlie/fixtures.hpp"
#include "modlie/module.hpp"
#include "modlie/rng.hpp"

namespace modlie {
namespace {

const RatMatrix kJ2 = RatMatrix::from_rows({{0, 1}, {0, 0}});

TEST(ModulePair, Validation) {
  EXPECT_NO_THROW(ModulePair(kJ2, RatMatrix(2, 2)));
  EXPECT_NO_THROW(ModulePair(RatMatrix::identity(2), RatMatrix::identity(2)));
  try {
    ModulePair(kJ2, RatMatrix::from_rows({{1, 0}, {0, 0}}));
    FAIL() << "expected NonCommuting";
  } catch (const NonCommuting& e) {
    EXPECT_EQ(e.commutator(), RatMatrix::from_rows({{0, -1}, {0, 0}}));
  }
  EXPECT_THROW(ModulePair(kJ2, RatMatrix(3, 3)), SizeMismatch);
  EXPECT_THROW(ModulePair(RatMatrix(2, 3), RatMatrix(2, 3)), SizeMismatch);
}

TEST(Twist, Examples) {
  const ModulePair left(kJ2, RatMatrix(2, 2));
  const ModulePair right(RatMatrix(2, 2), kJ2);
  EXPECT_EQ(twist_pair(left, Twist::swap()), right);
  EXPECT_EQ(twist_pair(left, Twist::identity()), left);

  const ModulePair v = lemma_w();
  const ModulePair u = twist_pair(v, Twist(1, 1, 0, 1));
  EXPECT_EQ(u.P(), v.P() + v.Q());
  EXPECT_EQ(u.Q(), v.Q());
  EXPECT_THROW(Twist(1, 2, 2, 4), InputError);
}

TEST(Twist, CompositionAndInverse) {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const ModulePair v = random_pair(3, Profile::kGeneric, rng);
    const Twist a = random_twist(rng), b = random_twist(rng);
    EXPECT_EQ(twist_pair(twist_pair(v, a), b), twist_pair(v, b.after(a)));
    EXPECT_EQ(twist_pair(twist_pair(v, a), a.inverse()), v);
    EXPECT_EQ(a.after(a.inverse()), Twist::identity());
  }
}

TEST(DirectSum, Examples) {
  const ModulePair v(kJ2, RatMatrix(2, 2));
  EXPECT_EQ(direct_sum(v, ModulePair::zero(0)), v);
  const ModulePair s = direct_sum(v, v);
  EXPECT_EQ(s.dim(), 4u);
  EXPECT_EQ(s.P(), RatMatrix::block_diagonal(kJ2, kJ2));
  EXPECT_TRUE(s.Q().is_zero());
}

TEST(Annihilator, Examples) {
  const Subspace av = annihilator(lemma_v());
  EXPECT_EQ(av, Subspace(4, {unit_vector(4, 2), unit_vector(4, 3)}));
  const Subspace aw = annihilator(lemma_w());
  EXPECT_EQ(aw, Subspace(4, {unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)}));
  EXPECT_EQ(annihilator(ModulePair::zero(5)), Subspace::whole(5));
}

TEST(ImageSpan, Examples) {
  const Subspace e34(4, {unit_vector(4, 2), unit_vector(4, 3)});
  EXPECT_EQ(image_span(lemma_v()), e34);
  EXPECT_EQ(image_span(lemma_w()), e34);
  EXPECT_EQ(image_span(ModulePair::zero(3)).dim(), 0u);
}

TEST(OperatorSpan, Examples) {
  EXPECT_EQ(operator_span_dim(ModulePair(kJ2, RatMatrix(2, 2))), 1u);
  EXPECT_EQ(operator_span_dim(ModulePair(kJ2, Rational(2) * kJ2)), 1u);
  EXPECT_EQ(operator_span_dim(lemma_w()), 2u);
  EXPECT_EQ(operator_span_dim(ModulePair::zero(3)), 0u);
}

TEST(Submodule, Examples) {
  const ModulePair v(kJ2, RatMatrix(2, 2));
  EXPECT_EQ(submodule_generated(v, {unit_vector(2, 1)}), Subspace::whole(2));
  EXPECT_EQ(submodule_generated(v, {}).dim(), 0u);
  EXPECT_EQ(submodule_generated(lemma_v(), {unit_vector(4, 0)}),
            Subspace(4, {unit_vector(4, 0), unit_vector(4, 2)}));
}

TEST(Subspace, Operations) {
  const Subspace a(3, {Vector{1, 1, 0}, Vector{2, 2, 0}});
  const Subspace b(3, {unit_vector(3, 0)});
  EXPECT_EQ(a.dim(), 1u);
  EXPECT_EQ(a.sum(b).dim(), 2u);
  EXPECT_EQ(a.intersect(b).dim(), 0u);
  EXPECT_TRUE(a.sum(b).contains(unit_vector(3, 1)));
  EXPECT_EQ(a.complement_in(a.sum(b)).size(), 1u);
}

TEST(RestrictTo, LemmaBlock) {
  const ModulePair r = restrict_to(lemma_v(), {unit_vector(4, 0), unit_vector(4, 2)});
  EXPECT_EQ(r.P(), RatMatrix::from_rows({{0, 0}, {1, 0}}));
  EXPECT_TRUE(r.Q().is_zero());
}

TEST(Conjugate, RejectsSingular) {
  EXPECT_THROW(lemma_v().conjugate(RatMatrix(4, 4)), InputError);
  const RatMatrix s = RatMatrix::from_rows({{1, 1}, {0, 1}});
  const ModulePair c = ModulePair(kJ2, RatMatrix(2, 2)).conjugate(s);
  EXPECT_EQ(c.P() * s, s * kJ2);
}

}  // namespace
}  // namespace modlie
