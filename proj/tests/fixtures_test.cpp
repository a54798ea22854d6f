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
#include "modlie/indec.hpp"
#include "modlie/io.hpp"
#include "modlie/iso.hpp"
#include "modlie/lie.hpp"
#include "modlie/suites.hpp"

namespace modlie {
namespace {

TEST(Fixture, Named) {
  EXPECT_EQ(fixture("lemma-v"), lemma_v());
  EXPECT_EQ(fixture("lemma-w"), lemma_w());
  const ModulePair j = fixture("jordan(7)");
  EXPECT_EQ(j.dim(), 7u);
  EXPECT_EQ(j.P(), jordan_block(7));
  EXPECT_TRUE(j.Q().is_zero());
  const ModulePair left = fixture("nonisom-a(left)");
  EXPECT_EQ(left.P(), RatMatrix::from_rows({{0, 1}, {0, 0}}));
  EXPECT_TRUE(left.Q().is_zero());
  EXPECT_EQ(fixture("nonisom-a(right)").Q(), left.P());
  EXPECT_EQ(fixture("nonisom-a(left, 3)").P(), jordan_block(3));
  EXPECT_EQ(fixture("zero(3)"), ModulePair::zero(3));
  EXPECT_THROW(fixture("nope"), InputError);
  EXPECT_THROW(fixture("jordan(x)"), InputError);
}

TEST(Fixture, LemmaOperators) {
  const ModulePair w = lemma_w();
  // S: e1 -> e3, T: e1 -> e4.
  EXPECT_EQ(w.P() * unit_vector(4, 0), unit_vector(4, 2));
  EXPECT_EQ(w.Q() * unit_vector(4, 0), unit_vector(4, 3));
  EXPECT_EQ(rank(w.P()) + rank(w.Q()), 2u);
}

TEST(Fixture, CyclicMonomial) {
  // K[x,y]/(x^3, y^3): basis 1, x, y, x^2, xy, y^2, x^2y, xy^2, x^2y^2.
  const ModulePair v = cyclic_monomial({{3, 0}, {0, 3}});
  EXPECT_EQ(v.dim(), 9u);
  EXPECT_EQ(annihilator(v).dim(), 1u);
  EXPECT_EQ(endo_algebra(v).dim(), 9u);
  EXPECT_EQ(fixture("cyclic-monomial(x^3,y^3)"), v);
  const ModulePair u = fixture("cyclic-monomial(x^4,xy,y^4)");
  EXPECT_EQ(u.dim(), 7u);
  EXPECT_EQ(indecomposable_decide(u).answer, Answer::kYes);
}

TEST(RandomPair, Profiles) {
  for (Profile p : {Profile::kNilpotent, Profile::kGeneric, Profile::kBlock}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const ModulePair v = random_pair(4, p, seed);
      EXPECT_EQ(v.dim(), 4u);
      EXPECT_EQ(v.P() * v.Q(), v.Q() * v.P());
      EXPECT_EQ(random_pair(4, p, seed), v);
    }
  }
  const ModulePair n = random_pair(4, Profile::kNilpotent, 3);
  EXPECT_TRUE(power(n.P(), 4).is_zero());
  EXPECT_TRUE(power(n.Q(), 4).is_zero());
  EXPECT_EQ(parse_profile(to_string(Profile::kBlock)), Profile::kBlock);
  EXPECT_THROW(parse_profile("other"), InputError);
}

TEST(RandomPair, BlockIsBlockDiagonal) {
  const ModulePair v = random_pair(4, Profile::kBlock, 12);
  bool some_split = false;
  for (std::size_t k = 1; k < 4; ++k) {
    if (v.P().block(0, k, k, 4 - k).is_zero() && v.P().block(k, 0, 4 - k, k).is_zero() &&
        v.Q().block(0, k, k, 4 - k).is_zero() && v.Q().block(k, 0, 4 - k, k).is_zero()) {
      some_split = true;
    }
  }
  EXPECT_TRUE(some_split);
}

TEST(RandomHelpers, InvertibleAndUnimodular) {
  Rng rng(4);
  for (int i = 0; i < 10; ++i) {
    EXPECT_FALSE(det(random_invertible(4, rng)).is_zero());
    EXPECT_EQ(det(random_unimodular(4, rng)).abs(), Rational(1));
    EXPECT_FALSE(random_twist(rng).det().is_zero());
  }
}

TEST(Io, PairRoundTrip) {
  const ModulePair v = random_pair(3, Profile::kGeneric, 77);
  EXPECT_EQ(pair_from_json(pair_to_json(v)), v);
  const json j = json::parse(R"({"dim": 2, "P": [["1/2", 0], [0, 1]], "Q": [[0, 0], [0, "-3/4"]]})");
  const ModulePair p = pair_from_json(j);
  EXPECT_EQ(p.P()(0, 0), Rational::parse("1/2"));
  EXPECT_EQ(p.Q()(1, 1), Rational::parse("-3/4"));
  EXPECT_THROW(pair_from_json(json::parse(R"({"dim": 1, "P": [[1]], "Q": [[1, 2]]})")), InputError);
  EXPECT_THROW(pair_from_json(json::parse(R"({"dim": 1, "P": [["x"]], "Q": [[1]]})")), InputError);
}

TEST(Io, TwistAndCertificateRoundTrip) {
  const Twist t(1, 2, 3, 5);
  EXPECT_EQ(twist_from_json(twist_to_json(t)), t);
  Verdict v;
  v.answer = Answer::kYes;
  v.certificate = WeakIsoCertificate{t, RatMatrix::identity(2)};
  const Certificate c = certificate_from_json(verdict_to_json(v));
  const auto& w = std::get<WeakIsoCertificate>(c);
  EXPECT_EQ(w.theta, t);
  EXPECT_EQ(w.x, RatMatrix::identity(2));
}

TEST(Io, LieExport) {
  const json j = lie_to_json(build_lie(lemma_v()));
  EXPECT_EQ(j["dim"], 6);
  EXPECT_EQ(j["basis"].size(), 6u);
  EXPECT_EQ(j["brackets"].size(), 2u);
}

TEST(Suites, Digest) {
  EXPECT_EQ(digest(lemma_v()), digest(lemma_v()));
  EXPECT_NE(digest(lemma_v()), digest(lemma_w()));
  EXPECT_EQ(digest(lemma_v()).size(), 16u);
}

TEST(Suites, Prop1Edges) {
  const SuiteReport empty = suite_prop1(0, 6, 42);
  EXPECT_EQ(empty.trials, 0u);
  EXPECT_TRUE(empty.failures.empty());
  const ModulePair v = lemma_w();
  EXPECT_FALSE(prop1_trial(v, Twist::identity(), RatMatrix::identity(4)).has_value());
  const SuiteReport small = suite_prop1(10, 4, 5);
  EXPECT_EQ(small.passes, 10u);
}

TEST(Suites, Counterexample) {
  const SuiteReport r = suite_counterexample();
  EXPECT_EQ(r.trials, 4u);
  EXPECT_EQ(r.passes, 4u);
}

TEST(Suites, Theorem2Small) {
  const SuiteReport r = suite_theorem2(6, 3);
  EXPECT_EQ(r.passes, 6u);
  for (const auto& f : r.failures) ADD_FAILURE() << f.property;
}

TEST(Census, DimOneAndEmpty) {
  EXPECT_TRUE(census(2, 0, 1).empty());
  const auto rows = census(1, 20, 1);
  std::size_t total = 0;
  for (const auto& row : rows) {
    total += row.count;
    EXPECT_EQ(row.key.dim, 1u);
  }
  EXPECT_EQ(total, 20u);
  EXPECT_LE(rows.size(), 4u);
  EXPECT_THROW(census(kCensusDimCap + 1, 1, 1), PreconditionViolated);
}

TEST(Census, InjectedCountedFirst) {
  const auto rows = census(4, 0, 1, {lemma_v(), lemma_w()});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].count + rows[1].count, 2u);
}

}  // namespace
}  // namespace modlie
