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


#ifndef MODLIE_FIXTURES_HPP_
#define MODLIE_FIXTURES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "modlie/lie.hpp"
#include "modlie/matrix.hpp"
#include "modlie/module.hpp"
#include "modlie/rng.hpp"

namespace modlie {

/// Nilpotent Jordan block: J e_{i+1} = e_i.
RatMatrix jordan_block(std::size_t n);

ModulePair lemma_v();
ModulePair lemma_w();

/// The explicit isomorphism L_V -> L_W for the lemma pair:
/// s -> -w1, t -> -w2, e1 -> s', e2 -> t', e3 -> b1, e4 -> b2.
LinearMap lemma_lie_map();

/// Exponent pairs (a, b) for x^a y^b.
using Monomial = std::pair<unsigned, unsigned>;

/// Multiplication by x and y on K[x,y]/I for a monomial ideal I with finite
/// colength. Basis: standard monomials ordered by degree, then by y-power.
ModulePair cyclic_monomial(const std::vector<Monomial>& generators);

/// lemma-v, lemma-w, nonisom-a(left|right[,n]), jordan(n), zero(n),
/// cyclic-monomial(x^3,y^3). Throws InputError on unknown names.
ModulePair fixture(const std::string& name);

enum class Profile { kNilpotent, kGeneric, kBlock };

std::string to_string(Profile p);
Profile parse_profile(const std::string& s);

struct RandomConfig {
  long entry_range = 3;  // integer entries in [-range, range]
};

ModulePair random_pair(std::size_t dim, Profile profile, std::uint64_t seed,
                       const RandomConfig& config = {});
ModulePair random_pair(std::size_t dim, Profile profile, Rng& rng,
                       const RandomConfig& config = {});

Twist random_twist(Rng& rng, long range = 3);

/// Integer entries, non-zero determinant.
RatMatrix random_invertible(std::size_t n, Rng& rng, long range = 3);

/// L U with unit triangular integer factors; the inverse is integral too.
RatMatrix random_unimodular(std::size_t n, Rng& rng, long range = 1);

}  // namespace modlie

#endif  // MODLIE_FIXTURES_HPP_
