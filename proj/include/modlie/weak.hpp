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


#ifndef MODLIE_WEAK_HPP_
#define MODLIE_WEAK_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "modlie/grid.hpp"
#include "modlie/lie.hpp"
#include "modlie/module.hpp"
#include "modlie/verdict.hpp"

namespace modlie {

/// Invariants of the weak isomorphism class that do not change over field
/// extensions.
struct WeakInvariants {
  std::size_t dim = 0;
  std::size_t annihilator_dim = 0;
  std::size_t image_span_dim = 0;
  std::size_t operator_span_dim = 0;
  std::size_t generic_rank = 0;
  std::map<std::size_t, std::size_t> qbar_drop_counts;  // drop -> roots
  std::size_t end_dim = 0;
  LieFingerprint fingerprint;

  friend bool operator==(const WeakInvariants&, const WeakInvariants&) = default;
  friend auto operator<=>(const WeakInvariants&, const WeakInvariants&) = default;
};

WeakInvariants weak_invariants(const ModulePair& v);

/// Named components in comparison order.
std::vector<std::pair<std::string, nlohmann::json>> components(
    const WeakInvariants& inv);

struct WeakIsoOptions {
  std::size_t max_candidates = 10000;
  std::vector<Twist> extra_twists;
  GridConfig grid;
  // Powers k of the pencil whose rank-drop points are used to pin twists.
  std::size_t power_depth = 3;
};

/// Candidate twists theta for twist_pair(V, theta) ~ W, in trial order.
/// The boolean is set when the enumeration hit max_candidates.
std::pair<std::vector<Twist>, bool> candidate_twists(
    const ModulePair& v, const ModulePair& w, const WeakIsoOptions& options);

Verdict weak_iso_decide(const ModulePair& v, const ModulePair& w,
                        const WeakIsoOptions& options = {});

}  // namespace modlie

#endif  // MODLIE_WEAK_HPP_
