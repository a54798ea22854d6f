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


#ifndef MODLIE_ISO_HPP_
#define MODLIE_ISO_HPP_

#include <cstddef>
#include <vector>

#include "modlie/grid.hpp"
#include "modlie/matrix.hpp"
#include "modlie/module.hpp"
#include "modlie/poly.hpp"
#include "modlie/verdict.hpp"

namespace modlie {

struct HomSpace {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<RatMatrix> basis;  // target_dim x source_dim each

  std::size_t dim() const { return basis.size(); }
};

/// All X with X P_V = P_W X and X Q_V = Q_W X.
HomSpace hom_space(const ModulePair& v, const ModulePair& w);

/// hom_space(v, v). Throws std::logic_error if the result is not closed
/// under products.
HomSpace endo_algebra(const ModulePair& v);

bool intertwines(const ModulePair& v, const ModulePair& w, const RatMatrix& x);

/// X square, invertible and intertwining.
bool verify_iso_certificate(const ModulePair& v, const ModulePair& w,
                            const RatMatrix& x);

/// X twist_pair(V, theta) = W X with X invertible, and the induced Lie map
/// passes verify_lie_iso.
bool verify_weak_certificate(const ModulePair& v, const ModulePair& w,
                             const Twist& theta, const RatMatrix& x);

/// Cheap exact isomorphism invariants.
struct QuickProfile {
  Polynomial char_p, char_q;
  std::vector<std::size_t> ranks_p, ranks_q, ranks_sum;  // ranks of powers
  std::size_t annihilator_dim = 0;
  std::size_t image_span_dim = 0;
};

QuickProfile quick_profile(const ModulePair& v);

/// First differing component, if any.
std::optional<Refutation> compare_quick(const QuickProfile& a, const QuickProfile& b);

struct WitnessSearch {
  GridResult grid;
  std::optional<RatMatrix> x;  // invertible element of span(hom.basis)
};

/// Runs grid_nonzero on det(sum t_i X_i) over a square Hom basis; a found
/// witness is greedily simplified toward entries 0 and 1.
WitnessSearch search_invertible(const HomSpace& hom, const GridConfig& config);

struct IsoOptions {
  GridConfig grid;
  // Cheap exact invariants (characteristic polynomials, ranks of powers,
  // End/Hom dimensions). `prefilter` tries them before solving for Hom;
  // `refine_over_budget` tries them before falling back to a randomized No.
  bool prefilter = false;
  bool refine_over_budget = true;
  // Equal pairs answer Yes with the identity without solving.
  bool identity_shortcut = true;
  // Over budget: answer a randomized No instead of throwing BudgetExceeded.
  bool allow_randomized = true;
};

/// Deterministic full-grid configuration: no probes, no shortcuts.
IsoOptions oracle_iso_options();

/// Throws BudgetExceeded only when !allow_randomized (or no probe ran) and the
/// certifying grid exceeds the budget.
Verdict iso_decide(const ModulePair& v, const ModulePair& w,
                   const IsoOptions& options = {});

}  // namespace modlie

#endif  // MODLIE_ISO_HPP_
