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

#ifndef MODLIE_GRID_HPP_
#define MODLIE_GRID_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "modlie/rational.hpp"

namespace modlie {

inline constexpr std::uint64_t kDefaultGridBudget = std::uint64_t{1} << 22;

struct GridConfig {
  std::uint64_t budget = kDefaultGridBudget;  // max grid evaluations
  unsigned random_probes = 8;                 // 0 disables the fast path
  std::int64_t random_range = std::int64_t{1} << 20;  // probes in [0, range)
  std::uint64_t seed = 1;
};

/// Reads MODLIE_BUDGET from the environment when set.
GridConfig grid_config_from_env();

enum class GridStatus { kWitness, kCertifiedZero, kBudgetExceeded };

struct GridResult {
  GridStatus status = GridStatus::kCertifiedZero;
  std::vector<Rational> witness;  // set iff status == kWitness
  std::uint64_t evaluations = 0;       // random probes + grid points
  std::uint64_t grid_evaluations = 0;
  unsigned random_probes_done = 0;
  bool witness_from_random = false;
};

using PolyEvaluator = std::function<Rational(std::span<const Rational>)>;

/// Nonvanishing test for a black-box polynomial in `nvars` variables of total
/// degree at most `degree`. Random probes run first; if none is nonzero the
/// full grid {0..degree}^nvars is scanned, which certifies p == 0 when every
/// grid value vanishes. Returns kBudgetExceeded instead of scanning a grid
/// larger than the budget.
GridResult grid_nonzero(const PolyEvaluator& p, unsigned nvars, unsigned degree,
                        const GridConfig& config = {});

/// (degree+1)^nvars, saturating at UINT64_MAX.
std::uint64_t grid_size(unsigned nvars, unsigned degree);

}  // namespace modlie

#endif  // MODLIE_GRID_HPP_
