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

#include "modlie/grid.hpp"

#include <cstdlib>
#include <string>

#include "modlie/errors.hpp"
#include "modlie/rng.hpp"

namespace modlie {

GridConfig grid_config_from_env() {
  GridConfig config;
  if (const char* env = std::getenv("MODLIE_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      config.budget = v;
    } catch (const std::exception&) {
      throw InputError(std::string("MODLIE_BUDGET is not a count: ") + env);
    }
  }
  return config;
}

std::uint64_t grid_size(unsigned nvars, unsigned degree) {
  std::uint64_t size = 1;
  const std::uint64_t base = std::uint64_t{degree} + 1;
  for (unsigned i = 0; i < nvars; ++i) {
    if (size > UINT64_MAX / base) return UINT64_MAX;
    size *= base;
  }
  return size;
}

GridResult grid_nonzero(const PolyEvaluator& p, unsigned nvars, unsigned degree,
                        const GridConfig& config) {
  GridResult result;
  std::vector<Rational> point(nvars);

  Rng rng(config.seed);
  for (unsigned s = 0; s < config.random_probes; ++s) {
    for (auto& x : point) x = Rational(static_cast<long>(rng.uniform(0, config.random_range - 1)));
    ++result.random_probes_done;
    ++result.evaluations;
    if (!p(point).is_zero()) {
      result.status = GridStatus::kWitness;
      result.witness = point;
      result.witness_from_random = true;
      return result;
    }
  }

  const std::uint64_t size = grid_size(nvars, degree);
  if (size > config.budget) {
    result.status = GridStatus::kBudgetExceeded;
    return result;
  }
  std::vector<unsigned> digits(nvars, 0);
  for (std::uint64_t n = 0; n < size; ++n) {
    for (unsigned i = 0; i < nvars; ++i) point[i] = Rational(static_cast<long>(digits[i]));
    ++result.evaluations;
    ++result.grid_evaluations;
    if (!p(point).is_zero()) {
      result.status = GridStatus::kWitness;
      result.witness = point;
      return result;
    }
    for (unsigned i = 0; i < nvars; ++i) {
      if (++digits[i] <= degree) break;
      digits[i] = 0;
    }
  }
  result.status = GridStatus::kCertifiedZero;
  return result;
}

}  // namespace modlie
