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


#ifndef MODLIE_SUITES_HPP_
#define MODLIE_SUITES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "modlie/module.hpp"
#include "modlie/weak.hpp"

namespace modlie {

/// FNV-1a (64-bit, hex) of the canonical text of the pairs.
std::string digest(const std::vector<const ModulePair*>& pairs);
std::string digest(const ModulePair& v);

struct SuiteFailure {
  std::uint64_t seed = 0;
  std::string digest;
  std::string property;
};

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::vector<SuiteFailure> failures;
  double wall_seconds = 0;  // not serialized unless asked for
  std::vector<std::string> header;
  nlohmann::json details = nlohmann::json::object();
};

/// Failed property of one prop1 trial, or nullopt.
std::optional<std::string> prop1_trial(const ModulePair& v, const Twist& theta,
                                       const RatMatrix& s);

SuiteReport suite_prop1(std::size_t trials, std::size_t dim_max, std::uint64_t seed);
SuiteReport suite_counterexample();
SuiteReport suite_theorem2(std::size_t trials, std::uint64_t seed);

/// Indecomposable fixtures of dimension 7 to 9.
std::vector<std::string> theorem2_pool();

struct CensusRow {
  WeakInvariants key;
  std::size_t count = 0;
  std::string representative;  // digest of the first pair in the bucket
};

inline constexpr std::size_t kCensusDimCap = 6;

/// Throws PreconditionViolated when dim exceeds dim_cap.
std::vector<CensusRow> census(std::size_t dim, std::size_t trials, std::uint64_t seed,
                              const std::vector<ModulePair>& injected = {},
                              std::size_t dim_cap = kCensusDimCap);

nlohmann::json report_to_json(const SuiteReport& r, bool timing = false);
std::string report_table(const SuiteReport& r);
nlohmann::json census_to_json(const std::vector<CensusRow>& rows);
std::string census_table(const std::vector<CensusRow>& rows);

}  // namespace modlie

#endif  // MODLIE_SUITES_HPP_
