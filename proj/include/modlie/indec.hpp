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


#ifndef MODLIE_INDEC_HPP_
#define MODLIE_INDEC_HPP_

#include <cstdint>

#include "modlie/module.hpp"
#include "modlie/verdict.hpp"

namespace modlie {

struct IndecOptions {
  unsigned random_trials = 32;  // random endomorphisms after the basis scan
  std::uint64_t seed = 1;
};

/// Throws PreconditionViolated for dim 0.
Verdict indecomposable_decide(const ModulePair& v, const IndecOptions& options = {});

bool verify_idempotent_certificate(const ModulePair& v,
                                   const IdempotentCertificate& cert);

bool verify_locality_certificate(const ModulePair& v,
                                 const LocalityCertificate& cert);

}  // namespace modlie

#endif  // MODLIE_INDEC_HPP_
