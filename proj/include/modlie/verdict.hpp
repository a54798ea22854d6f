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


#ifndef MODLIE_VERDICT_HPP_
#define MODLIE_VERDICT_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "modlie/matrix.hpp"
#include "modlie/module.hpp"

namespace modlie {

enum class Answer { kYes, kNo, kUnknown };

std::string to_string(Answer a);

/// An invertible intertwiner X with X P_V = P_W X and X Q_V = Q_W X.
struct IsoCertificate {
  RatMatrix x;
};

/// X twist_pair(V, theta) = W X, X invertible.
struct WeakIsoCertificate {
  Twist theta = Twist::identity();
  RatMatrix x;
};

/// A non-trivial idempotent endomorphism, plus the block splitting it
/// induces: change_of_basis = [image | kernel], and the restricted pairs.
struct IdempotentCertificate {
  RatMatrix idempotent;
  RatMatrix change_of_basis;
  ModulePair image_block = ModulePair::zero(0);
  ModulePair kernel_block = ModulePair::zero(0);
};

/// End(V) = K.1 + J with J nilpotent.  `radical` spans J; empty when
/// End(V) is one-dimensional.
struct LocalityCertificate {
  std::size_t end_dim = 0;
  std::vector<RatMatrix> radical;
};

using Certificate = std::variant<IsoCertificate, WeakIsoCertificate,
                                 IdempotentCertificate, LocalityCertificate>;

struct Refutation {
  std::string invariant;
  nlohmann::json left;
  nlohmann::json right;
};

struct Confidence {
  bool exact = true;
  std::optional<std::string> error_bound;  // exact rational string
};

struct Verdict {
  Answer answer = Answer::kUnknown;
  std::optional<Certificate> certificate;
  std::optional<Refutation> refutation;
  Confidence confidence;
  std::vector<std::string> notes;
};

}  // namespace modlie

#endif  // MODLIE_VERDICT_HPP_
