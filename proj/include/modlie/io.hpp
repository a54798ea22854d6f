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


#ifndef MODLIE_IO_HPP_
#define MODLIE_IO_HPP_

#include <string>

#include <json.hpp>

#include "modlie/lie.hpp"
#include "modlie/matrix.hpp"
#include "modlie/module.hpp"
#include "modlie/pencil.hpp"
#include "modlie/verdict.hpp"
#include "modlie/weak.hpp"

namespace modlie {

using nlohmann::json;

/// Rows of exact rational strings.
json matrix_to_json(const RatMatrix& m);
/// Entries may be strings ("p", "p/q") or integers. Throws ParseError.
RatMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

/// {"name"?, "dim", "P", "Q"}.
json pair_to_json(const ModulePair& v);
/// Throws ParseError, SizeMismatch or NonCommuting.
ModulePair pair_from_json(const json& j);
/// Reads and validates a pair file.
ModulePair parse_pair_file(const std::string& path);

json twist_to_json(const Twist& t);
Twist twist_from_json(const json& j);

/// {"dim", "basis", "brackets": [{"i", "j", "coeffs": [[k, "c"], ...]}]}
/// for i < j with non-zero bracket.
json lie_to_json(const LieAlgebra& l);

json fingerprint_to_json(const LieFingerprint& f);
json invariants_to_json(const WeakInvariants& inv);
json pencil_to_json(const PencilProfile& p);

json verdict_to_json(const Verdict& v);
/// Reads back the certificate part of a verdict. Throws ParseError.
Certificate certificate_from_json(const json& j);

}  // namespace modlie

#endif  // MODLIE_IO_HPP_
