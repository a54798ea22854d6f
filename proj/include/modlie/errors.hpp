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

#ifndef MODLIE_ERRORS_HPP_
#define MODLIE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace modlie {

// Malformed or inconsistent user input. The CLI maps these to exit status 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeMismatch : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// A caller-supplied certificate or map does not satisfy an operation's
// documented precondition.
class PreconditionViolated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exact search would exceed its configured evaluation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace modlie

#endif  // MODLIE_ERRORS_HPP_
