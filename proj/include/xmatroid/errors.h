// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef XMATROID_ERRORS_H_
#define XMATROID_ERRORS_H_

#include <stdexcept>
#include <string>

namespace xmatroid {

enum class ErrorKind {
  kInvalidArgument,
  kBudgetExceeded,
  kGroundMismatch,
  kRankZero,
  kPatternTooLarge,
  kNotUniform,
  kNotUnionStable,
  kAmbiguousUniformSize,
  kImproperSequence,
  kNotSubmodular,
  kTrialDisagreement,
  kAxiomViolation,
  kMalformedInput,
};

const char* ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace xmatroid

#endif  // XMATROID_ERRORS_H_
