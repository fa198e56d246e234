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

#include "xmatroid/errors.h"

namespace xmatroid {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kGroundMismatch: return "GroundMismatch";
    case ErrorKind::kRankZero: return "RankZero";
    case ErrorKind::kPatternTooLarge: return "PatternTooLarge";
    case ErrorKind::kNotUniform: return "NotUniform";
    case ErrorKind::kNotUnionStable: return "NotUnionStable";
    case ErrorKind::kAmbiguousUniformSize: return "AmbiguousUniformSize";
    case ErrorKind::kImproperSequence: return "ImproperSequence";
    case ErrorKind::kNotSubmodular: return "NotSubmodular";
    case ErrorKind::kTrialDisagreement: return "TrialDisagreement";
    case ErrorKind::kAxiomViolation: return "AxiomViolation";
    case ErrorKind::kMalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace xmatroid
