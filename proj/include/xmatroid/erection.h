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

#ifndef XMATROID_ERECTION_H_
#define XMATROID_ERECTION_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "xmatroid/matroid.h"

namespace xmatroid {

struct ErectionResult {
  Matroid matroid;
  /// The input has no erection of higher rank; matroid is the input.
  bool trivial = true;
};

struct ErectionOptions {
  /// Exhaustive axiom check of the output when the ground has at most this
  /// many elements. Truncating back to the input is always checked.
  int verify_up_to = 14;
  /// Bounds subset enumerations (circuit scans, hyperplane expansion).
  int64_t budget = int64_t{1} << 26;
};

/// The free erection, i.e. the weak-order maximum among all erections.
///
/// A rank-(r+1) erection keeps every flat of rank below r, so it is fixed
/// by its hyperplanes. Candidates A + a (A a hyperplane of the input, a
/// outside A) are superposed: two candidates sharing an independent r-set
/// are replaced by their union, until no two share one. The erection is
/// trivial exactly when the ground set becomes a candidate.
ErectionResult FreeErection(const Matroid& m, const ErectionOptions& options = {});

struct ElevationChain {
  /// stages[0] is the input; each later stage is the free erection of the
  /// one before, so ranks strictly increase.
  std::vector<Matroid> stages;
  /// False when the chain stopped because a stage exceeded the rank cap.
  bool complete = true;
};

/// Free erections until one is trivial. With rank_cap >= 0 the chain stops
/// after the first stage whose rank exceeds the cap.
ElevationChain FreeElevation(const Matroid& m, int rank_cap = -1,
                             const ErectionOptions& options = {});

/// Whether m0 is the truncation of m1, or m1 equals m0. Throws
/// kGroundMismatch.
bool IsErectionOf(const Matroid& m1, const Matroid& m0);

/// Every erection of m, the trivial one first, by trying each set of
/// spanning circuits as the new bases. Ground size <= 9; throws
/// kBudgetExceeded when there are more than max_choices subsets to try.
std::vector<Matroid> EnumerateErections(const Matroid& m,
                                        int64_t max_choices = int64_t{1} << 16);

/// The element above all others in the weak order, if there is one.
std::optional<Matroid> WeakOrderMaximum(const std::vector<Matroid>& ms);

}  // namespace xmatroid

#endif  // XMATROID_ERECTION_H_
