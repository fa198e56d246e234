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

#ifndef XMATROID_REGISTRY_H_
#define XMATROID_REGISTRY_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "xmatroid/json_io.h"
#include "xmatroid/linear.h"

namespace xmatroid {

enum class Outcome { kPass, kFail, kInconclusive };
const char* OutcomeName(Outcome o);

/// Where an expected value comes from: a published theorem, a direct
/// consequence of the definitions, or an independent computation.
enum class Basis { kTheorem, kImmediate, kComputed };
const char* BasisName(Basis b);

struct RunContext {
  uint64_t seed = 1;
  int trials = 3;
  uint64_t prime = kMersenne61;
  int64_t budget_states = int64_t{1} << 23;

  GenericOptions generic() const { return {trials, seed, prime}; }
};

struct RunResult {
  std::string id;
  int criterion = 0;
  Outcome outcome = Outcome::kPass;
  /// Deterministic given the context; excludes timing.
  Json artifacts;
  std::string summary;
  double wall_seconds = 0;
  uint64_t seed = 0;
};

struct ExperimentSpec {
  std::string id;
  /// Acceptance criterion number, 1-9.
  int criterion = 0;
  std::string description;
  std::string expected;
  Basis basis = Basis::kComputed;
  /// The claim or computation backing `expected`.
  std::string claim;
  /// Sets outcome, artifacts and summary.
  std::function<void(const RunContext&, RunResult&)> run;
};

const std::vector<ExperimentSpec>& Registry();

/// Entries whose id matches the glob filter ("" or "*" selects all), run
/// on up to `threads` workers, returned in registry order. Budget errors
/// become inconclusive outcomes and any other error a failure.
std::vector<RunResult> ReproduceAll(const std::string& filter, const RunContext& context,
                                    int threads = 1);
RunResult RunExperiment(const ExperimentSpec& spec, const RunContext& context);

/// {"schema", "kind": "run", "results": [...]} without wall times.
Json ArtifactsJson(const std::vector<RunResult>& results);
/// Same with wall times and a pass/fail/inconclusive tally.
Json ResultsJson(const std::vector<RunResult>& results);

/// Registry problems: duplicate or malformed ids, missing text, bad
/// criterion numbers.
std::vector<std::string> LintRegistry(const std::vector<ExperimentSpec>& registry);

}  // namespace xmatroid

#endif  // XMATROID_REGISTRY_H_
