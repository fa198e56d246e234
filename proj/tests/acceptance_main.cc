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

// Runs every registered experiment and prints one line per acceptance
// criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "xmatroid/json_io.h"
#include "xmatroid/registry.h"

namespace {

struct Criterion {
  int number;
  const char* name;
  const char* tolerance;
  double budget_seconds;
};

constexpr Criterion kCriteria[] = {
    {1, "val equals count-matroid rank", "exact integer equality", 300},
    {2, "certificate soundness fuzz", "exact", 60},
    {3, "uniform val matroids", "exact", 60},
    {4, "free erection oracle", "exact", 600},
    {5, "non-uniqueness ingredients", "exact", 1800},
    {6, "linear generic ranks", "exact integers, 3-trial agreement", 120},
    {7, "picture-lifting equivalence", "exact", 120},
    {8, "property-checker fixtures", "zero failures, >= 500 samples when sampled", 600},
    {9, "submodularity scans", "zero violations", 300},
};

}  // namespace

int main() {
  using namespace xmatroid;
  using Clock = std::chrono::steady_clock;
  const RunContext context;

  const auto start = Clock::now();
  const std::vector<RunResult> first = ReproduceAll("", context, 1);
  const double first_seconds = std::chrono::duration<double>(Clock::now() - start).count();

  bool all_ok = true;
  for (const Criterion& c : kCriteria) {
    int total = 0, passed = 0;
    double seconds = 0;
    std::string failures;
    for (const RunResult& r : first) {
      if (r.criterion != c.number) continue;
      ++total;
      seconds += r.wall_seconds;
      if (r.outcome == Outcome::kPass) {
        ++passed;
      } else {
        failures += " " + r.id + "=" + OutcomeName(r.outcome);
      }
    }
    const bool ok = total > 0 && passed == total && seconds < c.budget_seconds;
    all_ok = all_ok && ok;
    std::printf("%s criterion %d (%s): %d/%d experiments, %.2fs of %.0fs, tolerance: %s%s\n",
                ok ? "PASS" : "FAIL", c.number, c.name, passed, total, seconds,
                c.budget_seconds, c.tolerance, failures.c_str());
  }

  const auto again = Clock::now();
  const std::vector<RunResult> second = ReproduceAll("", context, 2);
  const double second_seconds = std::chrono::duration<double>(Clock::now() - again).count();
  const std::string a = Dump(ArtifactsJson(first));
  const std::string b = Dump(ArtifactsJson(second));
  const bool same = a == b;
  const bool fast = second_seconds < 2 * first_seconds + 1;
  all_ok = all_ok && same && fast;
  std::printf(
      "%s criterion 10 (determinism): threads 1 vs 2 artifacts %s (%zu bytes), %.2fs vs %.2fs, "
      "tolerance: byte-identical\n",
      same && fast ? "PASS" : "FAIL", same ? "identical" : "differ", a.size(), first_seconds,
      second_seconds);
  return all_ok ? 0 : 1;
}
