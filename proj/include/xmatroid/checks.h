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

#ifndef XMATROID_CHECKS_H_
#define XMATROID_CHECKS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xmatroid/element_set.h"
#include "xmatroid/graph.h"
#include "xmatroid/matroid.h"

namespace xmatroid {

enum class Verdict { kPass, kFail, kInconclusive };
enum class Coverage { kExhaustive, kSampled };

const char* VerdictName(Verdict v);
const char* CoverageName(Coverage c);

/// Outcome of one predicate. A fail always carries a witness set; the
/// operation checks also fill `operation` and `result` for replay.
struct CheckReport {
  std::string property;
  Verdict verdict = Verdict::kPass;
  Coverage coverage = Coverage::kExhaustive;
  uint64_t seed = 0;
  int64_t instances = 0;
  std::optional<ElementSet> witness;
  /// Check-specific vertex list; see the individual checks.
  std::vector<int> operation;
  /// The set produced from the witness by the operation.
  std::optional<ElementSet> result;
  std::string detail;

  bool passed() const { return verdict == Verdict::kPass; }
  bool failed() const { return verdict == Verdict::kFail; }
};

struct CheckOptions {
  enum class Mode { kAuto, kExhaustive, kSampled };
  Mode mode = Mode::kAuto;
  /// Sampled instances to draw.
  int64_t samples = 500;
  uint64_t seed = 1;
  /// Exhaustive runs past this many instances stop as inconclusive.
  int64_t budget = int64_t{1} << 24;
};

/// Every member is a circuit. Witness: the first member that is
/// independent or dependent but not minimal.
CheckReport IsXMatroid(const Matroid& m, const CopyFamily& family);

/// Every element of every member lies in a circuit inside that member.
/// Witness: the member; operation: {element}.
CheckReport IsXCyclic(const Matroid& m, const CopyFamily& family);

/// Every cyclic flat is a union of members. Witness: the first cyclic flat
/// that is not covered. Throws kBudgetExceeded past max_flats flats.
CheckReport HasXCovering(const Matroid& m, const CopyFamily& family,
                         int64_t max_flats = int64_t{1} << 20);

/// F with v0 unused, plus v0v1 and v0v2. Returns nullopt when the host lacks
/// the new edges or F touches v0.
std::optional<ElementSet> ZeroExtend(const HostGraph& host, ElementSet f, int v0, int v1,
                                     int v2);

/// Diamond splitting at v1 into the unused vertex v0: drops v1u for u in
/// u0, adds v0u for u in u0 and u_star. u0 and u_star must be disjoint sets
/// of F-neighbours of v1 and |u_star| = 2. Returns nullopt when the
/// operation does not apply.
std::optional<ElementSet> DiamondSplit(const HostGraph& host, ElementSet f, int v1, int v0,
                                       const std::vector<int>& u0,
                                       const std::vector<int>& u_star);

/// Independence is preserved by every 0-extension, the vertices of G being
/// all host vertices. Exhaustive up to 15 host edges in auto mode.
/// Operation on failure: {v0, v1, v2}.
CheckReport ZeroExtensionCheck(const Matroid& m, const HostGraph& host,
                               const CheckOptions& options = {});

/// Independence is preserved by every diamond splitting. Exhaustive up to
/// 10 host edges in auto mode. Operation on failure:
/// {v1, v0, |U_0|, U_0..., U^*...}.
CheckReport DiamondSplittingCheck(const Matroid& m, const HostGraph& host,
                                  const CheckOptions& options = {});

/// rank(M) <= (delta-1)(n-s+1) + C(s-1, 2) for an H-matroid on K_n, where H
/// has s vertices and minimum degree delta; needs n >= s-1.
CheckReport RankBoundCheck(const Matroid& m, int s, int delta, int n);

/// For a connected set X: the sum over v in V(X) of the least degree of v
/// in a basis of X is at most 2(r(X)-1) - |V(X)|. The minimum is exact by
/// the greedy algorithm with edges at v ranked last. Throws
/// kInvalidArgument when X is not connected in M.
CheckReport DegreeBoundCheck(const Matroid& m, const HostGraph& host, ElementSet x);
/// Per-vertex least basis degree in X, indexed by vertex (0 off V(X)).
std::vector<int> MinBasisDegrees(const Matroid& m, const HostGraph& host, ElementSet x);

/// Every circuit with at most max_size edges induces a 2-connected graph.
CheckReport Circuits2ConnectedCheck(const Matroid& m, const HostGraph& host,
                                    int max_size = 10);

/// Rank invariance under the edge maps of vertex transpositions (within a
/// side for bipartite hosts). Exhaustive over all transpositions and all
/// subsets up to 15 host edges in auto mode. Operation on failure: {a, b}.
CheckReport SymmetryCheck(const Matroid& m, const HostGraph& host,
                          const CheckOptions& options = {});
/// Image of f under the transposition of vertices a and b.
ElementSet SwapVertices(const HostGraph& host, ElementSet f, int a, int b);

}  // namespace xmatroid

#endif  // XMATROID_CHECKS_H_
