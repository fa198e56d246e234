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

#ifndef XMATROID_MATROID_H_
#define XMATROID_MATROID_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xmatroid/element_set.h"

namespace xmatroid {

/// An immutable matroid on {0, ..., ground_size-1}.
///
/// Two representations share one interface:
///  * explicit: the rank and the non-spanning circuits (circuits of size at
///    most the rank). A set is independent iff it has at most `rank`
///    elements and contains no listed circuit; the spanning circuits are
///    implied and enumerated on demand.
///  * oracle: an independence predicate or a rank function.
///
/// Copies share state, so passing by value is cheap and thread-safe.
class Matroid {
 public:
  using IndependenceOracle = std::function<bool(ElementSet)>;
  using RankOracle = std::function<int(ElementSet)>;
  /// ext(I, e) decides independence of I + e for independent I.
  using ExtensionOracle = std::function<bool(ElementSet, int)>;

  /// Circuits of size rank+1 are accepted and dropped after a consistency
  /// check (they are implied by the rest).
  static Matroid Explicit(int ground_size, int rank,
                          std::vector<ElementSet> circuits);
  static Matroid Uniform(int ground_size, int rank);
  static Matroid Free(int ground_size) { return Uniform(ground_size, ground_size); }
  static Matroid FromIndependence(int ground_size, IndependenceOracle oracle,
                                  ExtensionOracle extension = {});
  static Matroid FromRank(int ground_size, RankOracle oracle);

  int ground_size() const;
  ElementSet ground() const { return ElementSet::Full(ground_size()); }
  bool is_explicit() const;

  /// Rank of the whole ground set.
  int rank() const;
  int Rank(ElementSet f) const;
  bool IsIndependent(ElementSet f) const;
  /// Whether independent ∪ {e} is independent, given that `independent` is.
  bool CanAdd(ElementSet independent, int e) const;
  /// A maximal independent subset of f, grown greedily in element order.
  ElementSet Basis(ElementSet f) const;
  ElementSet Closure(ElementSet f) const;
  bool IsFlat(ElementSet f) const { return Closure(f) == f; }
  bool IsCircuit(ElementSet c) const;

  /// Explicit representation only; sorted in canonical order.
  const std::vector<ElementSet>& nonspanning_circuits() const;
  /// Explicit representation only.
  std::span<const ElementSet> CircuitsContaining(int e) const;

 private:
  struct Impl;
  explicit Matroid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Visits circuits of size <= max_size in canonical order (size, then bits).
/// Stops when fn returns false. `budget` bounds the number of candidate sets
/// examined; exceeding it throws kBudgetExceeded.
void ForEachCircuit(const Matroid& m, int max_size,
                    const std::function<bool(ElementSet)>& fn,
                    int64_t budget = int64_t{1} << 26);

/// All circuits of size <= max_size, deduplicated, canonical order.
std::vector<ElementSet> Circuits(const Matroid& m, int max_size,
                                 int64_t budget = int64_t{1} << 26);

/// Explicit copy of m (enumerates the non-spanning circuits).
Matroid ToExplicit(const Matroid& m, int64_t budget = int64_t{1} << 26);

/// Truncation to rank - 1; throws kRankZero on a rank-0 matroid.
Matroid Truncate(const Matroid& m);

enum class Relation { kStrictlyBelow, kStrictlyAbove, kEqual, kIncomparable };
const char* RelationName(Relation r);

struct CompareResult {
  Relation relation = Relation::kEqual;
  /// Independent in the first matroid, dependent in the second.
  std::optional<ElementSet> independent_in_first;
  /// Independent in the second matroid, dependent in the first.
  std::optional<ElementSet> independent_in_second;
};

/// Weak order comparison. Each witness is the canonically first circuit of
/// one matroid that is independent in the other. Throws kGroundMismatch.
CompareResult WeakOrderCompare(const Matroid& a, const Matroid& b);
bool Equal(const Matroid& a, const Matroid& b);

struct AxiomReport {
  bool ok = true;
  std::string violation;
  /// For exchange violations: |first| < |second|, both independent, and no
  /// element of second - first extends first.
  ElementSet first;
  ElementSet second;
};

/// Exhaustive independence-axiom check for ground_size <= 20.
AxiomReport VerifyMatroidAxioms(int ground_size,
                                const std::function<bool(ElementSet)>& independent);
AxiomReport VerifyMatroidAxioms(const Matroid& m);

/// All flats, canonical order. Throws kBudgetExceeded past max_flats.
std::vector<ElementSet> Flats(const Matroid& m, int64_t max_flats = 1 << 20);
/// Flats that are unions of circuits.
std::vector<ElementSet> CyclicFlats(const Matroid& m, int64_t max_flats = 1 << 20);
/// Nonempty flats whose restriction is connected.
std::vector<ElementSet> ConnectedFlats(const Matroid& m, int64_t max_flats = 1 << 20);

/// Connected components of the restriction to f, ordered by least element.
/// Uses the fundamental circuits of a greedy basis of f.
std::vector<ElementSet> Components(const Matroid& m, ElementSet f);
bool IsConnected(const Matroid& m, ElementSet f);
/// r(F) < r(F') + r(F'') for every bipartition; exponential, |f| <= 20.
bool IsConnectedByPartition(const Matroid& m, ElementSet f);

/// A set with no coloop in the restriction (a union of circuits).
bool IsCyclic(const Matroid& m, ElementSet f);

}  // namespace xmatroid

#endif  // XMATROID_MATROID_H_
