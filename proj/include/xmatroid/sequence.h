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

#ifndef XMATROID_SEQUENCE_H_
#define XMATROID_SEQUENCE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xmatroid/element_set.h"
#include "xmatroid/graph.h"
#include "xmatroid/matroid.h"

namespace xmatroid {

/// Index of the first member contained in the union of its predecessors,
/// or -1 when the sequence is proper.
int FirstImproperIndex(const std::vector<ElementSet>& sets);

/// val(F, S) = |F ∪ X_1 ∪ ... ∪ X_k| - k. Throws kImproperSequence naming
/// the first offending position.
int EvalVal(ElementSet target, const std::vector<ElementSet>& sets);
/// Same, with S given as indices into the family.
int EvalVal(const CopyFamily& family, ElementSet target,
            const std::vector<int>& members);

/// Upper bound on the rank of `target` in every X-matroid.
struct Certificate {
  ElementSet target;
  std::vector<int> members;
  std::vector<ElementSet> sets;
  int value = 0;
};

/// Re-evaluates properness and value from the sets alone.
bool VerifyCertificate(const Certificate& cert);

/// Stable FNV-1a hash of the member bit patterns, as 16 hex digits.
std::string FamilyHash(const CopyFamily& family);

struct ValStats {
  int64_t states = 0;
  int64_t prunes = 0;
};

struct ValResult {
  int value = 0;
  Certificate witness;
  ValStats stats;
  /// False when the state budget ran out; value is then an upper bound.
  bool exact = true;
};

struct ValOptions {
  /// When set, the search stops as soon as val reaches the rank of the
  /// target in this matroid, which is a lower bound for any X-matroid.
  std::optional<Matroid> lower_bound;
  int64_t max_states = int64_t{1} << 23;
};

/// val_X(F) by dynamic programming over union states: a state is the union
/// U of the chosen members, keeping the longest proper sequence reaching it.
/// A state with |U| - k >= best cannot lead to a better value.
ValResult ComputeVal(const CopyFamily& family, ElementSet target,
                     const ValOptions& options = {});

/// val_X on every subset of a ground set with at most 22 elements,
/// built from all reachable union states.
class ValTable {
 public:
  static ValTable Build(const CopyFamily& family, int ground_size,
                        int64_t max_states = int64_t{1} << 23);

  int ground_size() const { return n_; }
  int Val(ElementSet f) const { return val_[f.bits()]; }
  Certificate Witness(ElementSet f) const;
  int64_t num_states() const { return static_cast<int64_t>(states_.size()); }

 private:
  struct State {
    ElementSet u;
    int k = 0;
    int pred = -1;
    int member = -1;
  };

  int n_ = 0;
  std::shared_ptr<const CopyFamily> family_;
  std::vector<State> states_;
  std::vector<int8_t> val_;
  // State index realizing the value at each subset.
  std::vector<uint32_t> arg_;
};

/// A weakly saturated sequence: each step adds exactly one new element
/// beyond the base and the earlier steps.
struct WeakSatSequence {
  ElementSet base;
  std::vector<int> steps;
};

struct WeakSatCheck {
  bool valid = true;
  /// First step adding a number of new elements other than one.
  int bad_step = -1;
  ElementSet constructed;
};

WeakSatCheck CheckWeaklySaturated(const CopyFamily& family,
                                  const WeakSatSequence& sequence);

/// Repeatedly applies the first member inside `target` that adds exactly
/// one new element. The constructible closure does not depend on the order
/// of application, so a miss is definitive. Throws kBudgetExceeded past
/// max_steps.
std::optional<WeakSatSequence> SearchWeakSat(const CopyFamily& family,
                                             ElementSet base, ElementSet target,
                                             int max_steps = 1 << 16);

/// Proof-derived weakly saturated constructions.
enum class WeakSatKind {
  kMatching,         // k-matchings in K_n from a k-matching, n >= 2k+1
  kPath,             // P_k (k edges) in K_n from a copy of P_k, n >= k+1
  kClique,           // K_{d+2} in K_m from the d-fan, m >= d+2
  kC4Complete,       // C_4 in K_m, m >= 4
  kC4Bipartite,      // C_4 in K_{s,t}, s,t >= 2
  kK5MinusComplete,  // {K_5^-, K_{3,4}} in K_m, m >= 5
  kK34Bipartite,     // {K_5^-, K_{3,4}} in K_{s,t}, s >= 3, t >= 4
  kK23Bipartite,     // K_{2,3} in K_{s,t}, s >= 2, t >= 3
  kRootedK2,         // rooted K_{k+1,2} in K_{m',n'}, m' >= 1, n' >= 2
};

struct WeakSatConstruction {
  HostGraph host;
  CopyFamily family;
  ElementSet target;
  WeakSatSequence sequence;
  /// The start set is a member that must be prepended to the certificate
  /// (matchings and paths).
  bool base_is_member = false;
};

/// p and q are (k, n), (k, n), (d, m), (m, -), (s, t), (m, -), (s, t),
/// (s, t) and (m', n') respectively; kRootedK2 also takes k as r.
/// Throws kInvalidArgument for out-of-range parameters.
WeakSatConstruction ConstructWeakSat(WeakSatKind kind, int p, int q = 0,
                                     int r = 0);

struct SubmodularityViolation {
  ElementSet base;
  int e = -1;
  int f = -1;
  int val_base = 0;
  int val_e = 0;
  int val_f = 0;
  int val_ef = 0;
};

struct SubmodularityReport {
  std::vector<SubmodularityViolation> violations;
  bool exhaustive = false;
  int64_t checked = 0;
};

/// Local form val(F+e) + val(F+f) >= val(F+e+f) + val(F). Exhaustive mode
/// needs ground_size <= 12; sampled mode draws `samples` seeded triples.
SubmodularityReport ValSubmodularityScan(const CopyFamily& family,
                                         int ground_size, bool exhaustive,
                                         int64_t samples = 0,
                                         uint64_t seed = 1);

struct ValMatroid {
  Matroid matroid;
  /// Every member is a circuit (holds whenever any X-matroid exists).
  bool members_are_circuits = false;
};

/// The matroid whose rank function is val_X. Throws kNotSubmodular with the
/// violating triple, kAxiomViolation if a postcondition fails.
ValMatroid BuildValMatroid(const CopyFamily& family, int ground_size);

struct FlatCertification {
  bool ok = true;
  std::vector<Certificate> certificates;
  /// First connected flat whose val stays above its rank.
  std::optional<ElementSet> failed_flat;
  int failed_value = 0;
  int failed_rank = 0;
  bool exact = true;
};

/// For each connected flat F of M, a certificate with value r_M(F).
/// Success means val_X = r_M, so M is the unique maximal X-matroid.
FlatCertification CertifyConnectedFlats(const Matroid& m,
                                        const CopyFamily& family,
                                        int64_t max_states = int64_t{1} << 23);

/// When r_M(F) = val(F, S): r_M(F - e) = r_M(F) - 1 for e in F outside the
/// union, and r_M(F + e) = r_M(F) for e in the union.
bool CheckEqualityConsequences(const Matroid& m, ElementSet target,
                               const std::vector<ElementSet>& sets);

}  // namespace xmatroid

#endif  // XMATROID_SEQUENCE_H_
