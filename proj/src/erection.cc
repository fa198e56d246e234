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

#include "xmatroid/erection.h"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "xmatroid/errors.h"

namespace xmatroid {
namespace {

bool AllCoveredSubsetsIndependent(const Matroid& m, ElementSet s) {
  for (int e : s) {
    if (!m.IsIndependent(s.Without(e))) return false;
  }
  return true;
}

class Superposition {
 public:
  Superposition(const Matroid& m, int64_t budget)
      : m_(m), r_(m.rank()), ground_(m.ground()), budget_(budget) {}

  /// Adds a candidate hyperplane. Returns false once the ground set itself
  /// has become a candidate.
  bool Insert(ElementSet h) {
    const ElementSet b = m_.Basis(h);
    if (auto it = owner_.find(b); it != owner_.end()) {
      const int g = Find(it->second);
      if (h.IsSubsetOf(sets_[g])) return true;
      return Absorb(g, h);
    }
    const int c = static_cast<int>(sets_.size());
    sets_.push_back(ElementSet());
    parent_.push_back(c);
    return Absorb(c, h);
  }

  std::vector<ElementSet> Hyperplanes() const {
    std::vector<ElementSet> out;
    for (size_t i = 0; i < sets_.size(); ++i) {
      if (parent_[i] == static_cast<int>(i)) out.push_back(sets_[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int Find(int c) {
    while (parent_[c] != c) c = parent_[c] = parent_[parent_[c]];
    return c;
  }

  // Grows candidate t by `extra`, claiming the new independent r-sets and
  // folding in every candidate that already owned one of them.
  bool Absorb(int t, ElementSet extra) {
    std::vector<ElementSet> work = {extra};
    while (!work.empty()) {
      const ElementSet grown = sets_[t] | work.back();
      work.pop_back();
      const ElementSet old = sets_[t];
      const ElementSet fresh = grown - old;
      if (fresh.empty()) continue;
      sets_[t] = grown;
      if (grown == ground_) return false;
      std::vector<int> clashes;
      for (int j = 1; j <= std::min(r_, fresh.size()); ++j) {
        ForEachKSubsetOf(fresh, j, [&](ElementSet x) {
          ForEachKSubsetOf(old, r_ - j, [&](ElementSet y) {
            if (++examined_ > budget_) {
              throw Error(ErrorKind::kBudgetExceeded, "erection superposition budget");
            }
            const ElementSet b = x | y;
            if (!m_.IsIndependent(b)) return true;
            auto [it, inserted] = owner_.try_emplace(b, t);
            if (!inserted) {
              const int g = Find(it->second);
              if (g != t) clashes.push_back(g);
            }
            return true;
          });
          return true;
        });
      }
      for (int g : clashes) {
        g = Find(g);
        if (g == t) continue;
        parent_[g] = t;
        work.push_back(sets_[g]);
      }
    }
    return true;
  }

  const Matroid& m_;
  const int r_;
  const ElementSet ground_;
  const int64_t budget_;
  int64_t examined_ = 0;
  std::vector<ElementSet> sets_;
  std::vector<int> parent_;
  std::unordered_map<ElementSet, int, ElementSetHash> owner_;
};

// Hyperplanes of m holding more than rank-1 elements, canonical order.
std::vector<ElementSet> LargeHyperplanes(const Matroid& m) {
  const int r = m.rank();
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> out;
  ForEachKSubset(m.ground_size(), r - 1, [&](ElementSet i) {
    if (!m.IsIndependent(i)) return true;
    ElementSet closure = i;
    for (int e : m.ground() - i) {
      if (!m.CanAdd(i, e)) closure = closure.With(e);
    }
    if (closure.size() > r - 1 && seen.insert(closure).second) out.push_back(closure);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

double Choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  double c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

ErectionResult FreeErection(const Matroid& input, const ErectionOptions& options) {
  const Matroid m = ToExplicit(input, options.budget);
  const int n = m.ground_size();
  const int r = m.rank();
  ErectionResult out{m, true};
  if (r == n) return out;
  if (r == 0) {
    out.matroid = Matroid::Uniform(n, 1);
    out.trivial = false;
    return out;
  }

  Superposition sp(m, options.budget);
  for (ElementSet a : LargeHyperplanes(m)) {
    for (int e : m.ground() - a) {
      if (!sp.Insert(a.With(e))) return out;
    }
  }

  std::vector<ElementSet> circuits = m.nonspanning_circuits();
  for (ElementSet h : sp.Hyperplanes()) {
    if (Choose(h.size(), r + 1) > static_cast<double>(options.budget)) {
      throw Error(ErrorKind::kBudgetExceeded, "hyperplane " + h.ToString() + " too large");
    }
    ForEachKSubsetOf(h, r + 1, [&](ElementSet s) {
      if (AllCoveredSubsetsIndependent(m, s)) circuits.push_back(s);
      return true;
    });
  }
  out.matroid = Matroid::Explicit(n, r + 1, std::move(circuits));
  out.trivial = false;

  if (!Equal(Truncate(out.matroid), m)) {
    throw Error(ErrorKind::kAxiomViolation, "free erection does not truncate to its input");
  }
  if (n <= options.verify_up_to) {
    const AxiomReport rep = VerifyMatroidAxioms(out.matroid);
    if (!rep.ok) {
      throw Error(ErrorKind::kAxiomViolation, "free erection: " + rep.violation);
    }
  }
  return out;
}

ElevationChain FreeElevation(const Matroid& m, int rank_cap,
                             const ErectionOptions& options) {
  ElevationChain chain;
  chain.stages.push_back(ToExplicit(m, options.budget));
  while (true) {
    if (rank_cap >= 0 && chain.stages.back().rank() > rank_cap) {
      chain.complete = false;
      return chain;
    }
    ErectionResult next = FreeErection(chain.stages.back(), options);
    if (next.trivial) return chain;
    chain.stages.push_back(std::move(next.matroid));
  }
}

bool IsErectionOf(const Matroid& m1, const Matroid& m0) {
  if (m1.ground_size() != m0.ground_size()) {
    throw Error(ErrorKind::kGroundMismatch, "erection check on different grounds");
  }
  if (m1.rank() == m0.rank()) return Equal(m1, m0);
  if (m1.rank() != m0.rank() + 1) return false;
  return Equal(Truncate(m1), m0);
}

std::vector<Matroid> EnumerateErections(const Matroid& input, int64_t max_choices) {
  const int n = input.ground_size();
  if (n > 9) {
    throw Error(ErrorKind::kInvalidArgument,
                "erection enumeration needs at most 9 elements, got " + std::to_string(n));
  }
  const Matroid m = ToExplicit(input);
  const int r = m.rank();
  std::vector<Matroid> out = {m};
  if (r == n) return out;

  std::vector<ElementSet> spanning;
  ForEachKSubset(n, r + 1, [&](ElementSet s) {
    if (AllCoveredSubsetsIndependent(m, s)) spanning.push_back(s);
    return true;
  });
  const int k = static_cast<int>(spanning.size());
  if (k >= 63 || (int64_t{1} << k) > max_choices) {
    throw Error(ErrorKind::kBudgetExceeded,
                std::to_string(k) + " spanning circuits is too many to enumerate");
  }
  // For each independent r-set, the spanning circuits containing it.
  std::vector<uint64_t> cover;
  ForEachKSubset(n, r, [&](ElementSet b) {
    if (!m.IsIndependent(b)) return true;
    uint64_t mask = 0;
    for (int i = 0; i < k; ++i) {
      if (b.IsSubsetOf(spanning[i])) mask |= uint64_t{1} << i;
    }
    cover.push_back(mask);
    return true;
  });

  for (uint64_t chosen = 1; chosen < (uint64_t{1} << k); ++chosen) {
    if (!std::all_of(cover.begin(), cover.end(),
                     [&](uint64_t c) { return (c & chosen) != 0; })) {
      continue;
    }
    std::unordered_set<ElementSet, ElementSetHash> bases;
    std::vector<ElementSet> circuits = m.nonspanning_circuits();
    for (int i = 0; i < k; ++i) {
      if ((chosen >> i) & 1) {
        bases.insert(spanning[i]);
      } else {
        circuits.push_back(spanning[i]);
      }
    }
    const AxiomReport rep = VerifyMatroidAxioms(n, [&](ElementSet s) {
      if (s.size() <= r) return m.IsIndependent(s);
      return s.size() == r + 1 && bases.contains(s);
    });
    if (rep.ok) out.push_back(Matroid::Explicit(n, r + 1, std::move(circuits)));
  }
  return out;
}

std::optional<Matroid> WeakOrderMaximum(const std::vector<Matroid>& ms) {
  if (ms.empty()) return std::nullopt;
  size_t best = 0;
  for (size_t i = 1; i < ms.size(); ++i) {
    if (WeakOrderCompare(ms[i], ms[best]).relation == Relation::kStrictlyAbove) best = i;
  }
  for (const Matroid& other : ms) {
    const Relation rel = WeakOrderCompare(ms[best], other).relation;
    if (rel != Relation::kStrictlyAbove && rel != Relation::kEqual) return std::nullopt;
  }
  return ms[best];
}

}  // namespace xmatroid
