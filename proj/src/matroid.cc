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

#include "xmatroid/matroid.h"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "xmatroid/errors.h"

namespace xmatroid {

struct Matroid::Impl {
  int n = 0;
  bool is_explicit = false;
  int rank = 0;

  // Explicit representation.
  std::vector<ElementSet> circuits;
  std::vector<std::vector<ElementSet>> containing;
  std::vector<std::vector<ElementSet>> by_min;

  // Oracle representation; exactly one is set.
  IndependenceOracle independent;
  ExtensionOracle extension;
  RankOracle rank_fn;
};

namespace {

void CheckGroundSize(int n) {
  if (n < 1 || n > kMaxElements) {
    throw Error(ErrorKind::kInvalidArgument,
                "ground size must be in [1, 64], got " + std::to_string(n));
  }
}

bool ContainsListed(const std::vector<std::vector<ElementSet>>& by_min,
                    ElementSet f) {
  for (int e : f) {
    for (ElementSet c : by_min[e]) {
      if (c.IsSubsetOf(f)) return true;
    }
  }
  return false;
}

}  // namespace

Matroid Matroid::Explicit(int ground_size, int rank,
                          std::vector<ElementSet> circuits) {
  CheckGroundSize(ground_size);
  if (rank < 0 || rank > ground_size) {
    throw Error(ErrorKind::kInvalidArgument,
                "rank " + std::to_string(rank) + " out of range");
  }
  const ElementSet ground = ElementSet::Full(ground_size);
  std::sort(circuits.begin(), circuits.end());
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  for (ElementSet c : circuits) {
    if (c.empty() || !c.IsSubsetOf(ground) || c.size() > rank + 1) {
      throw Error(ErrorKind::kMalformedInput,
                  "invalid circuit " + c.ToString() + " for rank " +
                      std::to_string(rank));
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->n = ground_size;
  impl->is_explicit = true;
  impl->rank = rank;
  impl->containing.resize(ground_size);
  impl->by_min.resize(ground_size);
  // Circuits arrive sorted by size, so any listed subset of c is already
  // indexed when c is examined.
  std::vector<ElementSet> spanning;
  for (ElementSet c : circuits) {
    for (int e : c) {
      for (ElementSet d : impl->by_min[e]) {
        if (d.IsSubsetOf(c)) {
          throw Error(ErrorKind::kMalformedInput,
                      "circuit " + c.ToString() + " contains circuit " +
                          d.ToString());
        }
      }
    }
    if (c.size() == rank + 1) {
      spanning.push_back(c);
      continue;
    }
    impl->circuits.push_back(c);
    impl->by_min[c.min()].push_back(c);
    for (int e : c) impl->containing[e].push_back(c);
  }
  return Matroid(std::move(impl));
}

Matroid Matroid::Uniform(int ground_size, int rank) {
  return Explicit(ground_size, rank, {});
}

Matroid Matroid::FromIndependence(int ground_size, IndependenceOracle oracle,
                                  ExtensionOracle extension) {
  CheckGroundSize(ground_size);
  auto impl = std::make_shared<Impl>();
  impl->n = ground_size;
  impl->independent = std::move(oracle);
  impl->extension = std::move(extension);
  Matroid m(impl);
  impl->rank = m.Basis(m.ground()).size();
  return m;
}

Matroid Matroid::FromRank(int ground_size, RankOracle oracle) {
  CheckGroundSize(ground_size);
  auto impl = std::make_shared<Impl>();
  impl->n = ground_size;
  impl->rank_fn = std::move(oracle);
  impl->rank = impl->rank_fn(ElementSet::Full(ground_size));
  return Matroid(std::move(impl));
}

int Matroid::ground_size() const { return impl_->n; }
bool Matroid::is_explicit() const { return impl_->is_explicit; }
int Matroid::rank() const { return impl_->rank; }

bool Matroid::IsIndependent(ElementSet f) const {
  const Impl& m = *impl_;
  if (m.is_explicit) {
    return f.size() <= m.rank && !ContainsListed(m.by_min, f);
  }
  if (m.independent) return m.independent(f);
  return m.rank_fn(f) == f.size();
}

bool Matroid::CanAdd(ElementSet independent, int e) const {
  const Impl& m = *impl_;
  const ElementSet f = independent.With(e);
  if (m.is_explicit) {
    if (f.size() > m.rank) return false;
    for (ElementSet c : m.containing[e]) {
      if (c.IsSubsetOf(f)) return false;
    }
    return true;
  }
  if (m.extension) return m.extension(independent, e);
  if (m.independent) return m.independent(f);
  return m.rank_fn(f) == f.size();
}

ElementSet Matroid::Basis(ElementSet f) const {
  ElementSet basis;
  for (int e : f) {
    if (impl_->is_explicit && basis.size() == impl_->rank) break;
    if (CanAdd(basis, e)) basis = basis.With(e);
  }
  return basis;
}

int Matroid::Rank(ElementSet f) const {
  if (impl_->rank_fn) return impl_->rank_fn(f);
  return Basis(f).size();
}

ElementSet Matroid::Closure(ElementSet f) const {
  const ElementSet basis = Basis(f);
  ElementSet out = f;
  for (int e : ground() - f) {
    if (!CanAdd(basis, e)) out = out.With(e);
  }
  return out;
}

bool Matroid::IsCircuit(ElementSet c) const {
  if (c.empty() || IsIndependent(c)) return false;
  for (int e : c) {
    if (!IsIndependent(c.Without(e))) return false;
  }
  return true;
}

const std::vector<ElementSet>& Matroid::nonspanning_circuits() const {
  if (!impl_->is_explicit) {
    throw Error(ErrorKind::kInvalidArgument,
                "circuit list requested from an oracle matroid");
  }
  return impl_->circuits;
}

std::span<const ElementSet> Matroid::CircuitsContaining(int e) const {
  if (!impl_->is_explicit) {
    throw Error(ErrorKind::kInvalidArgument,
                "circuit list requested from an oracle matroid");
  }
  return impl_->containing[e];
}

namespace {

double Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  double b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

void ForEachCircuit(const Matroid& m, int max_size,
                    const std::function<bool(ElementSet)>& fn, int64_t budget) {
  const int n = m.ground_size();
  const int r = m.rank();
  max_size = std::min(max_size, r + 1);
  if (m.is_explicit()) {
    for (ElementSet c : m.nonspanning_circuits()) {
      if (c.size() > max_size) return;
      if (!fn(c)) return;
    }
    if (max_size < r + 1 || r + 1 > n) return;
    if (Binomial(n, r + 1) > static_cast<double>(budget)) {
      throw Error(ErrorKind::kBudgetExceeded,
                  "spanning circuit scan exceeds budget");
    }
    ForEachKSubset(n, r + 1, [&](ElementSet s) {
      // s is a circuit iff it contains no non-spanning circuit.
      for (int e : s) {
        if (!m.IsIndependent(s.Without(e))) return true;
      }
      return fn(s);
    });
    return;
  }

  int64_t examined = 0;
  std::vector<ElementSet> level = {ElementSet()};
  for (int s = 1; s <= max_size && !level.empty(); ++s) {
    std::unordered_set<ElementSet, ElementSetHash> previous(level.begin(),
                                                            level.end());
    std::vector<ElementSet> next;
    std::vector<ElementSet> circuits;
    for (ElementSet base : level) {
      for (int e = base.max() + 1; e < n; ++e) {
        if (++examined > budget) {
          throw Error(ErrorKind::kBudgetExceeded, "circuit scan exceeds budget");
        }
        const ElementSet cand = base.With(e);
        if (m.CanAdd(base, e)) {
          next.push_back(cand);
          continue;
        }
        bool minimal = true;
        for (int x : cand) {
          if (x != e && !previous.contains(cand.Without(x))) {
            minimal = false;
            break;
          }
        }
        if (minimal) circuits.push_back(cand);
      }
    }
    // Each candidate arises once, from its set minus its largest element.
    std::sort(circuits.begin(), circuits.end());
    for (ElementSet c : circuits) {
      if (!fn(c)) return;
    }
    level = std::move(next);
  }
}

std::vector<ElementSet> Circuits(const Matroid& m, int max_size,
                                 int64_t budget) {
  std::vector<ElementSet> out;
  ForEachCircuit(
      m, max_size,
      [&](ElementSet c) {
        out.push_back(c);
        return true;
      },
      budget);
  return out;
}

Matroid ToExplicit(const Matroid& m, int64_t budget) {
  if (m.is_explicit()) return m;
  return Matroid::Explicit(m.ground_size(), m.rank(),
                           Circuits(m, m.rank(), budget));
}

Matroid Truncate(const Matroid& m) {
  const int r = m.rank();
  if (r == 0) throw Error(ErrorKind::kRankZero, "cannot truncate a rank-0 matroid");
  if (m.is_explicit()) {
    std::vector<ElementSet> kept;
    for (ElementSet c : m.nonspanning_circuits()) {
      if (c.size() <= r - 1) kept.push_back(c);
    }
    return Matroid::Explicit(m.ground_size(), r - 1, std::move(kept));
  }
  return Matroid::FromIndependence(
      m.ground_size(),
      [m, r](ElementSet f) { return f.size() <= r - 1 && m.IsIndependent(f); },
      [m, r](ElementSet i, int e) { return i.size() < r - 1 && m.CanAdd(i, e); });
}

const char* RelationName(Relation r) {
  switch (r) {
    case Relation::kStrictlyBelow: return "strictly-below";
    case Relation::kStrictlyAbove: return "strictly-above";
    case Relation::kEqual: return "equal";
    case Relation::kIncomparable: return "incomparable";
  }
  return "unknown";
}

namespace {

// First circuit of `circuits_of` that is independent in `other`.
std::optional<ElementSet> FirstCircuitIndependentIn(const Matroid& circuits_of,
                                                    const Matroid& other) {
  std::optional<ElementSet> found;
  ForEachCircuit(circuits_of, other.rank(), [&](ElementSet c) {
    if (other.IsIndependent(c)) {
      found = c;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

CompareResult WeakOrderCompare(const Matroid& a, const Matroid& b) {
  if (a.ground_size() != b.ground_size()) {
    throw Error(ErrorKind::kGroundMismatch,
                "ground sizes " + std::to_string(a.ground_size()) + " and " +
                    std::to_string(b.ground_size()));
  }
  CompareResult result;
  result.independent_in_first = FirstCircuitIndependentIn(b, a);
  result.independent_in_second = FirstCircuitIndependentIn(a, b);
  const bool a_not_below = result.independent_in_first.has_value();
  const bool b_not_below = result.independent_in_second.has_value();
  if (a_not_below && b_not_below) {
    result.relation = Relation::kIncomparable;
  } else if (a_not_below) {
    result.relation = Relation::kStrictlyAbove;
  } else if (b_not_below) {
    result.relation = Relation::kStrictlyBelow;
  } else {
    result.relation = Relation::kEqual;
  }
  return result;
}

bool Equal(const Matroid& a, const Matroid& b) {
  if (a.ground_size() != b.ground_size() || a.rank() != b.rank()) return false;
  if (a.is_explicit() && b.is_explicit()) {
    return a.nonspanning_circuits() == b.nonspanning_circuits();
  }
  return WeakOrderCompare(a, b).relation == Relation::kEqual;
}

AxiomReport VerifyMatroidAxioms(
    int ground_size, const std::function<bool(ElementSet)>& independent) {
  if (ground_size < 0 || ground_size > 20) {
    throw Error(ErrorKind::kBudgetExceeded,
                "exhaustive axiom check needs ground size <= 20");
  }
  const uint64_t count = uint64_t{1} << ground_size;
  std::vector<uint8_t> indep(count);
  for (uint64_t s = 0; s < count; ++s) indep[s] = independent(ElementSet(s));

  AxiomReport report;
  if (!indep[0]) {
    report.ok = false;
    report.violation = "empty set is dependent";
    return report;
  }
  for (uint64_t s = 1; s < count; ++s) {
    if (!indep[s]) continue;
    for (int e : ElementSet(s)) {
      const ElementSet sub = ElementSet(s).Without(e);
      if (!indep[sub.bits()]) {
        report.ok = false;
        report.violation = "not hereditary";
        report.first = sub;
        report.second = ElementSet(s);
        return report;
      }
    }
  }
  // rank[s] = size of a largest independent subset of s.
  std::vector<uint8_t> rank(count);
  for (uint64_t s = 1; s < count; ++s) {
    if (indep[s]) {
      rank[s] = static_cast<uint8_t>(std::popcount(s));
      continue;
    }
    uint8_t best = 0;
    for (int e : ElementSet(s)) {
      best = std::max(best, rank[ElementSet(s).Without(e).bits()]);
    }
    rank[s] = best;
  }
  // Exchange holds iff every independent I is a basis of I together with
  // the elements that cannot extend it.
  const ElementSet ground = ElementSet::Full(ground_size);
  for (uint64_t s = 0; s < count; ++s) {
    if (!indep[s]) continue;
    const ElementSet i(s);
    ElementSet blocked = i;
    for (int e : ground - i) {
      if (!indep[i.With(e).bits()]) blocked = blocked.With(e);
    }
    if (rank[blocked.bits()] == i.size()) continue;
    ElementSet j = blocked;
    while (!indep[j.bits()]) {
      for (int e : j) {
        if (rank[j.Without(e).bits()] == rank[j.bits()]) {
          j = j.Without(e);
          break;
        }
      }
    }
    report.ok = false;
    report.violation = "exchange fails";
    report.first = i;
    report.second = j;
    return report;
  }
  return report;
}

AxiomReport VerifyMatroidAxioms(const Matroid& m) {
  return VerifyMatroidAxioms(
      m.ground_size(), [&](ElementSet f) { return m.IsIndependent(f); });
}

std::vector<ElementSet> Flats(const Matroid& m, int64_t max_flats) {
  const ElementSet ground = m.ground();
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> frontier = {m.Closure(ElementSet())};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (ElementSet f : frontier) {
      ElementSet remaining = ground - f;
      while (!remaining.empty()) {
        const int e = remaining.min();
        const ElementSet cover = m.Closure(f.With(e));
        remaining -= cover;
        if (seen.insert(cover).second) {
          if (static_cast<int64_t>(seen.size()) > max_flats) {
            throw Error(ErrorKind::kBudgetExceeded, "flat enumeration exceeds budget");
          }
          next.push_back(cover);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<ElementSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool IsCyclic(const Matroid& m, ElementSet f) {
  const int r = m.Rank(f);
  for (int e : f) {
    if (m.Rank(f.Without(e)) != r) return false;
  }
  return true;
}

std::vector<ElementSet> CyclicFlats(const Matroid& m, int64_t max_flats) {
  std::vector<ElementSet> out;
  for (ElementSet f : Flats(m, max_flats)) {
    if (IsCyclic(m, f)) out.push_back(f);
  }
  return out;
}

std::vector<ElementSet> ConnectedFlats(const Matroid& m, int64_t max_flats) {
  std::vector<ElementSet> out;
  for (ElementSet f : Flats(m, max_flats)) {
    if (!f.empty() && IsConnected(m, f)) out.push_back(f);
  }
  return out;
}

std::vector<ElementSet> Components(const Matroid& m, ElementSet f) {
  std::vector<int> parent(m.ground_size());
  for (int e = 0; e < m.ground_size(); ++e) parent[e] = e;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const ElementSet basis = m.Basis(f);
  for (int e : f - basis) {
    // The fundamental circuit of e is e plus every b whose removal lets e in.
    for (int b : basis) {
      if (m.CanAdd(basis.Without(b), e)) parent[find(e)] = find(b);
    }
  }
  std::vector<ElementSet> out;
  std::vector<int> slot(m.ground_size(), -1);
  for (int e : f) {
    const int root = find(e);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]] = out[slot[root]].With(e);
  }
  return out;
}

bool IsConnected(const Matroid& m, ElementSet f) {
  return !f.empty() && Components(m, f).size() == 1;
}

bool IsConnectedByPartition(const Matroid& m, ElementSet f) {
  if (f.empty()) return false;
  if (f.size() > 20) {
    throw Error(ErrorKind::kBudgetExceeded, "partition test needs |F| <= 20");
  }
  const int total = m.Rank(f);
  const int anchor = f.min();
  const ElementSet rest = f.Without(anchor);
  bool connected = true;
  ForEachSubset(rest, [&](ElementSet sub) {
    if (!connected) return;
    const ElementSet part = sub.With(anchor);
    if (part == f) return;
    if (m.Rank(part) + m.Rank(f - part) == total) connected = false;
  });
  return connected;
}

}  // namespace xmatroid
