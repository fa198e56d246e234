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

#include "xmatroid/sequence.h"

#include <algorithm>
#include <cstdio>
#include <random>
#include <unordered_map>

#include "xmatroid/errors.h"

namespace xmatroid {

int FirstImproperIndex(const std::vector<ElementSet>& sets) {
  ElementSet u;
  for (size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].IsSubsetOf(u)) return static_cast<int>(i);
    u |= sets[i];
  }
  return -1;
}

int EvalVal(ElementSet target, const std::vector<ElementSet>& sets) {
  const int bad = FirstImproperIndex(sets);
  if (bad >= 0) {
    throw Error(ErrorKind::kImproperSequence,
                "member at position " + std::to_string(bad) +
                    " is covered by its predecessors");
  }
  ElementSet u = target;
  for (ElementSet s : sets) u |= s;
  return u.size() - static_cast<int>(sets.size());
}

int EvalVal(const CopyFamily& family, ElementSet target,
            const std::vector<int>& members) {
  std::vector<ElementSet> sets;
  for (int i : members) {
    if (i < 0 || i >= family.size()) {
      throw Error(ErrorKind::kInvalidArgument, "member index out of range");
    }
    sets.push_back(family.members[i]);
  }
  return EvalVal(target, sets);
}

bool VerifyCertificate(const Certificate& cert) {
  if (FirstImproperIndex(cert.sets) >= 0) return false;
  return EvalVal(cert.target, cert.sets) == cert.value;
}

std::string FamilyHash(const CopyFamily& family) {
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      h ^= (word >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(family.members.size());
  for (ElementSet m : family.members) mix(m.bits());
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct SearchState {
  ElementSet u;
  int k = 0;
  int pred = -1;
  int member = -1;
};

// Union-state dynamic program shared by ComputeVal and ValTable. States are
// expanded in order of |U|, and within one size by bit value, so that each
// state's k is final before it is expanded and ties resolve identically on
// every run. `expand` decides whether a finalized state is expanded.
class UnionSearch {
 public:
  UnionSearch(const CopyFamily& family, int64_t max_states)
      : family_(family), max_states_(max_states) {}

  template <typename Visit>
  bool Run(Visit&& visit) {
    states_.push_back({ElementSet(), 0, -1, -1});
    index_.emplace(0, 0);
    std::vector<std::vector<int>> layers(kMaxElements + 1);
    layers[0].push_back(0);
    for (int size = 0; size <= kMaxElements; ++size) {
      std::vector<int>& layer = layers[size];
      std::sort(layer.begin(), layer.end(), [&](int a, int b) {
        return states_[a].u.bits() < states_[b].u.bits();
      });
      for (size_t li = 0; li < layer.size(); ++li) {
        const int si = layer[li];
        if (!visit(si, states_[si])) continue;
        const ElementSet u = states_[si].u;
        const int k = states_[si].k;
        for (int m = 0; m < family_.size(); ++m) {
          const ElementSet x = family_.members[m];
          if (x.IsSubsetOf(u)) continue;
          const ElementSet next = u | x;
          auto [it, inserted] =
              index_.emplace(next.bits(), static_cast<int>(states_.size()));
          if (inserted) {
            if (static_cast<int64_t>(states_.size()) >= max_states_) {
              index_.erase(it);
              return false;
            }
            states_.push_back({next, k + 1, si, m});
            layers[next.size()].push_back(it->second);
          } else if (states_[it->second].k < k + 1) {
            states_[it->second].k = k + 1;
            states_[it->second].pred = si;
            states_[it->second].member = m;
          }
        }
      }
      std::vector<int>().swap(layer);
    }
    return true;
  }

  const std::vector<SearchState>& states() const { return states_; }

  Certificate Trace(int si, ElementSet target) const {
    Certificate cert;
    cert.target = target;
    for (int cur = si; states_[cur].pred >= 0; cur = states_[cur].pred) {
      cert.members.push_back(states_[cur].member);
    }
    std::reverse(cert.members.begin(), cert.members.end());
    for (int m : cert.members) cert.sets.push_back(family_.members[m]);
    ElementSet u = target;
    for (ElementSet s : cert.sets) u |= s;
    cert.value = u.size() - static_cast<int>(cert.sets.size());
    return cert;
  }

 private:
  const CopyFamily& family_;
  int64_t max_states_;
  std::vector<SearchState> states_;
  std::unordered_map<uint64_t, int> index_;
};

}  // namespace

ValResult ComputeVal(const CopyFamily& family, ElementSet target,
                     const ValOptions& options) {
  const int floor =
      options.lower_bound ? options.lower_bound->Rank(target) : 0;
  UnionSearch search(family, options.max_states);
  int best = target.size();
  int best_state = 0;
  ValStats stats;
  bool done = best <= floor;
  const bool complete = search.Run([&](int si, const SearchState& s) {
    if (done) return false;
    ++stats.states;
    const int value = (target | s.u).size() - s.k;
    if (value < best) {
      best = value;
      best_state = si;
      if (best <= floor) {
        done = true;
        return false;
      }
    }
    // Every extension adds at least one element per member, so descendants
    // have value >= |U| - k.
    if (s.u.size() - s.k >= best) {
      ++stats.prunes;
      return false;
    }
    return true;
  });
  ValResult result;
  result.value = best;
  result.witness = search.Trace(best_state, target);
  result.stats = stats;
  result.exact = complete || done;
  return result;
}

ValTable ValTable::Build(const CopyFamily& family, int ground_size,
                         int64_t max_states) {
  if (ground_size < 0 || ground_size > 22) {
    throw Error(ErrorKind::kBudgetExceeded, "val table needs ground size <= 22");
  }
  if (!family.Support().IsSubsetOf(ElementSet::Full(ground_size))) {
    throw Error(ErrorKind::kGroundMismatch, "family exceeds the ground set");
  }
  ValTable table;
  table.n_ = ground_size;
  table.family_ = std::make_shared<const CopyFamily>(family);
  UnionSearch search(*table.family_, max_states);
  if (!search.Run([](int, const SearchState&) { return true; })) {
    throw Error(ErrorKind::kBudgetExceeded, "val table state budget exceeded");
  }
  for (const SearchState& s : search.states()) {
    table.states_.push_back({s.u, s.k, s.pred, s.member});
  }
  const uint64_t count = uint64_t{1} << ground_size;
  // best[W] = state with the largest k among states U ⊆ W.
  std::vector<uint32_t> best(count, 0);
  std::vector<int8_t> best_k(count, 0);
  for (size_t i = 0; i < table.states_.size(); ++i) {
    const uint64_t u = table.states_[i].u.bits();
    if (table.states_[i].k > best_k[u]) {
      best_k[u] = static_cast<int8_t>(table.states_[i].k);
      best[u] = static_cast<uint32_t>(i);
    }
  }
  for (int bit = 0; bit < ground_size; ++bit) {
    for (uint64_t w = 0; w < count; ++w) {
      if (!((w >> bit) & 1U)) continue;
      const uint64_t sub = w ^ (uint64_t{1} << bit);
      if (best_k[sub] > best_k[w] ||
          (best_k[sub] == best_k[w] && best[sub] < best[w])) {
        best_k[w] = best_k[sub];
        best[w] = best[sub];
      }
    }
  }
  // val(F) = min over W ⊇ F of |W| - best_k[W].
  table.val_.assign(count, 0);
  table.arg_.assign(count, 0);
  for (uint64_t w = 0; w < count; ++w) {
    table.val_[w] = static_cast<int8_t>(std::popcount(w) - best_k[w]);
    table.arg_[w] = best[w];
  }
  for (int bit = 0; bit < ground_size; ++bit) {
    for (uint64_t f = 0; f < count; ++f) {
      if ((f >> bit) & 1U) continue;
      const uint64_t sup = f | (uint64_t{1} << bit);
      if (table.val_[sup] < table.val_[f] ||
          (table.val_[sup] == table.val_[f] && table.arg_[sup] < table.arg_[f])) {
        table.val_[f] = table.val_[sup];
        table.arg_[f] = table.arg_[sup];
      }
    }
  }
  return table;
}

Certificate ValTable::Witness(ElementSet f) const {
  Certificate cert;
  cert.target = f;
  for (int cur = static_cast<int>(arg_[f.bits()]); states_[cur].pred >= 0;
       cur = states_[cur].pred) {
    cert.members.push_back(states_[cur].member);
  }
  std::reverse(cert.members.begin(), cert.members.end());
  for (int m : cert.members) cert.sets.push_back(family_->members[m]);
  cert.value = EvalVal(f, cert.sets);
  return cert;
}

WeakSatCheck CheckWeaklySaturated(const CopyFamily& family,
                                  const WeakSatSequence& sequence) {
  WeakSatCheck check;
  ElementSet cur = sequence.base;
  for (size_t i = 0; i < sequence.steps.size(); ++i) {
    const int m = sequence.steps[i];
    if (m < 0 || m >= family.size() ||
        (family.members[m] - cur).size() != 1) {
      check.valid = false;
      check.bad_step = static_cast<int>(i);
      break;
    }
    cur |= family.members[m];
  }
  check.constructed = cur;
  return check;
}

namespace {

// Greedy weak-saturation closure of base inside target; returns the steps
// taken and the reached set.
WeakSatSequence GreedyClosure(const CopyFamily& family, ElementSet base,
                              ElementSet target, int max_steps,
                              ElementSet* reached) {
  WeakSatSequence seq;
  seq.base = base;
  ElementSet cur = base;
  bool progress = true;
  while (cur != target && progress) {
    progress = false;
    for (int m = 0; m < family.size(); ++m) {
      const ElementSet x = family.members[m];
      if (!x.IsSubsetOf(target) || (x - cur).size() != 1) continue;
      if (static_cast<int>(seq.steps.size()) >= max_steps) {
        throw Error(ErrorKind::kBudgetExceeded, "weak saturation step budget");
      }
      seq.steps.push_back(m);
      cur |= x;
      progress = true;
      break;
    }
  }
  *reached = cur;
  return seq;
}

}  // namespace

std::optional<WeakSatSequence> SearchWeakSat(const CopyFamily& family,
                                             ElementSet base, ElementSet target,
                                             int max_steps) {
  if (!base.IsSubsetOf(target)) {
    throw Error(ErrorKind::kInvalidArgument, "start set must lie in the target");
  }
  ElementSet reached;
  WeakSatSequence seq = GreedyClosure(family, base, target, max_steps, &reached);
  if (reached != target) return std::nullopt;
  return seq;
}

namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kInvalidArgument, what);
}

ElementSet CompleteEdges(const HostGraph& host,
                         const std::vector<std::pair<int, int>>& pairs) {
  ElementSet out;
  for (auto [a, b] : pairs) out = out.With(host.EdgeId(a, b));
  return out;
}

}  // namespace

WeakSatConstruction ConstructWeakSat(WeakSatKind kind, int p, int q, int r) {
  std::vector<std::pair<int, int>> start;  // zero-based vertex pairs
  WeakSatConstruction out;
  switch (kind) {
    case WeakSatKind::kMatching: {
      Require(p >= 1 && q >= 2 * p + 1, "matchings need n >= 2k+1");
      out.host = HostGraph::Complete(q);
      out.family = EnumerateCopies(Pattern::Matching(p), out.host);
      for (int i = 0; i < p; ++i) start.push_back({2 * i, 2 * i + 1});
      out.base_is_member = true;
      break;
    }
    case WeakSatKind::kPath: {
      Require(p >= 1 && q >= p + 1, "paths need n >= k+1");
      out.host = HostGraph::Complete(q);
      out.family = EnumerateCopies(Pattern::Path(p), out.host);
      for (int i = 0; i < p; ++i) start.push_back({i, i + 1});
      out.base_is_member = true;
      break;
    }
    case WeakSatKind::kClique: {
      Require(p >= 1 && q >= p + 2, "cliques need m >= d+2");
      out.host = HostGraph::Complete(q);
      out.family = EnumerateCopies(Pattern::Complete(p + 2), out.host);
      for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < q; ++j) start.push_back({i, j});
      }
      break;
    }
    case WeakSatKind::kC4Complete: {
      Require(p >= 4, "C_4 on K_m needs m >= 4");
      out.host = HostGraph::Complete(p);
      out.family = EnumerateCopies(Pattern::Cycle(4), out.host);
      start.push_back({1, 2});
      for (int i = 1; i < p; ++i) start.push_back({0, i});
      break;
    }
    case WeakSatKind::kC4Bipartite: {
      Require(p >= 2 && q >= 2, "C_4 on K_{s,t} needs s,t >= 2");
      out.host = HostGraph::Bipartite(p, q);
      out.family = EnumerateCopies(Pattern::Cycle(4), out.host);
      for (int j = 0; j < q; ++j) start.push_back({0, p + j});
      for (int i = 1; i < p; ++i) start.push_back({i, p});
      break;
    }
    case WeakSatKind::kK5MinusComplete: {
      Require(p >= 5, "K_5^- on K_m needs m >= 5");
      out.host = HostGraph::Complete(p);
      out.family = EnumerateCopies(
          {Pattern::CompleteMinusEdge(5), Pattern::CompleteBipartite(3, 4)},
          out.host);
      start = {{0, 1}, {2, 3}};
      for (int i = 0; i < 2; ++i) {
        for (int j = 2; j < p; ++j) start.push_back({i, j});
      }
      break;
    }
    case WeakSatKind::kK34Bipartite: {
      Require(p >= 3 && q >= 4, "K_{3,4} on K_{s,t} needs s >= 3, t >= 4");
      out.host = HostGraph::Bipartite(p, q);
      out.family = EnumerateCopies(
          {Pattern::CompleteMinusEdge(5), Pattern::CompleteBipartite(3, 4)},
          out.host);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) start.push_back({i, p + j});
      }
      for (int i = 0; i < 2; ++i) {
        for (int j = 3; j < q; ++j) start.push_back({i, p + j});
      }
      for (int i = 3; i < p; ++i) {
        for (int j = 0; j < 2; ++j) start.push_back({i, p + j});
      }
      break;
    }
    case WeakSatKind::kK23Bipartite: {
      Require(p >= 2 && q >= 3, "K_{2,3} on K_{s,t} needs s >= 2, t >= 3");
      out.host = HostGraph::Bipartite(p, q);
      out.family = EnumerateCopies(Pattern::CompleteBipartite(2, 3), out.host);
      start.push_back({1, p + 1});
      for (int j = 0; j < q; ++j) start.push_back({0, p + j});
      for (int i = 1; i < p; ++i) start.push_back({i, p});
      break;
    }
    case WeakSatKind::kRootedK2: {
      Require(r >= 1 && p >= 1 && q >= 2 && p >= r + 1,
              "rooted K_{k+1,2} on K_{m',n'} needs m' >= k+1, n' >= 2");
      out.host = HostGraph::Bipartite(p, q);
      out.family = RootedCopies(r + 1, 2, out.host);
      for (int i = 0; i < p; ++i) start.push_back({i, p});
      for (int i = 0; i < r; ++i) {
        for (int j = 1; j < q; ++j) start.push_back({i, p + j});
      }
      break;
    }
  }
  out.target = out.host.AllEdges();
  const ElementSet base = CompleteEdges(out.host, start);
  if (out.base_is_member) {
    Require(out.family.Contains(base), "start set is not a member");
  }
  // A failed construction keeps its partial sequence; callers validate it.
  ElementSet reached;
  out.sequence = GreedyClosure(out.family, base, out.target, 1 << 16, &reached);
  return out;
}

namespace {

SubmodularityViolation CheckTriple(const std::function<int(ElementSet)>& val,
                                   ElementSet base, int e, int f, bool* bad) {
  SubmodularityViolation v;
  v.base = base;
  v.e = e;
  v.f = f;
  v.val_base = val(base);
  v.val_e = val(base.With(e));
  v.val_f = val(base.With(f));
  v.val_ef = val(base.With(e).With(f));
  *bad = v.val_e + v.val_f < v.val_ef + v.val_base;
  return v;
}

}  // namespace

SubmodularityReport ValSubmodularityScan(const CopyFamily& family,
                                         int ground_size, bool exhaustive,
                                         int64_t samples, uint64_t seed) {
  SubmodularityReport report;
  report.exhaustive = exhaustive;
  if (exhaustive && ground_size > 12) {
    throw Error(ErrorKind::kBudgetExceeded,
                "exhaustive submodularity scan needs ground size <= 12");
  }
  std::optional<ValTable> table;
  if (ground_size <= 22) table = ValTable::Build(family, ground_size);
  std::unordered_map<uint64_t, int> memo;
  auto val = [&](ElementSet f) {
    if (table) return table->Val(f);
    auto it = memo.find(f.bits());
    if (it != memo.end()) return it->second;
    const ValResult r = ComputeVal(family, f);
    if (!r.exact) throw Error(ErrorKind::kBudgetExceeded, "val search budget");
    memo.emplace(f.bits(), r.value);
    return r.value;
  };
  const ElementSet ground = ElementSet::Full(ground_size);
  if (exhaustive) {
    for (uint64_t s = 0; s < (uint64_t{1} << ground_size); ++s) {
      const ElementSet base(s);
      const ElementSet rest = ground - base;
      for (int e : rest) {
        for (int f : rest) {
          if (f <= e) continue;
          bool bad = false;
          SubmodularityViolation v = CheckTriple(val, base, e, f, &bad);
          ++report.checked;
          if (bad) report.violations.push_back(v);
        }
      }
    }
    return report;
  }
  std::mt19937_64 rng(seed);
  for (int64_t i = 0; i < samples; ++i) {
    const ElementSet base(rng() & ground.bits());
    const ElementSet rest = ground - base;
    if (rest.size() < 2) continue;
    const std::vector<int> ids = rest.ids();
    const int a = static_cast<int>(rng() % ids.size());
    int b = static_cast<int>(rng() % (ids.size() - 1));
    if (b >= a) ++b;
    bool bad = false;
    SubmodularityViolation v = CheckTriple(val, base, std::min(ids[a], ids[b]),
                                           std::max(ids[a], ids[b]), &bad);
    ++report.checked;
    if (bad) report.violations.push_back(v);
  }
  return report;
}

ValMatroid BuildValMatroid(const CopyFamily& family, int ground_size) {
  if (ground_size > 20) {
    throw Error(ErrorKind::kBudgetExceeded, "val matroid needs ground size <= 20");
  }
  auto table = std::make_shared<const ValTable>(ValTable::Build(family, ground_size));
  const ElementSet ground = ElementSet::Full(ground_size);
  for (uint64_t s = 0; s < (uint64_t{1} << ground_size); ++s) {
    const ElementSet base(s);
    for (int e : ground - base) {
      for (int f : ground - base) {
        if (f <= e) continue;
        const int ve = table->Val(base.With(e));
        const int vf = table->Val(base.With(f));
        const int vef = table->Val(base.With(e).With(f));
        if (ve + vf < vef + table->Val(base)) {
          throw Error(ErrorKind::kNotSubmodular,
                      "val fails submodularity at F=" + base.ToString() +
                          " e=" + std::to_string(e) + " f=" + std::to_string(f));
        }
      }
    }
  }
  ValMatroid out{Matroid::FromRank(ground_size,
                                   [table](ElementSet f) { return table->Val(f); }),
                 true};
  const AxiomReport axioms = VerifyMatroidAxioms(out.matroid);
  if (!axioms.ok) {
    throw Error(ErrorKind::kAxiomViolation,
                "val matroid fails the axioms: " + axioms.violation);
  }
  for (ElementSet x : family.members) {
    if (!IsCyclic(out.matroid, x)) {
      throw Error(ErrorKind::kAxiomViolation,
                  "member " + x.ToString() + " is not cyclic in the val matroid");
    }
    if (!out.matroid.IsCircuit(x)) out.members_are_circuits = false;
  }
  return out;
}

FlatCertification CertifyConnectedFlats(const Matroid& m,
                                        const CopyFamily& family,
                                        int64_t max_states) {
  FlatCertification out;
  std::optional<ValTable> table;
  if (m.ground_size() <= 20) table = ValTable::Build(family, m.ground_size(), max_states);
  for (ElementSet flat : ConnectedFlats(m)) {
    const int rank = m.Rank(flat);
    Certificate cert;
    if (table) {
      cert = table->Witness(flat);
    } else {
      ValOptions options;
      options.lower_bound = m;
      options.max_states = max_states;
      const ValResult r = ComputeVal(family, flat, options);
      if (!r.exact) out.exact = false;
      cert = r.witness;
    }
    if (cert.value != rank) {
      out.ok = false;
      out.failed_flat = flat;
      out.failed_value = cert.value;
      out.failed_rank = rank;
      return out;
    }
    out.certificates.push_back(cert);
  }
  return out;
}

bool CheckEqualityConsequences(const Matroid& m, ElementSet target,
                               const std::vector<ElementSet>& sets) {
  const int rank = m.Rank(target);
  if (rank != EvalVal(target, sets)) return true;
  ElementSet u;
  for (ElementSet s : sets) u |= s;
  for (int e : target - u) {
    if (m.Rank(target.Without(e)) != rank - 1) return false;
  }
  for (int e : u) {
    if (m.Rank(target.With(e)) != rank) return false;
  }
  return true;
}

}  // namespace xmatroid
