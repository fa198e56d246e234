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

#include "xmatroid/graph.h"

#include <random>

#include "doctest.h"
#include "oracles.h"
#include "xmatroid/errors.h"

namespace xmatroid {
namespace {

int64_t Choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  int64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

int64_t Factorial(int n) { return n <= 1 ? 1 : n * Factorial(n - 1); }

std::vector<int> SortedDegrees(const HostGraph& host, ElementSet f) {
  std::vector<int> d;
  for (int x : host.Degrees(f)) {
    if (x > 0) d.push_back(x);
  }
  std::sort(d.begin(), d.end());
  return d;
}

TEST_CASE("edge indexing") {
  const HostGraph k4 = HostGraph::Complete(4);
  CHECK(k4.num_edges() == 6);
  CHECK(k4.EdgeId(0, 1) == 0);
  CHECK(k4.EdgeId(0, 3) == 2);
  CHECK(k4.EdgeId(2, 1) == 3);
  CHECK(k4.EdgeId(2, 3) == 5);
  CHECK(k4.EdgeLabel(3) == "v2v3");
  const HostGraph k34 = HostGraph::Bipartite(3, 4);
  CHECK(k34.num_edges() == 12);
  CHECK(k34.EdgeId(1, 3 + 2) == 1 * 4 + 2);
  CHECK(k34.EdgeId(0, 1) == -1);
  CHECK(k34.EdgeLabel(6) == "u2w3");
}

TEST_CASE("copy counts on small hosts") {
  const HostGraph k4 = HostGraph::Complete(4);
  const HostGraph k5 = HostGraph::Complete(5);
  CHECK(EnumerateCopies(Pattern::Complete(3), k4).size() == 4);
  CHECK(EnumerateCopies(Pattern::Cycle(5), k5).size() == 12);
  CHECK(EnumerateCopies(Pattern::CompleteBipartite(2, 3), k5).size() == 10);
  CHECK_THROWS_AS(EnumerateCopies(Pattern::Complete(6), k5), Error);
}

TEST_CASE("copy counts match closed forms on K7") {
  const int n = 7;
  const HostGraph kn = HostGraph::Complete(n);
  for (int t = 2; t <= 5; ++t) {
    CHECK(EnumerateCopies(Pattern::Complete(t), kn).size() == Choose(n, t));
  }
  for (int t = 3; t <= 6; ++t) {
    CHECK(EnumerateCopies(Pattern::CompleteMinusEdge(t), kn).size() ==
          Choose(n, t) * Choose(t, 2));
  }
  for (int k = 3; k <= 7; ++k) {
    CHECK(EnumerateCopies(Pattern::Cycle(k), kn).size() ==
          Choose(n, k) * Factorial(k - 1) / 2);
  }
  for (int k = 1; k <= 5; ++k) {
    CHECK(EnumerateCopies(Pattern::Path(k), kn).size() ==
          Factorial(n) / Factorial(n - k - 1) / 2);
  }
  for (int k = 2; k <= 5; ++k) {
    CHECK(EnumerateCopies(Pattern::Star(k), kn).size() == n * Choose(n - 1, k));
  }
  for (int k = 1; k <= 3; ++k) {
    CHECK(EnumerateCopies(Pattern::Matching(k), kn).size() ==
          Factorial(n) / (Factorial(k) * (1 << k) * Factorial(n - 2 * k)));
  }
  CHECK(EnumerateCopies(Pattern::CompleteBipartite(3, 3), kn).size() ==
        Choose(7, 3) * Choose(4, 3) / 2);
}

TEST_CASE("specialized enumerators agree with backtracking") {
  std::mt19937_64 rng(11);
  std::vector<HostGraph> hosts = {HostGraph::Complete(6), HostGraph::Bipartite(3, 4)};
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Edge> edges;
    for (int i = 0; i < 7; ++i) {
      for (int j = i + 1; j < 7; ++j) {
        if (rng() % 3 != 0) edges.push_back({i, j});
      }
    }
    hosts.push_back(HostGraph::FromEdges(7, edges));
  }
  const std::vector<Pattern> patterns = {
      Pattern::Complete(3),          Pattern::Complete(4),
      Pattern::CompleteMinusEdge(4), Pattern::CompleteMinusEdge(5),
      Pattern::CompleteBipartite(2, 3), Pattern::CompleteBipartite(2, 2),
      Pattern::CompleteBipartite(3, 3), Pattern::Cycle(4),
      Pattern::Cycle(5),             Pattern::Cycle(6),
      Pattern::Path(2),              Pattern::Path(3),
      Pattern::Star(3),              Pattern::Matching(2),
      Pattern::Matching(3)};
  for (const HostGraph& host : hosts) {
    for (const Pattern& p : patterns) {
      if (p.NumVertices() > host.num_vertices()) continue;
      const CopyFamily fast = EnumerateCopies(p, host);
      const CopyFamily slow = EnumerateCopiesGeneric(p, host);
      INFO(p.Name(), " in ", host.Describe());
      REQUIRE(fast.members == slow.members);
      const std::vector<int> shape = SortedDegrees(HostGraph::FromEdges(
          p.NumVertices(), p.Edges()), ElementSet::Full(p.NumEdges()));
      for (ElementSet m : fast.members) {
        REQUIRE(m.size() == p.NumEdges());
        REQUIRE(SortedDegrees(host, m) == shape);
      }
    }
  }
}

TEST_CASE("rooted copies") {
  const HostGraph k33 = HostGraph::Bipartite(3, 3);
  CHECK(RootedCopies(3, 2, k33).size() == 3);
  CHECK(RootedCopies(2, 2, HostGraph::Bipartite(2, 2)).size() == 1);
  CHECK(EnumerateCopies(Pattern::CompleteBipartite(3, 2), k33).size() == 6);
  CHECK_THROWS_AS(RootedCopies(4, 2, k33), Error);
  for (ElementSet m : RootedCopies(2, 3, HostGraph::Bipartite(3, 4)).members) {
    const ElementSet v = HostGraph::Bipartite(3, 4).VerticesOf(m);
    CHECK((v & ElementSet::Full(3)).size() == 2);
    CHECK((v - ElementSet::Full(3)).size() == 3);
  }
}

TEST_CASE("pattern names parse back") {
  for (const char* name : {"K4", "K4-", "K2,3", "C5", "P3", "S3", "3K2", "K1,3"}) {
    CHECK(Pattern::Parse(name).Name() == name);
  }
  CHECK_THROWS_AS(Pattern::Parse("Q4"), Error);
}

TEST_CASE("union stability") {
  CHECK(IsUnionStable(EnumerateCopies(Pattern::Cycle(5), HostGraph::Complete(5))));
  CHECK(IsUnionStable(EnumerateCopies(Pattern::Star(3), HostGraph::Complete(5))));
  CHECK(IsUnionStable(EnumerateCopies(Pattern::Star(3), HostGraph::Complete(6))));
  const CopyFamily x = CopyFamily::FromSets({ElementSet({0, 1, 2}), ElementSet({0, 2, 3})});
  const UnionStability st = CheckUnionStable(x);
  CHECK(!st.stable);
  CHECK((st.shared_element == 0 || st.shared_element == 2));
  CHECK_THROWS_AS(
      CheckUnionStable(CopyFamily::FromSets({ElementSet({0}), ElementSet({1, 2})})),
      Error);
  CHECK_THROWS_AS(CheckUnionStable(CopyFamily()), Error);
}

TEST_CASE("union-stable closure") {
  const CopyFamily c5 = EnumerateCopies(Pattern::Cycle(5), HostGraph::Complete(5));
  CHECK(UnionStableClosure(c5).members == c5.members);
  const CopyFamily k4 = EnumerateCopies(Pattern::Complete(4), HostGraph::Complete(5));
  CHECK(UnionStableClosure(k4).members == k4.members);

  const CopyFamily x = CopyFamily::FromSets({ElementSet({0, 1, 2}), ElementSet({0, 2, 3})});
  const CopyFamily closed = UnionStableClosure(x);
  std::vector<ElementSet> all;
  ForEachKSubset(4, 3, [&](ElementSet s) {
    all.push_back(s);
    return true;
  });
  std::sort(all.begin(), all.end());
  CHECK(closed.members == all);
}

// Random 3-uniform families on at most 8 elements.
std::vector<CopyFamily> RandomFamilies(int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CopyFamily> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = 4 + static_cast<int>(rng() % 5);
    std::vector<ElementSet> sets;
    const int size = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < size; ++i) {
      ElementSet s;
      while (s.size() < 3) s = s.With(static_cast<int>(rng() % n));
      sets.push_back(s);
    }
    out.push_back(CopyFamily::FromSets(sets));
  }
  return out;
}

TEST_CASE("closure is minimal and idempotent") {
  for (const CopyFamily& x : RandomFamilies(60, 3)) {
    const CopyFamily closed = UnionStableClosure(x);
    REQUIRE(IsUnionStable(closed));
    REQUIRE(UnionStableClosure(closed).members == closed.members);
    if (closed.size() > 40) continue;
    for (ElementSet m : closed.members) {
      if (x.Contains(m)) continue;
      std::vector<ElementSet> fewer;
      for (ElementSet o : closed.members) {
        if (o != m) fewer.push_back(o);
      }
      REQUIRE(!IsUnionStable(CopyFamily::FromSets(fewer)));
    }
  }
}

TEST_CASE("uniform matroid exists exactly for union-stable families") {
  int stable = 0;
  for (const CopyFamily& x : RandomFamilies(300, 5)) {
    const int n = x.Support().max() + 1;
    const bool axioms =
        VerifyMatroidAxioms(n, [&](ElementSet f) {
          return UniformRecipeIndependent(x, 3, f);
        }).ok;
    REQUIRE(axioms == IsUnionStable(x));
    if (axioms) {
      ++stable;
      const Matroid m = BuildUniformMatroid(x, n);
      for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
        REQUIRE(m.IsIndependent(ElementSet(s)) ==
                UniformRecipeIndependent(x, 3, ElementSet(s)));
      }
    } else {
      REQUIRE_THROWS_AS(BuildUniformMatroid(x, n), Error);
    }
  }
  CHECK(stable > 20);
}

TEST_CASE("building U_X") {
  const HostGraph k5 = HostGraph::Complete(5);
  const CopyFamily c5 = EnumerateCopies(Pattern::Cycle(5), k5);
  const Matroid u = BuildUniformMatroid(c5, 10);
  CHECK(u.rank() == 5);
  for (ElementSet m : c5.members) {
    CHECK(u.IsCircuit(m));
    CHECK(IsCyclic(u, m));
  }

  std::vector<ElementSet> all;
  ForEachKSubset(6, 3, [&](ElementSet s) {
    all.push_back(s);
    return true;
  });
  CHECK(Equal(BuildUniformMatroid(CopyFamily::FromSets(all), 6), Matroid::Uniform(6, 2)));

  const HostGraph k7 = HostGraph::Complete(7);
  const CopyFamily k23 = EnumerateCopies(Pattern::CompleteBipartite(2, 3), k7);
  const Matroid uk = BuildUniformMatroid(k23, k7.num_edges());
  CHECK(uk.rank() == 6);
  CHECK(uk.nonspanning_circuits().size() == k23.members.size());

  CHECK_THROWS_AS(BuildUniformMatroid(CopyFamily(), 4), Error);
  CHECK_THROWS_AS(
      BuildUniformMatroid(CopyFamily::FromSets({ElementSet({0, 1, 2}), ElementSet({0, 2, 3})}), 4),
      Error);
}

TEST_CASE("support restriction drops edges outside every copy") {
  // A triangle with a pendant edge.
  const HostGraph host = HostGraph::FromEdges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  const CopyFamily tri = EnumerateCopies(Pattern::Complete(3), host);
  const SupportRestriction r = RestrictToSupport(host, tri);
  CHECK(r.host.num_edges() == 3);
  CHECK(r.family.members == std::vector<ElementSet>{ElementSet::Full(3)});
  CHECK(r.old_id == std::vector<int>{0, 1, 2});
}

}  // namespace
}  // namespace xmatroid
