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

#include <set>

#include "doctest.h"
#include "oracles.h"
#include "xmatroid/errors.h"
#include "xmatroid/graph.h"

namespace xmatroid {
namespace {

using testing::BruteRank;
using testing::IsForest;

Matroid Graphic(const HostGraph& host) {
  return Matroid::FromIndependence(
      host.num_edges(), [host](ElementSet f) { return IsForest(host, f); });
}

Matroid UniformC5K5() {
  const HostGraph k5 = HostGraph::Complete(5);
  return BuildUniformMatroid(EnumerateCopies(Pattern::Cycle(5), k5), 10);
}

TEST_CASE("rank of graphic K4 and the empty set") {
  const HostGraph k4 = HostGraph::Complete(4);
  const Matroid m = Graphic(k4);
  CHECK(m.Rank(k4.AllEdges()) == 3);
  CHECK(m.Rank(ElementSet()) == 0);
  CHECK(m.rank() == 3);
}

TEST_CASE("rank of uniform C5 matroid on K5") {
  const Matroid m = UniformC5K5();
  CHECK(m.Rank(ElementSet::Full(10)) == 5);
  int bases = 0;
  ForEachKSubset(10, 5, [&](ElementSet s) {
    bases += m.IsIndependent(s);
    return true;
  });
  CHECK(bases == 252 - 12);
}

TEST_CASE("closure examples") {
  const HostGraph k4 = HostGraph::Complete(4);
  const Matroid g = Graphic(k4);
  const int v12 = k4.EdgeId(0, 1), v23 = k4.EdgeId(1, 2), v13 = k4.EdgeId(0, 2);
  CHECK(g.Closure({v12, v23}) == ElementSet({v12, v23, v13}));
  CHECK(g.Closure({0, 1, 2}) == k4.AllEdges());

  const HostGraph k5 = HostGraph::Complete(5);
  const Matroid u = UniformC5K5();
  const ElementSet path = {k5.EdgeId(0, 1), k5.EdgeId(1, 2), k5.EdgeId(2, 3),
                           k5.EdgeId(3, 4)};
  // The only dependent 5-sets of size at most the rank are 5-cycles, so the
  // edge closing the path is the one element the closure adds.
  CHECK(u.Closure(path) == path.With(k5.EdgeId(0, 4)));
  for (int e : k5.AllEdges() - path) {
    CHECK((u.Rank(path.With(e)) == 4) == (e == k5.EdgeId(0, 4)));
  }
}

TEST_CASE("circuit enumeration") {
  const HostGraph k4 = HostGraph::Complete(4);
  const std::vector<ElementSet> circuits = Circuits(Graphic(k4), 4);
  CHECK(circuits.size() == 7);
  int triangles = 0;
  for (ElementSet c : circuits) triangles += c.size() == 3;
  CHECK(triangles == 4);
  CHECK(std::is_sorted(circuits.begin(), circuits.end()));

  const std::vector<ElementSet> pairs = Circuits(Matroid::Uniform(3, 1), 2);
  CHECK(pairs == std::vector<ElementSet>{ElementSet({0, 1}), ElementSet({0, 2}),
                                         ElementSet({1, 2})});
}

TEST_CASE("circuits regenerate independence") {
  const HostGraph k5 = HostGraph::Complete(5);
  const Matroid g = Graphic(k5);
  const Matroid e = ToExplicit(g);
  CHECK(e.is_explicit());
  for (uint64_t s = 0; s < 1024; ++s) {
    REQUIRE(e.IsIndependent(ElementSet(s)) == IsForest(k5, ElementSet(s)));
  }
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const testing::SmallLinear lin = testing::RandomLinear(9, 4, 3, seed);
    const Matroid oracle = Matroid::FromIndependence(
        9, [lin](ElementSet f) { return lin.Independent(f); });
    const std::vector<ElementSet> all = Circuits(oracle, oracle.rank() + 1);
    for (uint64_t s = 0; s < 512; ++s) {
      bool contains = false;
      for (ElementSet c : all) contains = contains || c.IsSubsetOf(ElementSet(s));
      REQUIRE(lin.Independent(ElementSet(s)) == !contains);
    }
    const Matroid ex = ToExplicit(oracle);
    CHECK(Circuits(ex, ex.rank() + 1) == all);
  }
}

TEST_CASE("rank axioms on graphic K5") {
  const HostGraph k5 = HostGraph::Complete(5);
  const Matroid g = Graphic(k5);
  std::vector<int> r(1024);
  for (uint64_t s = 0; s < 1024; ++s) r[s] = g.Rank(ElementSet(s));
  for (uint64_t a = 0; a < 1024; ++a) {
    REQUIRE(r[a] <= std::popcount(a));
    REQUIRE(r[a] == BruteRank([&](ElementSet f) { return IsForest(k5, f); },
                              ElementSet(a)));
    for (int e = 0; e < 10; ++e) {
      const int d = r[a | (uint64_t{1} << e)] - r[a];
      REQUIRE((d == 0 || d == 1));
    }
  }
  for (uint64_t a = 0; a < 1024; a += 7) {
    for (uint64_t b = 0; b < 1024; b += 3) {
      REQUIRE(r[a] + r[b] >= r[a | b] + r[a & b]);
    }
  }
}

TEST_CASE("closure is idempotent, extensive and monotone") {
  const Matroid u = UniformC5K5();
  for (uint64_t s = 0; s < 1024; s += 5) {
    const ElementSet f(s);
    const ElementSet c = u.Closure(f);
    REQUIRE(f.IsSubsetOf(c));
    REQUIRE(u.Closure(c) == c);
    REQUIRE(u.Rank(c) == u.Rank(f));
    for (int e = 0; e < 10; ++e) REQUIRE(c.IsSubsetOf(u.Closure(f.With(e))));
  }
}

TEST_CASE("flats and cyclic flats of graphic K4") {
  const HostGraph k4 = HostGraph::Complete(4);
  const Matroid g = Graphic(k4);
  std::vector<ElementSet> brute;
  for (uint64_t s = 0; s < 64; ++s) {
    const ElementSet f(s);
    bool flat = true;
    for (int e : k4.AllEdges() - f) flat = flat && g.Rank(f.With(e)) > g.Rank(f);
    if (flat) brute.push_back(f);
  }
  std::sort(brute.begin(), brute.end());
  const std::vector<ElementSet> flats = Flats(g);
  CHECK(flats == brute);
  CHECK(flats.size() == 15);  // set partitions of four vertices

  const std::vector<ElementSet> circuits = Circuits(g, 4);
  std::vector<ElementSet> cyclic_brute;
  for (ElementSet f : brute) {
    ElementSet covered;
    for (ElementSet c : circuits) {
      if (c.IsSubsetOf(f)) covered |= c;
    }
    if (covered == f) cyclic_brute.push_back(f);
  }
  CHECK(CyclicFlats(g) == cyclic_brute);
  CHECK(cyclic_brute.size() == 6);
}

TEST_CASE("components and connectivity") {
  const HostGraph k4 = HostGraph::Complete(4);
  CHECK(IsConnected(Graphic(k4), k4.AllEdges()));
  CHECK(IsConnectedByPartition(Graphic(k4), k4.AllEdges()));

  const Matroid coloop = Matroid::Uniform(1, 1);
  CHECK(Components(coloop, ElementSet({0})) == std::vector<ElementSet>{ElementSet({0})});

  std::vector<Edge> edges;
  for (const Edge& e : k4.edges()) edges.push_back(e);
  edges.push_back({4, 5});
  const HostGraph host = HostGraph::FromEdges(6, edges);
  const Matroid g = Graphic(host);
  const std::vector<ElementSet> parts = Components(g, host.AllEdges());
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == ElementSet::Full(6));
  CHECK(parts[1] == ElementSet({6}));
  CHECK(g.Rank(parts[0]) + g.Rank(parts[1]) == g.Rank(host.AllEdges()));

  // Fundamental-circuit components agree with the partition test.
  const HostGraph k5 = HostGraph::Complete(5);
  const Matroid g5 = Graphic(k5);
  const Matroid u5 = UniformC5K5();
  for (uint64_t s = 1; s < 1024; ++s) {
    REQUIRE(IsConnected(g5, ElementSet(s)) ==
            IsConnectedByPartition(g5, ElementSet(s)));
    REQUIRE(IsConnected(u5, ElementSet(s)) ==
            IsConnectedByPartition(u5, ElementSet(s)));
  }
}

TEST_CASE("truncation") {
  CHECK(Equal(Truncate(Matroid::Uniform(3, 2)), Matroid::Uniform(3, 1)));
  CHECK_THROWS_AS(Truncate(Matroid::Uniform(3, 0)), Error);

  const HostGraph k4 = HostGraph::Complete(4);
  const Matroid g = Graphic(k4);
  const Matroid t = Truncate(g);
  CHECK(t.rank() == 2);
  const std::vector<ElementSet> circuits = Circuits(t, 3);
  CHECK(circuits.size() == 20);  // every 3-subset of six edges
  for (uint64_t s = 0; s < 64; ++s) {
    const ElementSet f(s);
    REQUIRE(t.IsIndependent(f) == (g.IsIndependent(f) && f.size() <= 2));
  }
  const Matroid te = Truncate(ToExplicit(g));
  CHECK(Equal(te, ToExplicit(t)));
}

TEST_CASE("weak order comparison") {
  const Matroid u = UniformC5K5();
  const CompareResult same = WeakOrderCompare(u, u);
  CHECK(same.relation == Relation::kEqual);
  CHECK(!same.independent_in_first);

  const CompareResult below = WeakOrderCompare(Matroid::Uniform(4, 1),
                                               Matroid::Uniform(4, 3));
  CHECK(below.relation == Relation::kStrictlyBelow);
  REQUIRE(below.independent_in_second);
  CHECK(*below.independent_in_second == ElementSet({0, 1}));

  CHECK_THROWS_AS(WeakOrderCompare(Matroid::Uniform(3, 1), Matroid::Uniform(4, 1)),
                  Error);
}

TEST_CASE("axiom verification") {
  const Matroid u = UniformC5K5();
  CHECK(VerifyMatroidAxioms(u).ok);
  // {∅, {a}, {b}} on two elements is U_1.
  CHECK(VerifyMatroidAxioms(2, [](ElementSet f) { return f.size() <= 1; }).ok);

  const CopyFamily x = CopyFamily::FromSets({ElementSet({0, 1, 2}), ElementSet({0, 2, 3})});
  const AxiomReport bad = VerifyMatroidAxioms(
      4, [&](ElementSet f) { return UniformRecipeIndependent(x, 3, f); });
  CHECK(!bad.ok);
  CHECK(bad.violation == "exchange fails");
  CHECK(bad.first.size() < bad.second.size());
  for (int e : bad.second - bad.first) {
    CHECK(!UniformRecipeIndependent(x, 3, bad.first.With(e)));
  }

  const AxiomReport empty_dep = VerifyMatroidAxioms(2, [](ElementSet) { return false; });
  CHECK(!empty_dep.ok);
  CHECK_THROWS_AS(VerifyMatroidAxioms(21, [](ElementSet) { return true; }), Error);
}

TEST_CASE("explicit construction rejects malformed circuit lists") {
  CHECK_THROWS_AS(Matroid::Explicit(3, 1, {ElementSet({0, 1}), ElementSet({0})}),
                  Error);
  CHECK_THROWS_AS(Matroid::Explicit(3, 1, {ElementSet({0, 1, 2})}), Error);
  CHECK_THROWS_AS(Matroid::Explicit(0, 0, {}), Error);
  // A size rank+1 circuit is accepted and implied.
  const Matroid m = Matroid::Explicit(3, 1, {ElementSet({0, 1})});
  CHECK(m.nonspanning_circuits().empty());
  CHECK(Equal(m, Matroid::Uniform(3, 1)));
}

}  // namespace
}  // namespace xmatroid
