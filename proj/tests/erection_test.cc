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

#include <set>

#include "doctest.h"
#include "oracles.h"
#include "xmatroid/count_matroid.h"
#include "xmatroid/errors.h"
#include "xmatroid/fixtures.h"
#include "xmatroid/graph.h"

namespace xmatroid {
namespace {

// Free erection by seeds, circuit saturation and merging, written
// independently of the library routine. Returns the independent
// (r+1)-sets of the erection.
std::set<ElementSet> SaturationErectionBases(const Matroid& input) {
  const Matroid m = ToExplicit(input);
  const int n = m.ground_size();
  const int r = m.rank();
  const std::vector<ElementSet>& ns = m.nonspanning_circuits();
  auto saturate = [&](ElementSet s) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (ElementSet c : ns) {
        const ElementSet missing = c - s;
        if (missing.size() == 1) {
          s |= missing;
          grew = true;
        }
      }
    }
    return s;
  };
  std::vector<ElementSet> family;
  ForEachKSubset(n, r + 1, [&](ElementSet d) {
    if (m.Rank(d) == r && !m.IsCircuit(d)) family.push_back(saturate(d));
    return true;
  });
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t i = 0; i < family.size() && !merged; ++i) {
      for (size_t j = i + 1; j < family.size() && !merged; ++j) {
        if (family[i] == family[j] || m.Rank(family[i] & family[j]) == r) {
          family[i] = saturate(family[i] | family[j]);
          family.erase(family.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
      }
    }
  }
  std::set<ElementSet> bases;
  ForEachKSubset(n, r + 1, [&](ElementSet s) {
    if (m.Rank(s) < r) return true;
    for (ElementSet h : family) {
      if (s.IsSubsetOf(h)) return true;
    }
    for (int e : s) {
      if (!m.IsIndependent(s.Without(e))) return true;
    }
    bases.insert(s);
    return true;
  });
  return bases;
}

std::set<ElementSet> TopBases(const Matroid& m) {
  std::set<ElementSet> out;
  ForEachKSubset(m.ground_size(), m.rank(), [&](ElementSet s) {
    if (m.IsIndependent(s)) out.insert(s);
    return true;
  });
  return out;
}

Matroid Graphic(int n) { return InducedMatroid(CountFunction::F(1, 1), HostGraph::Complete(n)); }

void CheckAgainstEnumeration(const Matroid& m) {
  const ErectionResult free = FreeErection(m);
  const std::vector<Matroid> all = EnumerateErections(m);
  REQUIRE(!all.empty());
  CHECK(Equal(all.front(), m));
  for (const Matroid& e : all) REQUIRE(IsErectionOf(e, m));
  const std::optional<Matroid> top = WeakOrderMaximum(all);
  REQUIRE(top.has_value());
  CHECK(Equal(*top, free.matroid));
  CHECK(free.trivial == (all.size() == 1));
  if (!free.trivial) {
    CHECK(free.matroid.rank() == m.rank() + 1);
    CHECK(Equal(Truncate(free.matroid), m));
    CHECK(TopBases(free.matroid) == SaturationErectionBases(m));
  }
}

TEST_CASE("erections of small uniform and free matroids") {
  const ErectionResult u = FreeErection(Matroid::Uniform(3, 1));
  CHECK(!u.trivial);
  CHECK(Equal(u.matroid, Matroid::Uniform(3, 2)));
  const std::vector<Matroid> all = EnumerateErections(Matroid::Uniform(3, 1));
  // The trivial erection, U_2, and three with one parallel pair.
  CHECK(all.size() == 5);
  CHECK(Equal(all[0], Matroid::Uniform(3, 1)));
  CHECK(std::any_of(all.begin(), all.end(),
                    [](const Matroid& e) { return Equal(e, Matroid::Uniform(3, 2)); }));

  CHECK(FreeErection(Matroid::Free(5)).trivial);
  CHECK(EnumerateErections(Matroid::Free(5)).size() == 1);
  CHECK(Equal(FreeErection(Matroid::Uniform(4, 0)).matroid, Matroid::Uniform(4, 1)));
  CheckAgainstEnumeration(Matroid::Uniform(5, 2));
  CheckAgainstEnumeration(Matroid::Uniform(4, 0));
}

TEST_CASE("graphic K4 has only the trivial erection") {
  // The star at a vertex spans every edge once triangles are dependent.
  const Matroid k4 = Graphic(4);
  CHECK(FreeErection(k4).trivial);
  CHECK(EnumerateErections(k4).size() == 1);
  CheckAgainstEnumeration(k4);
}

TEST_CASE("erections of uniform X-matroids on small graphs") {
  const HostGraph k4 = HostGraph::Complete(4);
  CheckAgainstEnumeration(BuildUniformMatroid(EnumerateCopies(Pattern::Cycle(4), k4), 6));
  CheckAgainstEnumeration(BuildUniformMatroid(EnumerateCopies(Pattern::Matching(2), k4), 6));
  CheckAgainstEnumeration(BuildUniformMatroid(EnumerateCopies(Pattern::Star(3), k4), 6));
  const HostGraph k23 = HostGraph::Bipartite(2, 3);
  CheckAgainstEnumeration(BuildUniformMatroid(EnumerateCopies(Pattern::Cycle(4), k23), 6));
}

TEST_CASE("free erection is the maximum erection on random matroids") {
  int nontrivial = 0;
  for (const Matroid& m : SmallErectionFixtures(30, 99)) {
    INFO("rank ", m.rank(), " on ", m.ground_size());
    CheckAgainstEnumeration(m);
    nontrivial += FreeErection(m).trivial ? 0 : 1;
  }
  CHECK(nontrivial >= 10);
}

TEST_CASE("free erection agrees with saturation on mid-size grounds") {
  const HostGraph k6 = HostGraph::Complete(6);
  for (const Matroid& m :
       {BuildUniformMatroid(EnumerateCopies(Pattern::Cycle(5), k6), 15),
        BuildUniformMatroid(EnumerateCopies(Pattern::Cycle(4), k6), 15),
        BuildUniformMatroid(EnumerateCopies(Pattern::Star(3), HostGraph::Complete(5)), 10),
        RandomBinaryMatroid(12, 5, 3), RandomBinaryMatroid(11, 6, 4),
        Truncate(RandomBinaryMatroid(12, 5, 3)), Truncate(Graphic(6)),
        Truncate(Truncate(Graphic(6)))}) {
    const ErectionResult free = FreeErection(m);
    const std::set<ElementSet> expected = SaturationErectionBases(m);
    CHECK(free.trivial == expected.empty());
    if (!free.trivial) CHECK(TopBases(free.matroid) == expected);
  }
}

TEST_CASE("non-spanning circuits survive the erection") {
  for (const Matroid& m : SmallErectionFixtures(10, 5)) {
    const ErectionResult free = FreeErection(m);
    for (ElementSet c : m.nonspanning_circuits()) CHECK(free.matroid.IsCircuit(c));
  }
}

TEST_CASE("erection relation") {
  CHECK(IsErectionOf(Matroid::Uniform(3, 2), Matroid::Uniform(3, 1)));
  const HostGraph k4 = HostGraph::Complete(4);
  CHECK(!IsErectionOf(InducedMatroid(CountFunction::F(2, 3), k4), Graphic(4)));
  CHECK(IsErectionOf(Graphic(4), Graphic(4)));
  CHECK(!IsErectionOf(Matroid::Uniform(4, 3), Matroid::Uniform(4, 1)));
  CHECK_THROWS_AS(IsErectionOf(Matroid::Uniform(3, 1), Matroid::Uniform(4, 1)), Error);
  CHECK_THROWS_AS(EnumerateErections(Matroid::Uniform(10, 2)), Error);
  CHECK_THROWS_AS(EnumerateErections(Matroid::Uniform(9, 2), 1 << 10), Error);
}

TEST_CASE("free elevation") {
  const ElevationChain chain = FreeElevation(Matroid::Uniform(3, 1));
  REQUIRE(chain.stages.size() == 3);
  CHECK(chain.complete);
  CHECK(Equal(chain.stages.back(), Matroid::Free(3)));

  const ElevationChain capped = FreeElevation(Matroid::Uniform(6, 1), 2);
  CHECK(!capped.complete);
  CHECK(capped.stages.size() == 3);
  CHECK(capped.stages.back().rank() == 3);

  const HostGraph k7 = HostGraph::Complete(7);
  const Matroid u = BuildUniformMatroid(EnumerateCopies(Pattern::CompleteBipartite(2, 3), k7), 21);
  const ElevationChain k23 = FreeElevation(u);
  CHECK(k23.stages.size() == 1);
  CHECK(k23.stages[0].rank() == 6);

  for (const Matroid& m : SmallErectionFixtures(8, 17)) {
    const ElevationChain c = FreeElevation(m);
    for (size_t i = 1; i < c.stages.size(); ++i) {
      CHECK(c.stages[i].rank() == c.stages[i - 1].rank() + 1);
      CHECK(IsErectionOf(c.stages[i], c.stages[i - 1]));
    }
    if (c.stages.back().ground_size() <= 9) {
      CHECK(EnumerateErections(c.stages.back(), int64_t{1} << 20).size() == 1);
    }
  }
}

}  // namespace
}  // namespace xmatroid
