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

#include <random>

#include "doctest.h"
#include "oracles.h"
#include "xmatroid/count_matroid.h"
#include "xmatroid/errors.h"

namespace xmatroid {
namespace {

// Minimum of val(F, S) over every ordered proper sequence, by plain DFS.
int BruteVal(const CopyFamily& family, ElementSet target) {
  int best = target.size();
  std::function<void(ElementSet, int)> go = [&](ElementSet u, int k) {
    best = std::min(best, (target | u).size() - k);
    for (ElementSet x : family.members) {
      if (!x.IsSubsetOf(u)) go(u | x, k + 1);
    }
  };
  go(ElementSet(), 0);
  return best;
}

CopyFamily Triangles(int n) {
  return EnumerateCopies(Pattern::Complete(3), HostGraph::Complete(n));
}

std::vector<ElementSet> AllKSubsets(int n, int k) {
  std::vector<ElementSet> out;
  ForEachKSubset(n, k, [&](ElementSet s) {
    out.push_back(s);
    return true;
  });
  return out;
}

CopyFamily RandomFamily(std::mt19937_64& rng, int n, int members, int max_size) {
  std::vector<ElementSet> sets;
  for (int i = 0; i < members; ++i) {
    const int size = 2 + static_cast<int>(rng() % (max_size - 1));
    ElementSet s;
    while (s.size() < size) s = s.With(static_cast<int>(rng() % n));
    sets.push_back(s);
  }
  return CopyFamily::FromSets(sets);
}

TEST_CASE("val of explicit sequences") {
  const HostGraph k3 = HostGraph::Complete(3);
  CHECK(EvalVal(k3.AllEdges(), {k3.AllEdges()}) == 2);
  CHECK(EvalVal(ElementSet({0, 4, 7}), {}) == 3);

  const HostGraph k4 = HostGraph::Complete(4);
  const CopyFamily t = Triangles(4);
  REQUIRE(t.size() == 4);
  CHECK(EvalVal(t, k4.AllEdges(), {0, 1, 2}) == 3);
  CHECK(FirstImproperIndex({t.members[0], t.members[1], t.members[2], t.members[3]}) == 3);
  try {
    EvalVal(t, k4.AllEdges(), {0, 1, 2, 3});
    FAIL("expected an improper sequence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kImproperSequence);
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
  CHECK(FirstImproperIndex({ElementSet({0, 1}), ElementSet({0, 1})}) == 1);
}

TEST_CASE("certificates") {
  Certificate c;
  c.target = ElementSet({0, 1, 2, 3, 4, 5});
  c.sets = {ElementSet({0, 1, 3}), ElementSet({0, 2, 4})};
  c.value = 4;
  CHECK(VerifyCertificate(c));
  c.value = 3;
  CHECK(!VerifyCertificate(c));
  c.value = 5;
  c.sets.push_back(ElementSet({0, 1}));
  CHECK(!VerifyCertificate(c));

  const std::string h = FamilyHash(Triangles(4));
  CHECK(h.size() == 16);
  CHECK(h == FamilyHash(Triangles(4)));
  CHECK(h != FamilyHash(Triangles(5)));
}

TEST_CASE("val on small families") {
  const HostGraph k4 = HostGraph::Complete(4);
  const HostGraph k5 = HostGraph::Complete(5);
  CHECK(ComputeVal(Triangles(5), k5.AllEdges()).value == 4);
  CHECK(ComputeVal(EnumerateCopies(Pattern::Complete(4), k4), k4.AllEdges()).value == 5);
  CHECK(ComputeVal(EnumerateCopies(Pattern::Cycle(4), k4), k4.AllEdges()).value == 4);
  CHECK(ComputeVal(CopyFamily(), ElementSet({1, 2, 3})).value == 3);

  const ValResult r = ComputeVal(Triangles(5), k5.AllEdges());
  CHECK(r.exact);
  CHECK(r.witness.value == 4);
  CHECK(r.witness.target == k5.AllEdges());
  CHECK(VerifyCertificate(r.witness));
  CHECK(r.stats.states > 0);
}

TEST_CASE("val agrees with exhaustive sequence search") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 4);
    const CopyFamily x = RandomFamily(rng, n, 1 + static_cast<int>(rng() % 5), 4);
    const ValTable table = ValTable::Build(x, n);
    for (uint64_t f = 0; f < (uint64_t{1} << n); ++f) {
      const int brute = BruteVal(x, ElementSet(f));
      const ValResult r = ComputeVal(x, ElementSet(f));
      REQUIRE(r.value == brute);
      REQUIRE(VerifyCertificate(r.witness));
      REQUIRE(table.Val(ElementSet(f)) == brute);
      const Certificate w = table.Witness(ElementSet(f));
      REQUIRE(w.value == brute);
      REQUIRE(VerifyCertificate(w));
    }
  }
}

TEST_CASE("val table matches the graphic rank on K5") {
  const HostGraph k5 = HostGraph::Complete(5);
  const ValTable table = ValTable::Build(Triangles(5), 10);
  for (uint64_t f = 0; f < 1024; ++f) {
    REQUIRE(table.Val(ElementSet(f)) == testing::BruteRank(
                                            [&](ElementSet s) { return testing::IsForest(k5, s); },
                                            ElementSet(f)));
  }
}

TEST_CASE("lower bound cutoff keeps the value") {
  const HostGraph k6 = HostGraph::Complete(6);
  const CopyFamily x = EnumerateCopies(Pattern::Complete(4), k6);
  ValOptions opts;
  opts.lower_bound = InducedMatroid(CountFunction::F(2, 3), k6);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const ElementSet f(rng() & k6.AllEdges().bits());
    const ValResult fast = ComputeVal(x, f, opts);
    CHECK(fast.value == ComputeVal(x, f).value);
    CHECK(fast.value == opts.lower_bound->Rank(f));
  }
}

TEST_CASE("state budget yields an upper bound") {
  const HostGraph k6 = HostGraph::Complete(6);
  ValOptions opts;
  opts.max_states = 10;
  const ValResult r = ComputeVal(Triangles(6), k6.AllEdges(), opts);
  CHECK(!r.exact);
  CHECK(r.value >= 5);
  CHECK(VerifyCertificate(r.witness));
}

TEST_CASE("certificates bound the rank in every X-matroid") {
  const HostGraph k6 = HostGraph::Complete(6);
  struct Case {
    CopyFamily family;
    std::vector<Matroid> matroids;
  };
  const std::vector<Case> cases = {
      {Triangles(6), {InducedMatroid(CountFunction::F(1, 1), k6)}},
      {EnumerateCopies(Pattern::Complete(4), k6),
       {InducedMatroid(CountFunction::F(2, 3), k6), InducedMatroid(CountFunction::F(1, 1), k6)}},
      {EnumerateCopies(Pattern::Cycle(4), k6),
       {InducedMatroid(CountFunction::G(1, 1, 0), k6),
        InducedMatroid(CountFunction::F(1, 1), k6)}},
  };
  std::mt19937_64 rng(17);
  for (const Case& c : cases) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<ElementSet> seq;
      ElementSet u;
      const int len = static_cast<int>(rng() % 6);
      for (int i = 0; i < len; ++i) {
        const ElementSet x = c.family.members[rng() % c.family.size()];
        if (x.IsSubsetOf(u)) continue;
        seq.push_back(x);
        u |= x;
      }
      const ElementSet f(rng() & k6.AllEdges().bits());
      const int value = EvalVal(f, seq);
      for (const Matroid& m : c.matroids) REQUIRE(m.Rank(f) <= value);
    }
  }
}

TEST_CASE("equality consequences of tight certificates") {
  const HostGraph k5 = HostGraph::Complete(5);
  const Matroid graphic = InducedMatroid(CountFunction::F(1, 1), k5);
  const CopyFamily t = Triangles(5);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const ElementSet f(rng() & k5.AllEdges().bits());
    const ValResult r = ComputeVal(t, f);
    REQUIRE(r.value == graphic.Rank(f));
    REQUIRE(CheckEqualityConsequences(graphic, f, r.witness.sets));
  }
}

TEST_CASE("val is monotone in the family") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const CopyFamily big = RandomFamily(rng, 7, 6, 4);
    std::vector<ElementSet> part(big.members.begin(), big.members.begin() + big.size() / 2);
    const CopyFamily small = CopyFamily::FromSets(part);
    for (uint64_t f = 0; f < 128; f += 3) {
      REQUIRE(ComputeVal(big, ElementSet(f)).value <= ComputeVal(small, ElementSet(f)).value);
      REQUIRE(ComputeVal(big, ElementSet(f)).value <= ElementSet(f).size());
    }
  }
}

TEST_CASE("weak saturation checks") {
  const HostGraph k4 = HostGraph::Complete(4);
  const CopyFamily t = Triangles(4);
  WeakSatSequence seq;
  seq.base = ElementSet({k4.EdgeId(0, 1), k4.EdgeId(0, 2), k4.EdgeId(0, 3)});
  for (auto tri : {std::vector<int>{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}) {
    ElementSet s;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) s = s.With(k4.EdgeId(tri[i], tri[j]));
    }
    const auto it = std::find(t.members.begin(), t.members.end(), s);
    REQUIRE(it != t.members.end());
    seq.steps.push_back(static_cast<int>(it - t.members.begin()));
  }
  WeakSatCheck check = CheckWeaklySaturated(t, seq);
  CHECK(check.valid);
  CHECK(check.constructed == k4.AllEdges());

  CHECK(CheckWeaklySaturated(t, {seq.base, {}}).constructed == seq.base);
  CHECK(CheckWeaklySaturated(t, {seq.base, {}}).valid);

  WeakSatSequence bad{ElementSet::Singleton(k4.EdgeId(0, 1)), {0}};
  check = CheckWeaklySaturated(t, bad);
  CHECK(!check.valid);
  CHECK(check.bad_step == 0);
}

TEST_CASE("weak saturation search") {
  const HostGraph k5 = HostGraph::Complete(5);
  const CopyFamily kminus = EnumerateCopies(Pattern::CompleteMinusEdge(4), k5);
  const ElementSet start({k5.EdgeId(0, 1), k5.EdgeId(0, 2), k5.EdgeId(1, 2), k5.EdgeId(0, 3),
                          k5.EdgeId(0, 4)});
  REQUIRE(InducedRank(CountFunction::F(1, 0), k5, start) == 5);
  const auto found = SearchWeakSat(kminus, start, k5.AllEdges());
  REQUIRE(found.has_value());
  CHECK(CheckWeaklySaturated(kminus, *found).valid);
  CHECK(CheckWeaklySaturated(kminus, *found).constructed == k5.AllEdges());

  const auto same = SearchWeakSat(kminus, k5.AllEdges(), k5.AllEdges());
  REQUIRE(same.has_value());
  CHECK(same->steps.empty());

  const HostGraph k4 = HostGraph::Complete(4);
  CHECK(!SearchWeakSat(Triangles(4), ElementSet::Singleton(0), k4.AllEdges()).has_value());
  CHECK_THROWS_AS(SearchWeakSat(Triangles(4), ElementSet::Singleton(0), ElementSet({1, 2})),
                  Error);
}

int Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

void CheckConstruction(WeakSatKind kind, int p, int q, int r, int expected_start) {
  INFO("kind ", static_cast<int>(kind), " p=", p, " q=", q, " r=", r);
  const WeakSatConstruction c = ConstructWeakSat(kind, p, q, r);
  const WeakSatCheck check = CheckWeaklySaturated(c.family, c.sequence);
  REQUIRE(check.valid);
  REQUIRE(check.constructed == c.target);
  CHECK(c.sequence.base.size() == expected_start);
  if (c.base_is_member) {
    REQUIRE(c.family.Contains(c.sequence.base));
  } else {
    CHECK(EvalVal(c.family, c.target, c.sequence.steps) == expected_start);
  }
}

TEST_CASE("proof constructions are weakly saturated") {
  for (int n = 5; n <= 7; ++n) CheckConstruction(WeakSatKind::kMatching, 2, n, 0, 2);
  CheckConstruction(WeakSatKind::kMatching, 3, 7, 0, 3);
  for (int k = 1; k <= 4; ++k) CheckConstruction(WeakSatKind::kPath, k, 6, 0, k);
  for (int d = 1; d <= 3; ++d) {
    for (int m = d + 2; m <= 7; ++m) {
      CheckConstruction(WeakSatKind::kClique, d, m, 0, Binomial(d, 2) + d * (m - d));
    }
  }
  for (int m = 4; m <= 7; ++m) CheckConstruction(WeakSatKind::kC4Complete, m, 0, 0, m);
  for (int s = 2; s <= 4; ++s) {
    for (int t = 2; t <= 4; ++t) CheckConstruction(WeakSatKind::kC4Bipartite, s, t, 0, s + t - 1);
  }
  for (int m = 5; m <= 7; ++m) CheckConstruction(WeakSatKind::kK5MinusComplete, m, 0, 0, 2 * m - 2);
  CheckConstruction(WeakSatKind::kK34Bipartite, 3, 4, 0, 2 * 7 - 3);
  CheckConstruction(WeakSatKind::kK34Bipartite, 4, 4, 0, 2 * 8 - 3);
  CheckConstruction(WeakSatKind::kK34Bipartite, 3, 5, 0, 2 * 8 - 3);
  for (int s = 2; s <= 4; ++s) {
    for (int t = 3; t <= 5; ++t) CheckConstruction(WeakSatKind::kK23Bipartite, s, t, 0, s + t);
  }
  for (int k = 1; k <= 3; ++k) {
    for (int m = k + 1; m <= k + 2; ++m) {
      for (int n = 2; n <= 4; ++n) {
        CheckConstruction(WeakSatKind::kRootedK2, m, n, k, m + k * n - k);
      }
    }
  }
  CHECK(ConstructWeakSat(WeakSatKind::kRootedK2, 3, 3, 2).sequence.base.size() == 7);
  CHECK_THROWS_AS(ConstructWeakSat(WeakSatKind::kMatching, 2, 4), Error);
  CHECK_THROWS_AS(ConstructWeakSat(WeakSatKind::kC4Complete, 3), Error);
}

// Local submodularity by direct evaluation of BruteVal.
bool BruteSubmodular(const CopyFamily& x, int n) {
  std::vector<int> val(size_t{1} << n);
  for (uint64_t f = 0; f < val.size(); ++f) val[f] = BruteVal(x, ElementSet(f));
  for (uint64_t f = 0; f < val.size(); ++f) {
    for (int e = 0; e < n; ++e) {
      for (int g = e + 1; g < n; ++g) {
        if ((f >> e & 1) || (f >> g & 1)) continue;
        const uint64_t fe = f | (uint64_t{1} << e), fg = f | (uint64_t{1} << g);
        if (val[fe] + val[fg] < val[fe | fg] + val[f]) return false;
      }
    }
  }
  return true;
}

TEST_CASE("submodularity scan") {
  CHECK(ValSubmodularityScan(Triangles(5), 10, true).violations.empty());
  CHECK(ValSubmodularityScan(EnumerateCopies(Pattern::Complete(4), HostGraph::Complete(5)), 10,
                             true)
            .violations.empty());
  for (int n = 3; n <= 8; ++n) {
    const SubmodularityReport rep =
        ValSubmodularityScan(CopyFamily::FromSets({ElementSet({0, 1, 2})}), n, true);
    CHECK(rep.violations.empty());
    CHECK(rep.exhaustive);
  }
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 3);
    const CopyFamily x = RandomFamily(rng, n, 2 + static_cast<int>(rng() % 4), 4);
    const SubmodularityReport rep = ValSubmodularityScan(x, n, true);
    REQUIRE(rep.violations.empty() == BruteSubmodular(x, n));
    for (const SubmodularityViolation& v : rep.violations) {
      REQUIRE(v.val_e + v.val_f < v.val_ef + v.val_base);
      REQUIRE(v.val_ef == BruteVal(x, v.base.With(v.e).With(v.f)));
    }
  }
  const CopyFamily twisted = CopyFamily::FromSets(
      {ElementSet({0, 3, 4}), ElementSet({0, 2, 5}), ElementSet({0, 1, 3, 4}),
       ElementSet({0, 1, 2, 5})});
  CHECK(!BruteSubmodular(twisted, 6));
  const SubmodularityReport bad = ValSubmodularityScan(twisted, 6, true);
  REQUIRE(!bad.violations.empty());
  CHECK(BruteVal(twisted, ElementSet({0, 1, 2, 3})) == 3);
  CHECK(BruteVal(twisted, ElementSet({0, 1, 2})) == 2);
  CHECK(BruteVal(twisted, ElementSet({0, 1, 3})) == 2);
  CHECK(BruteVal(twisted, ElementSet({0, 1})) == 2);
  CHECK_THROWS_AS(BuildValMatroid(twisted, 6), Error);
  const SubmodularityReport sampled = ValSubmodularityScan(Triangles(6), 15, false, 500, 4);
  CHECK(!sampled.exhaustive);
  CHECK(sampled.checked == 500);
  CHECK(sampled.violations.empty());
  CHECK_THROWS_AS(ValSubmodularityScan(Triangles(6), 15, true), Error);
}

TEST_CASE("matroid from val") {
  const HostGraph k4 = HostGraph::Complete(4);
  const ValMatroid tri = BuildValMatroid(Triangles(4), 6);
  CHECK(Equal(tri.matroid, InducedMatroid(CountFunction::F(1, 1), k4)));
  CHECK(tri.members_are_circuits);

  const ValMatroid uni = BuildValMatroid(CopyFamily::FromSets(AllKSubsets(6, 3)), 6);
  CHECK(Equal(uni.matroid, Matroid::Uniform(6, 2)));

  const ValMatroid even = BuildValMatroid(EnumerateCopies(Pattern::Cycle(4), k4), 6);
  CHECK(Equal(even.matroid, InducedMatroid(CountFunction::G(1, 1, 0), k4)));
  for (uint64_t f = 0; f < 64; ++f) {
    CHECK(even.matroid.Rank(ElementSet(f)) ==
          testing::BruteRank([&](ElementSet s) { return testing::EvenCycleIndependent(k4, s); },
                             ElementSet(f)));
  }
}

TEST_CASE("matroid from val rejects non-submodular families") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 3);
    const CopyFamily x = RandomFamily(rng, n, 2 + static_cast<int>(rng() % 4), 4);
    if (BruteSubmodular(x, n)) {
      const ValMatroid vm = BuildValMatroid(x, n);
      for (ElementSet m : x.members) REQUIRE(IsCyclic(vm.matroid, m));
    } else {
      try {
        BuildValMatroid(x, n);
        FAIL("expected kNotSubmodular");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::kNotSubmodular);
      }
    }
  }
}

TEST_CASE("connected flat certification") {
  const HostGraph k5 = HostGraph::Complete(5);
  const FlatCertification g = CertifyConnectedFlats(InducedMatroid(CountFunction::F(1, 1), k5),
                                                    Triangles(5));
  CHECK(g.ok);
  CHECK(g.exact);
  for (const Certificate& c : g.certificates) CHECK(VerifyCertificate(c));
  // Cliques on 3, 4 and 5 vertices plus the single edges.
  CHECK(g.certificates.size() == 10 + 10 + 5 + 1);

  const HostGraph k34 = HostGraph::Bipartite(3, 4);
  const FlatCertification b = CertifyConnectedFlats(
      InducedMatroid(CountFunction::F(1, 0), k34),
      EnumerateCopies(Pattern::CompleteBipartite(2, 3), k34));
  CHECK(b.ok);

  const FlatCertification e = CertifyConnectedFlats(
      InducedMatroid(CountFunction::G(1, 1, 0), k5), EnumerateCopies(Pattern::Cycle(4), k5));
  CHECK(e.ok);

  const HostGraph k4 = HostGraph::Complete(4);
  const FlatCertification fail = CertifyConnectedFlats(
      InducedMatroid(CountFunction::F(1, 1), k4), EnumerateCopies(Pattern::Complete(4), k4));
  CHECK(!fail.ok);
  REQUIRE(fail.failed_flat.has_value());
  // The first triangle: no K4 copy lowers its val below its size.
  CHECK(fail.failed_flat->size() == 3);
  CHECK(fail.failed_value == 3);
  CHECK(fail.failed_rank == 2);
}

}  // namespace
}  // namespace xmatroid
