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

#include "xmatroid/registry.h"

#include <fnmatch.h>

#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <regex>
#include <set>
#include <thread>

#include "xmatroid/checks.h"
#include "xmatroid/count_matroid.h"
#include "xmatroid/erection.h"
#include "xmatroid/errors.h"
#include "xmatroid/fixtures.h"
#include "xmatroid/graph.h"
#include "xmatroid/parse.h"
#include "xmatroid/sequence.h"

namespace xmatroid {

namespace {

Outcome PassIf(bool ok) { return ok ? Outcome::kPass : Outcome::kFail; }

Matroid Induced(const CountFunction& f, const HostGraph& host) { return InducedMatroid(f, host); }

Json Labels(ElementSet s, const HostGraph& host) { return TargetLabels(s, host); }

// val_X against the rank of a count matroid on every subset of the host.
void ValEqualsRank(const std::string& family_text, const std::string& host_text,
                   const CountFunction& f, const RunContext& ctx, RunResult& r) {
  const HostGraph host = ParseHost(host_text);
  const CopyFamily family = ParseFamily(family_text, host);
  const ValTable table = ValTable::Build(family, host.num_edges(), ctx.budget_states);
  int64_t subsets = 0, mismatches = 0;
  std::optional<ElementSet> first;
  ForEachSubset(host.AllEdges(), [&](ElementSet s) {
    ++subsets;
    if (table.Val(s) == InducedRank(f, host, s)) return;
    if (!first) first = s;
    ++mismatches;
  });
  // Connected flats once more through certificates, as the sufficiency test.
  const FlatCertification flats = CertifyConnectedFlats(Induced(f, host), family, ctx.budget_states);
  const Certificate full = table.Witness(host.AllEdges());
  r.artifacts["family"] = family_text;
  r.artifacts["host"] = host_text;
  r.artifacts["matroid"] = f.Name();
  r.artifacts["copies"] = family.size();
  r.artifacts["subsets"] = subsets;
  r.artifacts["mismatches"] = mismatches;
  r.artifacts["first_mismatch"] = first ? Labels(*first, host) : Json();
  r.artifacts["connected_flats_certified"] = flats.ok;
  r.artifacts["connected_flats"] = flats.certificates.size();
  r.artifacts["certificate"] = CertificateToJson(full, host_text, family_text, family);
  r.outcome = PassIf(mismatches == 0 && flats.ok && VerifyCertificate(full));
  r.summary = "val = rank(" + f.Name() + ") on " + std::to_string(subsets - mismatches) + "/" +
              std::to_string(subsets) + " subsets; val(E) = " + std::to_string(full.value);
}

void CertificateFuzz(const RunContext& ctx, RunResult& r) {
  struct Fixture {
    std::string family;
    std::string host;
    CountFunction f;
  };
  const std::vector<Fixture> fixtures = {
      {"K3", "complete:5", CountFunction::F(1, 1)},   {"K4", "complete:5", CountFunction::F(2, 3)},
      {"K4-", "complete:5", CountFunction::F(1, 0)},  {"C4", "complete:5", CountFunction::G(1, 1, 0)},
      {"K2,3", "bipartite:3,4", CountFunction::F(1, 0)}, {"K5-", "complete:6", CountFunction::F(2, 2)},
  };
  struct Prepared {
    HostGraph host;
    CopyFamily family;
    Matroid m;
  };
  std::vector<Prepared> prepared;
  for (const auto& fx : fixtures) {
    const HostGraph host = ParseHost(fx.host);
    prepared.push_back({host, ParseFamily(fx.family, host), Induced(fx.f, host)});
  }
  std::mt19937_64 gen(ctx.seed);
  int64_t pairs = 0, equalities = 0, violations = 0;
  Json first_violation;
  for (int i = 0; i < 10000; ++i) {
    const Prepared& p = prepared[i % prepared.size()];
    const ElementSet f(gen() & p.host.AllEdges().bits());
    const int length = static_cast<int>(gen() % 5);
    std::vector<ElementSet> seq;
    ElementSet covered;
    for (int tries = 0; static_cast<int>(seq.size()) < length && tries < 20; ++tries) {
      const ElementSet x = p.family.members[gen() % p.family.size()];
      if (x.IsSubsetOf(covered)) continue;
      seq.push_back(x);
      covered |= x;
    }
    ++pairs;
    const int value = EvalVal(f, seq);
    const int rank = p.m.Rank(f);
    bool ok = rank <= value;
    if (ok && rank == value) {
      ++equalities;
      ok = CheckEqualityConsequences(p.m, f, seq);
    }
    if (!ok) {
      if (violations == 0) {
        first_violation = {{"fixture", fixtures[i % fixtures.size()].family},
                           {"target", ToJson(f)},
                           {"rank", rank},
                           {"value", value}};
      }
      ++violations;
    }
  }
  r.artifacts["pairs"] = pairs;
  r.artifacts["equalities"] = equalities;
  r.artifacts["violations"] = violations;
  r.artifacts["first_violation"] = first_violation;
  r.outcome = PassIf(violations == 0);
  r.summary = std::to_string(pairs) + " pairs, " + std::to_string(equalities) +
              " equalities, " + std::to_string(violations) + " violations";
}

// With uniform_rank set, the val matroid must be U_r; otherwise U_X.
void UniformVal(const std::string& family_text, const std::string& host_text, int expected,
                std::optional<int> uniform_rank, const RunContext& ctx, RunResult& r) {
  const HostGraph host = ParseHost(host_text);
  const CopyFamily family = ParseFamily(family_text, host);
  const int n = host.num_edges();
  const ValResult val = ComputeVal(family, host.AllEdges(), {std::nullopt, ctx.budget_states});
  const ValMatroid vm = BuildValMatroid(family, n);
  const Matroid reference =
      uniform_rank ? Matroid::Uniform(n, *uniform_rank) : BuildUniformMatroid(family, n);
  const std::string name = uniform_rank ? "U_" + std::to_string(*uniform_rank) : "U_X";
  const bool equal = Equal(vm.matroid, reference);
  r.artifacts["family"] = family_text;
  r.artifacts["host"] = host_text;
  r.artifacts["val"] = val.value;
  r.artifacts["exact"] = val.exact;
  r.artifacts["val_matroid_rank"] = vm.matroid.rank();
  r.artifacts["reference"] = name;
  r.artifacts["equals_reference"] = equal;
  r.artifacts["certificate"] = CertificateToJson(val.witness, host_text, family_text, family);
  r.outcome = PassIf(val.exact && val.value == expected && equal);
  r.summary = "val(E) = " + std::to_string(val.value) + ", val matroid " + (equal ? "=" : "!=") +
              " " + name;
}

void ErectionOracle(const RunContext& ctx, RunResult& r) {
  std::vector<std::pair<std::string, Matroid>> fixtures;
  fixtures.emplace_back("U_1(3)", Matroid::Uniform(3, 1));
  {
    const HostGraph k4 = HostGraph::Complete(4);
    fixtures.emplace_back("graphic K4", Induced(CountFunction::F(1, 1), k4));
    for (const char* x : {"C4", "2K2", "S3"}) {
      fixtures.emplace_back(std::string("U_") + x + "(K4)", BuildUniformMatroid(ParseFamily(x, k4), 6));
    }
    const HostGraph k23 = HostGraph::Bipartite(2, 3);
    fixtures.emplace_back("U_C4(K2,3)", BuildUniformMatroid(ParseFamily("C4", k23), 6));
  }
  const auto random = SmallErectionFixtures(20, ctx.seed);
  for (size_t i = 0; i < random.size(); ++i) {
    fixtures.emplace_back("random " + std::to_string(i), random[i]);
  }
  Json rows = Json::array();
  int agree = 0, nontrivial = 0, truncate_ok = 0;
  for (const auto& [name, m] : fixtures) {
    const ErectionResult free = FreeErection(m);
    const auto all = EnumerateErections(m);
    const auto top = WeakOrderMaximum(all);
    const bool same = top && Equal(*top, free.matroid);
    bool back = true;
    if (!free.trivial) {
      ++nontrivial;
      back = Equal(Truncate(free.matroid), m);
      truncate_ok += back;
    }
    agree += same;
    rows.push_back({{"fixture", name},
                    {"ground_size", m.ground_size()},
                    {"rank", m.rank()},
                    {"erections", all.size()},
                    {"free_rank", free.matroid.rank()},
                    {"trivial", free.trivial},
                    {"agrees", same},
                    {"truncates_back", back}});
  }
  r.artifacts["fixtures"] = rows;
  const int total = static_cast<int>(fixtures.size());
  r.outcome = PassIf(agree == total && truncate_ok == nontrivial);
  r.summary = std::to_string(agree) + "/" + std::to_string(total) +
              " fixtures agree with the enumerated maximum; " + std::to_string(nontrivial) +
              " nontrivial, all truncating back: " + (truncate_ok == nontrivial ? "yes" : "no");
}

void NonuniqueK23(const RunContext&, RunResult& r) {
  const HostGraph k7 = HostGraph::Complete(7);
  const CopyFamily x = ParseFamily("K2,3", k7);
  const Matroid ux = BuildUniformMatroid(x, k7.num_edges());
  const ErectionResult free = FreeErection(ux);
  const Matroid f10 = Induced(CountFunction::F(1, 0), k7);
  const CompareResult cmp = WeakOrderCompare(ux, f10);
  const bool w1 = cmp.independent_in_first && ux.IsIndependent(*cmp.independent_in_first) &&
                  !f10.IsIndependent(*cmp.independent_in_first);
  const bool w2 = cmp.independent_in_second && f10.IsIndependent(*cmp.independent_in_second) &&
                  !ux.IsIndependent(*cmp.independent_in_second);
  r.artifacts["ux_rank"] = ux.rank();
  r.artifacts["free_erection_trivial"] = free.trivial;
  r.artifacts["free_erection_rank"] = free.matroid.rank();
  r.artifacts["f10_rank"] = f10.rank();
  r.artifacts["comparison"] = CompareToJson(cmp);
  r.artifacts["witness_uniform"] =
      cmp.independent_in_first ? Labels(*cmp.independent_in_first, k7) : Json();
  r.artifacts["witness_count"] =
      cmp.independent_in_second ? Labels(*cmp.independent_in_second, k7) : Json();
  r.artifacts["witnesses_replay"] = w1 && w2;
  r.outcome = PassIf(free.trivial && ux.rank() == 6 && free.matroid.rank() == 6 &&
                     cmp.relation == Relation::kIncomparable && w1 && w2);
  r.summary = std::string("free erection ") + (free.trivial ? "trivial" : "nontrivial") +
              ", rank " + std::to_string(free.matroid.rank()) + ", versus f(1,0): " +
              RelationName(cmp.relation);
}

void NonuniqueC5(const RunContext&, RunResult& r) {
  const HostGraph k8 = HostGraph::Complete(8);
  const CopyFamily x = ParseFamily("C5", k8);
  const Matroid ux = BuildUniformMatroid(x, k8.num_edges());
  const ElevationChain chain = FreeElevation(ux, 6);
  const Matroid graphic = Induced(CountFunction::F(1, 1), k8);
  const CheckReport gx = IsXMatroid(graphic, x);
  const int final_rank = chain.stages.back().rank();
  Json ranks = Json::array();
  for (const Matroid& m : chain.stages) ranks.push_back(m.rank());
  r.artifacts["stage_ranks"] = ranks;
  r.artifacts["complete"] = chain.complete;
  r.artifacts["final_rank"] = final_rank;
  r.artifacts["graphic_rank"] = graphic.rank();
  r.artifacts["graphic_is_x_matroid"] = gx.passed();
  r.outcome = PassIf(chain.complete && final_rank <= 6 && final_rank < graphic.rank() && gx.passed());
  r.summary = "free elevation stops at rank " + std::to_string(final_rank) +
              " < graphic rank " + std::to_string(graphic.rank()) +
              "; graphic K8 is a C5-matroid: " + (gx.passed() ? "yes" : "no");
}

void NonuniqueK4K23(const RunContext&, RunResult& r) {
  const HostGraph k8 = HostGraph::Complete(8);
  const Matroid g = Induced(CountFunction::G(1, 1, -1), k8);
  const CopyFamily x = ParseFamily("K4+K2,3", k8);
  const CheckReport gx = IsXMatroid(g, x);
  ElementSet two_c4;
  for (int base : {0, 4}) {
    for (int i = 0; i < 4; ++i) two_c4 = two_c4.With(k8.EdgeId(base + i, base + (i + 1) % 4));
  }
  const bool circuit = g.IsCircuit(two_c4);
  r.artifacts["rank"] = g.rank();
  r.artifacts["is_x_matroid"] = gx.passed();
  r.artifacts["copies"] = x.size();
  r.artifacts["two_c4"] = Labels(two_c4, k8);
  r.artifacts["two_c4_is_circuit"] = circuit;
  r.outcome = PassIf(gx.passed() && g.rank() == 9 && circuit);
  r.summary = "g(1,1,-1) on K8: rank " + std::to_string(g.rank()) + ", {K4,K2,3}-matroid: " +
              (gx.passed() ? "yes" : "no") + ", two disjoint C4 form a circuit: " +
              (circuit ? "yes" : "no");
}

int Choose2(int x) { return x * (x - 1) / 2; }

void LinearRanks(const std::vector<std::pair<LinearSpec, int>>& cases, const RunContext& ctx,
                 RunResult& r) {
  Json rows = Json::array();
  bool ok = true;
  for (const auto& [spec, expected] : cases) {
    const int rank = GenericRank(spec, spec.Host().AllEdges(), ctx.generic());
    ok = ok && rank == expected;
    rows.push_back({{"spec", spec.Name()}, {"rank", rank}, {"expected", expected}});
  }
  r.artifacts["ranks"] = rows;
  r.artifacts["trials"] = ctx.trials;
  r.outcome = PassIf(ok);
  r.summary = std::to_string(cases.size()) + " generic ranks " + (ok ? "match" : "differ");
}

void LinearRigidity(const RunContext& ctx, RunResult& r) {
  const auto spec = LinearSpec::Rigidity(5, 2);
  const HostGraph host = spec.Host();
  const Matroid m = LinearMatroid(spec, ctx.generic());
  int64_t subsets = 0, mismatches = 0;
  ForEachSubset(host.AllEdges(), [&](ElementSet s) {
    ++subsets;
    mismatches += m.Rank(s) != PebbleGameRank(2, 3, host, s);
  });
  r.artifacts["subsets"] = subsets;
  r.artifacts["mismatches"] = mismatches;
  r.outcome = PassIf(mismatches == 0);
  r.summary = "planar rigidity = (2,3) pebble rank on " + std::to_string(subsets - mismatches) +
              "/" + std::to_string(subsets) + " subsets of E(K5)";
}

void LinearCircuits(const RunContext& ctx, RunResult& r) {
  struct Case {
    LinearSpec spec;
    std::string family;
  };
  const std::vector<Case> cases = {
      {LinearSpec::Hyperconnectivity(6, 2), "K4"},
      {LinearSpec::Hyperconnectivity(6, 2), "K3,3"},
      {LinearSpec::SymmetricCompletion(6, 2), "K3,3"},
      {LinearSpec::Birigidity(3, 3, 2, 1), "rooted:K3,2"},
      {LinearSpec::Birigidity(3, 3, 2, 2), "K3,3"},
  };
  Json rows = Json::array();
  bool ok = true;
  for (const auto& c : cases) {
    const CopyFamily x = ParseFamily(c.family, c.spec.Host());
    int circuits = 0;
    for (ElementSet s : x.members) circuits += LinearCircuitCheck(c.spec, s, ctx.generic());
    ok = ok && circuits == x.size();
    rows.push_back({{"spec", c.spec.Name()}, {"family", c.family}, {"copies", x.size()},
                    {"circuits", circuits}});
  }
  r.artifacts["cases"] = rows;
  r.outcome = PassIf(ok);
  r.summary = std::string("every listed copy is a circuit: ") + (ok ? "yes" : "no");
}

void PictureLifting(const RunContext& ctx, RunResult& r) {
  Json rows = Json::array();
  bool ok = true;
  for (int k = 1; k <= 2; ++k) {
    for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 3}}) {
      const auto spec = LinearSpec::Birigidity(m, n, k, 1);
      const HostGraph host = spec.Host();
      const Matroid lin = LinearMatroid(spec, ctx.generic());
      const CountFunction h = CountFunction::PictureLifting(k);
      int64_t subsets = 0, mismatches = 0;
      ForEachSubset(host.AllEdges(), [&](ElementSet s) {
        ++subsets;
        mismatches += lin.Rank(s) != InducedRank(h, host, s);
      });
      ok = ok && mismatches == 0;
      rows.push_back({{"spec", spec.Name()}, {"subsets", subsets}, {"mismatches", mismatches}});
    }
  }
  r.artifacts["rank_equalities"] = rows;
  Json flats = Json::array();
  const HostGraph k33 = HostGraph::Bipartite(3, 3);
  for (int k = 1; k <= 2; ++k) {
    const CopyFamily x = RootedCopies(k + 1, 2, k33);
    const FlatCertification cert =
        CertifyConnectedFlats(Induced(CountFunction::PictureLifting(k), k33), x, ctx.budget_states);
    ok = ok && cert.ok;
    flats.push_back({{"k", k}, {"certified", cert.ok}, {"connected_flats", cert.certificates.size()}});
  }
  r.artifacts["connected_flats"] = flats;
  r.outcome = PassIf(ok);
  r.summary = std::string("R^{k,1} = M_h and connected flats certified: ") + (ok ? "yes" : "no");
}

void ChecksH72(const RunContext& ctx, RunResult& r) {
  const auto spec = LinearSpec::Hyperconnectivity(7, 2);
  const Matroid m = LinearMatroid(spec, ctx.generic());
  CheckOptions options;
  options.mode = CheckOptions::Mode::kSampled;
  options.samples = 500;
  options.seed = ctx.seed;
  const CheckReport zero = ZeroExtensionCheck(m, spec.Host(), options);
  const CheckReport diamond = DiamondSplittingCheck(m, spec.Host(), options);
  r.artifacts["zero_extension"] = CheckReportToJson(zero);
  r.artifacts["diamond_splitting"] = CheckReportToJson(diamond);
  r.outcome = PassIf(zero.passed() && diamond.passed() && zero.instances >= 500 &&
                     diamond.instances >= 500);
  r.summary = "0-extension " + std::string(VerdictName(zero.verdict)) + " (" +
              std::to_string(zero.instances) + "), diamond splitting " +
              VerdictName(diamond.verdict) + " (" + std::to_string(diamond.instances) + ")";
}

void ChecksCircuits(const RunContext& ctx, RunResult& r) {
  const auto spec = LinearSpec::Hyperconnectivity(6, 2);
  const CheckReport c = Circuits2ConnectedCheck(LinearMatroid(spec, ctx.generic()), spec.Host());
  r.artifacts["report"] = CheckReportToJson(c);
  r.outcome = PassIf(c.passed());
  r.summary = std::to_string(c.instances) + " circuits of H(6,2), all 2-connected: " +
              (c.passed() ? "yes" : "no");
}

void ChecksCovering(const RunContext&, RunResult& r) {
  Json rows = Json::array();
  bool ok = true;
  struct Case {
    std::string family;
    int n;
    int cap;
  };
  for (const Case& c : {Case{"K2,3", 7, -1}, Case{"C5", 8, 6}}) {
    const HostGraph host = HostGraph::Complete(c.n);
    const CopyFamily x = ParseFamily(c.family, host);
    const ElevationChain chain = FreeElevation(BuildUniformMatroid(x, host.num_edges()), c.cap);
    const CheckReport cover = HasXCovering(chain.stages.back(), x);
    ok = ok && cover.passed();
    rows.push_back({{"family", c.family}, {"host", HostName(host)},
                    {"final_rank", chain.stages.back().rank()},
                    {"report", CheckReportToJson(cover)}});
  }
  r.artifacts["cases"] = rows;
  r.outcome = PassIf(ok);
  r.summary = std::string("free elevations have the X-covering property: ") + (ok ? "yes" : "no");
}

void ChecksSymmetry(const RunContext& ctx, RunResult& r) {
  const HostGraph k6 = HostGraph::Complete(6);
  const CopyFamily x = ParseFamily("C5", k6);
  const ElevationChain chain = FreeElevation(BuildUniformMatroid(x, k6.num_edges()));
  Json rows = Json::array();
  bool ok = true;
  CheckOptions options;
  options.seed = ctx.seed;
  for (const Matroid& stage : chain.stages) {
    const CheckReport s = SymmetryCheck(stage, k6, options);
    ok = ok && s.passed();
    rows.push_back({{"rank", stage.rank()}, {"report", CheckReportToJson(s)}});
  }
  r.artifacts["stages"] = rows;
  r.outcome = PassIf(ok);
  r.summary = std::to_string(chain.stages.size()) + " stage(s), all symmetric: " +
              (ok ? "yes" : "no");
}

void Submodular(const std::string& family_text, const CountFunction& f, const RunContext&,
                RunResult& r) {
  const HostGraph host = HostGraph::Complete(5);
  const CopyFamily x = ParseFamily(family_text, host);
  const SubmodularityReport scan = ValSubmodularityScan(x, host.num_edges(), true);
  const ValMatroid vm = BuildValMatroid(x, host.num_edges());
  const bool equal = Equal(vm.matroid, Induced(f, host));
  r.artifacts["checked"] = scan.checked;
  r.artifacts["violations"] = scan.violations.size();
  r.artifacts["exhaustive"] = scan.exhaustive;
  r.artifacts["equals_count_matroid"] = equal;
  r.artifacts["members_are_circuits"] = vm.members_are_circuits;
  r.outcome = PassIf(scan.exhaustive && scan.violations.empty() && equal);
  r.summary = std::to_string(scan.checked) + " local inequalities, " +
              std::to_string(scan.violations.size()) + " violations; val matroid = " + f.Name() +
              ": " + (equal ? "yes" : "no");
}

std::vector<ExperimentSpec> BuildRegistry() {
  using B = Basis;
  std::vector<ExperimentSpec> out;
  auto add = [&](std::string id, int criterion, std::string description, std::string expected,
                 Basis basis, std::string claim, std::function<void(const RunContext&, RunResult&)> run) {
    out.push_back({std::move(id), criterion, std::move(description), std::move(expected), basis,
                   std::move(claim), std::move(run)});
  };
  const CountFunction f11 = CountFunction::F(1, 1), f23 = CountFunction::F(2, 3),
                      f10 = CountFunction::F(1, 0), f22 = CountFunction::F(2, 2),
                      g110 = CountFunction::G(1, 1, 0);

  add("T-K3-unique-complete", 1, "val_K3 on E(K5) against graphic rank",
      "equal on all 1024 subsets", B::kTheorem,
      "the cycle matroid is the unique maximal K3-matroid; its rank is val_K3",
      [=](const RunContext& c, RunResult& r) { ValEqualsRank("K3", "complete:5", f11, c, r); });
  add("T-K4-unique-complete", 1, "val_K4 on E(K5) against the (2,3)-count matroid",
      "equal on all 1024 subsets", B::kTheorem,
      "M_f(2,3) is the unique maximal K4-matroid; its rank is val_K4",
      [=](const RunContext& c, RunResult& r) { ValEqualsRank("K4", "complete:5", f23, c, r); });
  add("T-K4minus-unique-complete", 1, "val_{K4-e} on E(K5) against the (1,0)-count matroid",
      "equal on all 1024 subsets", B::kTheorem,
      "M_f(1,0) is the unique maximal (K4-e)-matroid",
      [=](const RunContext& c, RunResult& r) { ValEqualsRank("K4-", "complete:5", f10, c, r); });
  add("T-C4-unique-complete", 1, "val_C4 on E(K5) against the even-cycle matroid",
      "equal on all 1024 subsets", B::kTheorem,
      "the even-cycle matroid M_g(1,1,0) is the unique maximal C4-matroid",
      [=](const RunContext& c, RunResult& r) { ValEqualsRank("C4", "complete:5", g110, c, r); });
  add("T-K23-unique-bipartite", 1, "val_K2,3 on E(K3,4) against the (1,0)-count matroid",
      "equal on all 4096 subsets", B::kTheorem,
      "M_f(1,0) is the unique maximal K2,3-matroid on K_{m,n}",
      [=](const RunContext& c, RunResult& r) {
        ValEqualsRank("K2,3", "bipartite:3,4", f10, c, r);
      });
  add("T-K5minus-unique-complete", 1, "val_{K5-e} on E(K6) against the (2,2)-count matroid",
      "equal on all 32768 subsets and every connected flat certified", B::kTheorem,
      "M_f(2,2) is the unique maximal (K5-e)-matroid",
      [=](const RunContext& c, RunResult& r) { ValEqualsRank("K5-", "complete:6", f22, c, r); });

  add("cert-soundness-fuzz", 2, "10^4 random (F, S) pairs over six families",
      "rank(F) <= val(F, S) always, with the equality side conditions", B::kTheorem,
      "r_M(F) <= val(F, S) for every X-matroid M and proper X-sequence S", CertificateFuzz);

  add("uniform-2K2-K5", 3, "val_{2K2}(E(K5)) and its val matroid", "val = 1, val matroid = U_1",
      B::kTheorem, "U_X is the unique maximal X-matroid for union-stable X",
      [](const RunContext& c, RunResult& r) { UniformVal("2K2", "complete:5", 1, 1, c, r); });
  add("uniform-P3-K4", 3, "val_{P3}(E(K4)) and its val matroid", "val = 2, val matroid = U_2",
      B::kTheorem, "U_X is the unique maximal X-matroid for union-stable X",
      [](const RunContext& c, RunResult& r) { UniformVal("P3", "complete:4", 2, 2, c, r); });
  add("uniform-K13-K5", 3, "U_{K1,3}(K5) against the val matroid", "val = 3, val matroid = U_X",
      B::kTheorem, "U_X is the unique maximal X-matroid for union-stable X",
      [](const RunContext& c, RunResult& r) { UniformVal("K1,3", "complete:5", 3, std::nullopt, c, r); });

  add("erection-oracle", 4, "free erection against the enumerated erections",
      "weak-order maximum equals the free erection; nontrivial ones truncate back",
      B::kImmediate, "the free erection is the weak-order maximum of all erections",
      ErectionOracle);

  add("nonunique-K23", 5, "U_{K2,3}(K7) against M_f(1,0)(K7)",
      "free erection trivial at rank 6; incomparable with witnesses", B::kTheorem,
      "there are two distinct maximal K2,3-matroids on K_n for n >= 7", NonuniqueK23);
  add("nonunique-C5", 5, "free elevation of U_C5(K8) against the cycle matroid",
      "final rank <= 6 < 7; graphic K8 is a C5-matroid", B::kTheorem,
      "there are two distinct maximal C_k-matroids on K_n", NonuniqueC5);
  add("nonunique-K4K23", 5, "M_g(1,1,-1)(K8) as a {K4,K2,3}-matroid",
      "X-matroid of rank 9; two disjoint C4 form a circuit", B::kTheorem,
      "M_g(1,1,-1) is a {K4,K2,3}-matroid that is not the unique maximal one", NonuniqueK4K23);

  add("linear-hyper", 6, "generic hyperconnectivity ranks", "dn - C(d+1,2)", B::kTheorem,
      "H_n^d has rank dn - C(d+1,2)", [](const RunContext& c, RunResult& r) {
        std::vector<std::pair<LinearSpec, int>> cases;
        for (auto [d, n] : {std::pair{1, 4}, {2, 6}, {2, 7}, {3, 8}}) {
          cases.emplace_back(LinearSpec::Hyperconnectivity(n, d), d * n - Choose2(d + 1));
        }
        LinearRanks(cases, c, r);
      });
  add("linear-sym", 6, "generic symmetric-completion ranks", "dn - C(d,2)", B::kTheorem,
      "I_n^d has rank dn - C(d,2)", [](const RunContext& c, RunResult& r) {
        LinearRanks({{LinearSpec::SymmetricCompletion(6, 2), 11},
                     {LinearSpec::SymmetricCompletion(7, 2), 13}},
                    c, r);
      });
  add("linear-biri", 6, "generic birigidity ranks", "lm + kn - kl", B::kTheorem,
      "R^{k,l}_{m,n} has rank lm + kn - kl", [](const RunContext& c, RunResult& r) {
        LinearRanks({{LinearSpec::Birigidity(3, 3, 2, 1), 7},
                     {LinearSpec::Birigidity(3, 3, 2, 2), 8},
                     {LinearSpec::Birigidity(4, 4, 2, 2), 12}},
                    c, r);
      });
  add("linear-rigidity-planar", 6, "planar rigidity on every subset of E(K5)",
      "equal to the (2,3) pebble rank", B::kTheorem, "R_2(K_n) = M_f(2,3)(K_n)", LinearRigidity);
  add("linear-circuits", 6, "circuit checks in the generic matroids",
      "K4, K3,3 in H(6,2); K3,3 in I(6,2); rooted K3,2 in R^{2,1}; K3,3 in R^{2,2}",
      B::kTheorem, "H is a {K_{d+2},K_{d+1,d+1}}-matroid; K_{k+1,l+1} is a circuit of R^{k,l}",
      LinearCircuits);

  add("picture-lifting", 7, "R^{k,1} against M_h on K2,3 and K3,3, k = 1, 2",
      "equal on all subsets; connected flats certified for rooted K_{k+1,2}", B::kTheorem,
      "M_h is the unique maximal rooted K_{k+1,2}-matroid", PictureLifting);

  add("checks-H72-extensions", 8, "sampled 0-extension and diamond splitting on H(7,2)",
      "zero failures in 500 instances each", B::kTheorem,
      "H_n^2 has the 0-extension and diamond splitting properties", ChecksH72);
  add("checks-H62-circuits", 8, "2-connectivity of the circuits of H(6,2)", "all 2-connected",
      B::kTheorem, "circuits of a K4-matroid with the 0-extension property are 2-connected",
      ChecksCircuits);
  add("checks-covering", 8, "X-covering of the free elevations of U_{K2,3}(K7) and U_C5(K8)",
      "pass", B::kTheorem, "a free elevation of U_X has the X-covering property", ChecksCovering);
  add("checks-symmetry-C5-K6", 8, "symmetry of each free-elevation stage of U_C5(K6)", "pass",
      B::kTheorem, "the free elevation of a symmetric matroid is symmetric", ChecksSymmetry);

  add("submod-K3-K5", 9, "exhaustive submodularity scan of val_K3 on E(K5)",
      "zero violations; val matroid = graphic", B::kTheorem,
      "val_X submodular implies a unique maximal X-matroid with rank val_X",
      [=](const RunContext& c, RunResult& r) { Submodular("K3", f11, c, r); });
  add("submod-K4-K5", 9, "exhaustive submodularity scan of val_K4 on E(K5)",
      "zero violations; val matroid = M_f(2,3)", B::kTheorem,
      "val_X submodular implies a unique maximal X-matroid with rank val_X",
      [=](const RunContext& c, RunResult& r) { Submodular("K4", f23, c, r); });
  return out;
}

}  // namespace

const char* OutcomeName(Outcome o) {
  switch (o) {
    case Outcome::kPass:
      return "pass";
    case Outcome::kFail:
      return "fail";
    case Outcome::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

const char* BasisName(Basis b) {
  switch (b) {
    case Basis::kTheorem:
      return "theorem";
    case Basis::kImmediate:
      return "immediate";
    case Basis::kComputed:
      return "computed";
  }
  return "?";
}

const std::vector<ExperimentSpec>& Registry() {
  static const std::vector<ExperimentSpec> registry = BuildRegistry();
  return registry;
}

RunResult RunExperiment(const ExperimentSpec& spec, const RunContext& context) {
  RunResult r;
  r.id = spec.id;
  r.criterion = spec.criterion;
  r.seed = context.seed;
  r.artifacts = Json::object();
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.run(context, r);
  } catch (const Error& e) {
    r.outcome = e.kind() == ErrorKind::kBudgetExceeded ? Outcome::kInconclusive : Outcome::kFail;
    r.summary = e.what();
    r.artifacts["error"] = e.what();
  } catch (const std::exception& e) {
    r.outcome = Outcome::kFail;
    r.summary = e.what();
    r.artifacts["error"] = e.what();
  }
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<RunResult> ReproduceAll(const std::string& filter, const RunContext& context,
                                    int threads) {
  std::vector<const ExperimentSpec*> selected;
  for (const auto& spec : Registry()) {
    if (filter.empty() || fnmatch(filter.c_str(), spec.id.c_str(), 0) == 0) {
      selected.push_back(&spec);
    }
  }
  std::vector<RunResult> results(selected.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next++; i < selected.size(); i = next++) {
      results[i] = RunExperiment(*selected[i], context);
    }
  };
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(selected.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

Json ArtifactsJson(const std::vector<RunResult>& results) {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["kind"] = "run";
  Json rows = Json::array();
  for (const RunResult& r : results) {
    rows.push_back({{"id", r.id},
                    {"criterion", r.criterion},
                    {"outcome", OutcomeName(r.outcome)},
                    {"seed", r.seed},
                    {"summary", r.summary},
                    {"artifacts", r.artifacts}});
  }
  j["results"] = rows;
  return j;
}

Json ResultsJson(const std::vector<RunResult>& results) {
  Json j = ArtifactsJson(results);
  std::map<std::string, int> tally = {{"pass", 0}, {"fail", 0}, {"inconclusive", 0}};
  for (size_t i = 0; i < results.size(); ++i) {
    j["results"][i]["wall_seconds"] = results[i].wall_seconds;
    ++tally[OutcomeName(results[i].outcome)];
  }
  j["tally"] = tally;
  return j;
}

std::vector<std::string> LintRegistry(const std::vector<ExperimentSpec>& registry) {
  std::vector<std::string> problems;
  std::set<std::string> seen;
  const std::regex id_shape("[A-Za-z0-9]+(-[A-Za-z0-9]+)*");
  for (const auto& spec : registry) {
    if (!std::regex_match(spec.id, id_shape)) problems.push_back("malformed id '" + spec.id + "'");
    if (!seen.insert(spec.id).second) problems.push_back("duplicate id '" + spec.id + "'");
    if (spec.criterion < 1 || spec.criterion > 9) {
      problems.push_back(spec.id + ": criterion " + std::to_string(spec.criterion) + " out of range");
    }
    if (spec.description.empty()) problems.push_back(spec.id + ": no description");
    if (spec.expected.empty()) problems.push_back(spec.id + ": no expected outcome");
    if (spec.claim.empty()) problems.push_back(spec.id + ": no claim for its " + BasisName(spec.basis) + " basis");
    if (!spec.run) problems.push_back(spec.id + ": no runner");
  }
  for (int c = 1; c <= 9; ++c) {
    bool any = false;
    for (const auto& spec : registry) any = any || spec.criterion == c;
    if (!any) problems.push_back("criterion " + std::to_string(c) + " has no experiment");
  }
  return problems;
}

}  // namespace xmatroid
