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

#include "xmatroid/cli.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xmatroid/checks.h"
#include "xmatroid/errors.h"
#include "xmatroid/erection.h"
#include "xmatroid/json_io.h"
#include "xmatroid/parse.h"
#include "xmatroid/registry.h"
#include "xmatroid/sequence.h"

namespace xmatroid {

namespace {

struct Flags {
  std::string host;
  std::string family;
  std::string matroid;
  std::string other;
  std::string target = "all";
  std::string property;
  std::string mode = "auto";
  std::string format = "json";
  std::string filter;
  std::string file;
  uint64_t seed = 1;
  int trials = 3;
  uint64_t prime = kMersenne61;
  int64_t budget_states = int64_t{1} << 23;
  int64_t samples = 500;
  int threads = 1;
  int rank_cap = -1;
  int max_size = 10;
  int s = 0;
  int delta = 0;
  int n = 0;
  bool timings = false;
};

int UsageExit(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kBudgetExceeded:
      return kExitInconclusive;
    case ErrorKind::kMalformedInput:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kGroundMismatch:
    case ErrorKind::kPatternTooLarge:
    case ErrorKind::kNotUniform:
    case ErrorKind::kNotUnionStable:
    case ErrorKind::kAmbiguousUniformSize:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

void Require(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(ErrorKind::kMalformedInput, std::string(flag) + " is required");
}

GenericOptions Generic(const Flags& f) { return {f.trials, f.seed, f.prime}; }

int Verdict(const CheckReport& r) {
  switch (r.verdict) {
    case Verdict::kPass:
      return kExitPass;
    case Verdict::kFail:
      return kExitFail;
    case Verdict::kInconclusive:
      return kExitInconclusive;
  }
  return kExitFail;
}

int RunOutcomes(const std::vector<RunResult>& results) {
  int code = kExitPass;
  for (const auto& r : results) {
    if (r.outcome == Outcome::kFail) return kExitFail;
    if (r.outcome == Outcome::kInconclusive) code = kExitInconclusive;
  }
  return code;
}

int Rank(const Flags& f, std::ostream& out) {
  Require(f.host, "--host");
  Require(f.matroid, "--matroid");
  const HostGraph host = ParseHost(f.host);
  const Matroid m = ParseMatroid(f.matroid, host, f.family, Generic(f));
  const ElementSet target = ParseTarget(f.target, host);
  Json j = {{"schema", kSchemaVersion}, {"kind", "rank"}, {"host", f.host},
            {"matroid", f.matroid},     {"target", ToJson(target)},
            {"rank", m.Rank(target)}};
  out << Dump(j);
  return kExitPass;
}

int Val(const Flags& f, std::ostream& out) {
  Require(f.host, "--host");
  Require(f.family, "--family");
  const HostGraph host = ParseHost(f.host);
  const CopyFamily family = ParseFamily(f.family, host);
  const ElementSet target = ParseTarget(f.target, host);
  ValOptions options;
  options.max_states = f.budget_states;
  const ValResult r = ComputeVal(family, target, options);
  Json j = {{"schema", kSchemaVersion},
            {"kind", "val"},
            {"value", r.value},
            {"exact", r.exact},
            {"states", r.stats.states},
            {"certificate", CertificateToJson(r.witness, f.host, f.family, family)}};
  out << Dump(j);
  return r.exact ? kExitPass : kExitInconclusive;
}

int Certify(const Flags& f, std::ostream& out) {
  Require(f.host, "--host");
  Require(f.family, "--family");
  Require(f.matroid, "--matroid");
  const HostGraph host = ParseHost(f.host);
  const CopyFamily family = ParseFamily(f.family, host);
  const Matroid m = ParseMatroid(f.matroid, host, f.family, Generic(f));
  const FlatCertification c = CertifyConnectedFlats(m, family, f.budget_states);
  Json certs = Json::array();
  for (const auto& cert : c.certificates) {
    certs.push_back(CertificateToJson(cert, f.host, f.family, family));
  }
  Json j = {{"schema", kSchemaVersion}, {"kind", "flat_certification"},
            {"ok", c.ok},               {"exact", c.exact},
            {"certificates", certs}};
  if (c.failed_flat) {
    j["failed_flat"] = ToJson(*c.failed_flat);
    j["failed_value"] = c.failed_value;
    j["failed_rank"] = c.failed_rank;
  }
  out << Dump(j);
  if (c.ok) return kExitPass;
  return c.exact ? kExitFail : kExitInconclusive;
}

int Erect(const Flags& f, std::ostream& out) {
  Require(f.host, "--host");
  Require(f.matroid, "--matroid");
  const HostGraph host = ParseHost(f.host);
  const ErectionResult r = FreeErection(ParseMatroid(f.matroid, host, f.family, Generic(f)));
  Json j = {{"schema", kSchemaVersion},
            {"kind", "erection"},
            {"trivial", r.trivial},
            {"matroid", MatroidToJson(r.matroid)}};
  out << Dump(j);
  return kExitPass;
}

int Elevate(const Flags& f, std::ostream& out) {
  Require(f.host, "--host");
  Require(f.matroid, "--matroid");
  const HostGraph host = ParseHost(f.host);
  const ElevationChain chain =
      FreeElevation(ParseMatroid(f.matroid, host, f.family, Generic(f)), f.rank_cap);
  out << Dump(ChainToJson(chain));
  return kExitPass;
}

int Compare(const Flags& f, std::ostream& out) {
  Require(f.host, "--host");
  Require(f.matroid, "--matroid");
  Require(f.other, "--other");
  const HostGraph host = ParseHost(f.host);
  const Matroid a = ParseMatroid(f.matroid, host, f.family, Generic(f));
  const Matroid b = ParseMatroid(f.other, host, f.family, Generic(f));
  Json j = CompareToJson(WeakOrderCompare(a, b));
  j["first"] = f.matroid;
  j["second"] = f.other;
  out << Dump(j);
  return kExitPass;
}

int Check(const Flags& f, std::ostream& out) {
  Require(f.host, "--host");
  Require(f.matroid, "--matroid");
  Require(f.property, "--property");
  const HostGraph host = ParseHost(f.host);
  const Matroid m = ParseMatroid(f.matroid, host, f.family, Generic(f));
  CheckOptions options;
  options.seed = f.seed;
  options.samples = f.samples;
  if (f.mode == "exhaustive") {
    options.mode = CheckOptions::Mode::kExhaustive;
  } else if (f.mode == "sampled") {
    options.mode = CheckOptions::Mode::kSampled;
  } else if (f.mode != "auto") {
    throw Error(ErrorKind::kMalformedInput, "unknown mode '" + f.mode + "'");
  }
  auto family = [&]() {
    Require(f.family, "--family");
    return ParseFamily(f.family, host);
  };
  CheckReport r;
  const std::string& p = f.property;
  if (p == "isXMatroid") {
    r = IsXMatroid(m, family());
  } else if (p == "isXCyclic") {
    r = IsXCyclic(m, family());
  } else if (p == "hasXCovering") {
    r = HasXCovering(m, family());
  } else if (p == "zeroExtension") {
    r = ZeroExtensionCheck(m, host, options);
  } else if (p == "diamondSplitting") {
    r = DiamondSplittingCheck(m, host, options);
  } else if (p == "rankBound") {
    r = RankBoundCheck(m, f.s, f.delta, f.n > 0 ? f.n : host.num_vertices());
  } else if (p == "degreeBound") {
    r = DegreeBoundCheck(m, host, ParseTarget(f.target, host));
  } else if (p == "circuits2Connected") {
    r = Circuits2ConnectedCheck(m, host, f.max_size);
  } else if (p == "symmetry") {
    r = SymmetryCheck(m, host, options);
  } else {
    throw Error(ErrorKind::kMalformedInput, "unknown property '" + p + "'");
  }
  out << Dump(CheckReportToJson(r));
  return Verdict(r);
}

int Reproduce(const Flags& f, std::ostream& out) {
  RunContext ctx;
  ctx.seed = f.seed;
  ctx.trials = f.trials;
  ctx.prime = f.prime;
  ctx.budget_states = f.budget_states;
  PrimeField check(f.prime);
  if (f.trials < 3) throw Error(ErrorKind::kInvalidArgument, "--trials must be at least 3");
  const auto results = ReproduceAll(f.filter, ctx, f.threads);
  if (results.empty()) {
    throw Error(ErrorKind::kMalformedInput, "no experiment matches '" + f.filter + "'");
  }
  out << Dump(f.timings ? ResultsJson(results) : ArtifactsJson(results));
  return RunOutcomes(results);
}

int Verify(const Flags& f, std::ostream& out) {
  std::ifstream in(f.file);
  if (!in) throw Error(ErrorKind::kMalformedInput, "cannot read " + f.file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const CertificateCheck c = VerifyCertificateJson(ParseJsonText(buffer.str()));
  Json j = {{"schema", kSchemaVersion}, {"kind", "verification"}, {"ok", c.ok},
            {"reason", c.reason}};
  out << Dump(j);
  return c.ok ? kExitPass : kExitFail;
}

int Lint(std::ostream& out) {
  const auto problems = LintRegistry(Registry());
  Json bases = Json::object();
  Json entries = Json::array();
  for (const auto& spec : Registry()) {
    bases[BasisName(spec.basis)] = bases.value(BasisName(spec.basis), 0) + 1;
    entries.push_back({{"id", spec.id},
                       {"criterion", spec.criterion},
                       {"basis", BasisName(spec.basis)},
                       {"expected", spec.expected},
                       {"claim", spec.claim}});
  }
  Json j = {{"schema", kSchemaVersion}, {"kind", "lint"}, {"problems", problems},
            {"bases", bases},           {"entries", entries}};
  out << Dump(j);
  return problems.empty() ? kExitPass : kExitFail;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"X-matroid toolkit: val certificates, erections, generic matroids, checks"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--host", f.host, "complete:n or bipartite:m,n");
    sub->add_option("--family", f.family, "patterns joined by '+', or rooted:Ks,t");
    sub->add_option("--matroid", f.matroid, "graphic, count:f(a,b), linear:hyper:n=6,d=2, ...");
    sub->add_option("--target", f.target, "all, or comma-separated edge labels or ids");
    sub->add_option("--seed", f.seed, "random seed");
    sub->add_option("--trials", f.trials, "generic-rank trials (>= 3)");
    sub->add_option("--field-prime", f.prime, "prime modulus in [2^31, 2^63)");
    sub->add_option("--budget-states", f.budget_states, "val search state budget");
    sub->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json"}));
  };

  auto* rank = app.add_subcommand("rank", "rank of a target set");
  auto* val = app.add_subcommand("val", "val_X of a target with a certificate");
  auto* certify = app.add_subcommand("certify", "certificates for every connected flat");
  auto* erect = app.add_subcommand("erect", "free erection");
  auto* elevate = app.add_subcommand("elevate", "free elevation chain");
  auto* compare = app.add_subcommand("compare", "weak-order comparison");
  auto* check = app.add_subcommand("check", "property check");
  auto* reproduce = app.add_subcommand("reproduce", "run registry experiments");
  auto* verify = app.add_subcommand("verify", "re-evaluate a certificate file");
  auto* lint = app.add_subcommand("lint", "audit the experiment registry");
  for (auto* sub : {rank, val, certify, erect, elevate, compare, check, reproduce}) common(sub);
  elevate->add_option("--rank-cap", f.rank_cap, "stop after the first stage above this rank");
  compare->add_option("--other", f.other, "second matroid");
  check->add_option("--property", f.property, "property name");
  check->add_option("--mode", f.mode, "auto, exhaustive or sampled");
  check->add_option("--samples", f.samples, "sampled instances");
  check->add_option("--max-size", f.max_size, "largest circuit for circuits2Connected");
  check->add_option("--s", f.s, "pattern vertices for rankBound");
  check->add_option("--delta", f.delta, "pattern minimum degree for rankBound");
  check->add_option("--n", f.n, "host vertices for rankBound");
  reproduce->add_option("filter", f.filter, "experiment id or glob");
  reproduce->add_flag("--timings", f.timings, "include wall times");
  verify->add_option("file", f.file, "certificate JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*rank) return Rank(f, out);
    if (*val) return Val(f, out);
    if (*certify) return Certify(f, out);
    if (*erect) return Erect(f, out);
    if (*elevate) return Elevate(f, out);
    if (*compare) return Compare(f, out);
    if (*check) return Check(f, out);
    if (*reproduce) return Reproduce(f, out);
    if (*verify) return Verify(f, out);
    if (*lint) return Lint(out);
  } catch (const Error& e) {
    out << Dump({{"schema", kSchemaVersion},
                 {"kind", "error"},
                 {"error_kind", ErrorKindName(e.kind())},
                 {"message", e.what()}});
    err << e.what() << "\n";
    return UsageExit(e.kind());
  }
  return kExitUsage;
}

}  // namespace xmatroid
