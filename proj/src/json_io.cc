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

#include "xmatroid/json_io.h"

#include <vector>

#include "xmatroid/errors.h"
#include "xmatroid/parse.h"

namespace xmatroid {

namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::kMalformedInput, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int IntField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_number_integer()) {
    throw Error(ErrorKind::kMalformedInput, std::string("field '") + key + "' is not an integer");
  }
  return v.get<int>();
}

void RequireKind(const Json& j, const char* kind) {
  const Json& k = Field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    throw Error(ErrorKind::kMalformedInput, std::string("expected a ") + kind + " document");
  }
}

Json Stamp(const char* kind) {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

}  // namespace

Json ToJson(ElementSet s) {
  Json out = Json::array();
  for (int e : s) out.push_back(e);
  return out;
}

ElementSet ElementSetFromJson(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::kMalformedInput, "element set is not an array");
  ElementSet out;
  for (const Json& v : j) {
    if (!v.is_number_integer() || v.get<int64_t>() < 0 || v.get<int64_t>() >= kMaxElements) {
      throw Error(ErrorKind::kMalformedInput, "bad element id " + v.dump());
    }
    out = out.With(v.get<int>());
  }
  return out;
}

Json CertificateToJson(const Certificate& cert, const std::string& host,
                       const std::string& family, const CopyFamily& members) {
  Json j = Stamp("certificate");
  j["host"] = host;
  j["family"] = family;
  j["family_hash"] = FamilyHash(members);
  j["target"] = ToJson(cert.target);
  j["members"] = cert.members;
  Json seq = Json::array();
  for (ElementSet s : cert.sets) seq.push_back(ToJson(s));
  j["sequence"] = seq;
  j["value"] = cert.value;
  return j;
}

CertificateCheck VerifyCertificateJson(const Json& doc) {
  CertificateCheck out;
  // A val result wraps its certificate.
  const Json& j = doc.is_object() && doc.contains("certificate") ? doc.at("certificate") : doc;
  RequireKind(j, "certificate");
  Certificate cert;
  cert.target = ElementSetFromJson(Field(j, "target"));
  for (const Json& s : Field(j, "sequence")) cert.sets.push_back(ElementSetFromJson(s));
  cert.value = IntField(j, "value");
  if (j.contains("members")) {
    for (const Json& v : j.at("members")) {
      if (!v.is_number_integer()) throw Error(ErrorKind::kMalformedInput, "bad member index");
      cert.members.push_back(v.get<int>());
    }
  }
  const int first_bad = FirstImproperIndex(cert.sets);
  if (first_bad >= 0) {
    out.reason = "sequence is improper at position " + std::to_string(first_bad);
    return out;
  }
  const int value = EvalVal(cert.target, cert.sets);
  if (value != cert.value) {
    out.reason = "value re-evaluates to " + std::to_string(value) + ", listed " +
                 std::to_string(cert.value);
    return out;
  }
  if (j.contains("host") && j.contains("family")) {
    const HostGraph host = ParseHost(j.at("host").get<std::string>());
    if (!cert.target.IsSubsetOf(host.AllEdges())) {
      out.reason = "target is not a set of host edges";
      return out;
    }
    const CopyFamily family = ParseFamily(j.at("family").get<std::string>(), host);
    if (j.contains("family_hash") && j.at("family_hash") != FamilyHash(family)) {
      out.reason = "family hash differs from the rebuilt family";
      return out;
    }
    for (size_t i = 0; i < cert.sets.size(); ++i) {
      const bool indexed = i < cert.members.size() && cert.members[i] >= 0 &&
                           cert.members[i] < family.size();
      if (indexed ? family.members[cert.members[i]] != cert.sets[i]
                  : !family.Contains(cert.sets[i])) {
        out.reason = "set " + std::to_string(i) + " is not the listed family member";
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

Json MatroidToJson(const Matroid& m) {
  const Matroid e = m.is_explicit() ? m : ToExplicit(m);
  Json j = Stamp("matroid");
  j["ground_size"] = e.ground_size();
  j["rank"] = e.rank();
  Json circuits = Json::array();
  for (ElementSet c : e.nonspanning_circuits()) circuits.push_back(ToJson(c));
  j["circuits"] = circuits;
  return j;
}

Matroid MatroidFromJson(const Json& j) {
  RequireKind(j, "matroid");
  const int n = IntField(j, "ground_size");
  const int r = IntField(j, "rank");
  if (n < 0 || n > kMaxElements || r < 0 || r > n) {
    throw Error(ErrorKind::kMalformedInput, "bad ground size or rank");
  }
  std::vector<ElementSet> circuits;
  for (const Json& c : Field(j, "circuits")) circuits.push_back(ElementSetFromJson(c));
  try {
    return Matroid::Explicit(n, r, std::move(circuits));
  } catch (const Error& e) {
    throw Error(ErrorKind::kMalformedInput, std::string("matroid document: ") + e.what());
  }
}

Json ChainToJson(const ElevationChain& chain) {
  Json j = Stamp("elevation");
  j["complete"] = chain.complete;
  Json stages = Json::array();
  Json ranks = Json::array();
  for (const Matroid& m : chain.stages) {
    stages.push_back(MatroidToJson(m));
    ranks.push_back(m.rank());
  }
  j["ranks"] = ranks;
  j["stages"] = stages;
  return j;
}

Json CheckReportToJson(const CheckReport& r) {
  Json j = Stamp("check");
  j["property"] = r.property;
  j["verdict"] = VerdictName(r.verdict);
  j["coverage"] = CoverageName(r.coverage);
  j["seed"] = r.seed;
  j["instances"] = r.instances;
  j["witness"] = r.witness ? ToJson(*r.witness) : Json();
  j["operation"] = r.operation;
  j["result"] = r.result ? ToJson(*r.result) : Json();
  j["detail"] = r.detail;
  return j;
}

Json CompareToJson(const CompareResult& r) {
  Json j = Stamp("comparison");
  j["relation"] = RelationName(r.relation);
  j["independent_in_first"] =
      r.independent_in_first ? ToJson(*r.independent_in_first) : Json();
  j["independent_in_second"] =
      r.independent_in_second ? ToJson(*r.independent_in_second) : Json();
  return j;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

Json ParseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kMalformedInput, std::string("JSON: ") + e.what());
  }
}

}  // namespace xmatroid
